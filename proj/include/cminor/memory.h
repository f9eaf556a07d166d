// Copyright 2026 The Cminor Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMINOR_MEMORY_H_
#define CMINOR_MEMORY_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cminor/values.h"

namespace cminor {

// One byte of a block. A store of chunk `ch` writes Datum cells with indices
// 0..size-1, each remembering the whole stored value.
struct MemCell {
  bool initialized = false;
  std::uint8_t index = 0;
  Chunk chunk = Chunk::kInt32;
  Value value;

  static MemCell datum(std::uint8_t index, const Value& v, Chunk ch) {
    return MemCell{true, index, ch, v};
  }

  friend bool operator==(const MemCell&, const MemCell&) = default;
};

struct Block {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<MemCell> cells;  // cells[k] is offset lo + k
  bool live = true;

  const MemCell& at(std::int64_t offset) const { return cells[offset - lo]; }
  friend bool operator==(const Block&, const Block&) = default;
};

// Block-structured memory with value semantics: copies are independent
// snapshots. The const/functional operations below never mutate `*this`;
// the *_in_place variants exist for the interpreter's hot loop.
class Memory {
 public:
  Memory() = default;

  BlockId next_block() const {
    return BlockId{static_cast<std::uint32_t>(blocks_.size())};
  }
  bool contains(BlockId b) const { return b.index < blocks_.size(); }
  bool is_live(BlockId b) const { return contains(b) && blocks_[b.index].live; }
  const Block& block(BlockId b) const { return blocks_.at(b.index); }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Throws Error("bad bounds") when lo > hi.
  std::pair<Memory, BlockId> alloc(std::int64_t lo, std::int64_t hi) const;
  // Throws Error("double free") when b is unknown or already dead.
  Memory free(BlockId b) const;

  // None for a non-pointer address, a dead or unknown block, an out of
  // bounds range or a misaligned offset. Some(Vundef) for uninitialized or
  // chunk-mismatched contents.
  std::optional<Value> load(Chunk ch, const Value& addr) const;
  std::optional<Memory> store(Chunk ch, const Value& addr, const Value& v) const;

  BlockId alloc_in_place(std::int64_t lo, std::int64_t hi);
  void free_in_place(BlockId b);
  bool store_in_place(Chunk ch, const Value& addr, const Value& v);

  // True when a chunk access at `addr` is legal (pointer to a live block,
  // in bounds, aligned).
  bool valid_access(Chunk ch, const Value& addr) const;

  friend bool operator==(const Memory&, const Memory&) = default;

 private:
  std::vector<Block> blocks_;
};

}  // namespace cminor

#endif  // CMINOR_MEMORY_H_
