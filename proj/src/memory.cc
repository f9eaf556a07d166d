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

#include "cminor/memory.h"

namespace cminor {

std::pair<Memory, BlockId> Memory::alloc(std::int64_t lo, std::int64_t hi) const {
  Memory m = *this;
  BlockId b = m.alloc_in_place(lo, hi);
  return {std::move(m), b};
}

Memory Memory::free(BlockId b) const {
  Memory m = *this;
  m.free_in_place(b);
  return m;
}

BlockId Memory::alloc_in_place(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error("bad bounds");
  BlockId b = next_block();
  Block blk;
  blk.lo = lo;
  blk.hi = hi;
  blk.cells.resize(static_cast<std::size_t>(hi - lo));
  blocks_.push_back(std::move(blk));
  return b;
}

void Memory::free_in_place(BlockId b) {
  if (!is_live(b)) throw Error("double free");
  blocks_[b.index].live = false;
}

bool Memory::valid_access(Chunk ch, const Value& addr) const {
  if (!addr.is_ptr()) return false;
  BlockId b = addr.ptr_block();
  if (!is_live(b)) return false;
  const Block& blk = blocks_[b.index];
  std::int64_t ofs = addr.ptr_offset().signed_value();
  auto size = static_cast<std::int64_t>(chunk_size(ch));
  if (ofs % size != 0) return false;
  return blk.lo <= ofs && ofs + size <= blk.hi;
}

std::optional<Value> Memory::load(Chunk ch, const Value& addr) const {
  if (!valid_access(ch, addr)) return std::nullopt;
  const Block& blk = blocks_[addr.ptr_block().index];
  std::int64_t ofs = addr.ptr_offset().signed_value();
  std::size_t size = chunk_size(ch);
  const MemCell& first = blk.at(ofs);
  if (!first.initialized || first.index != 0 || first.chunk != ch) {
    return Value::undef();
  }
  for (std::size_t k = 1; k < size; ++k) {
    const MemCell& c = blk.at(ofs + static_cast<std::int64_t>(k));
    if (!c.initialized || c.index != k || c.chunk != ch || !(c.value == first.value)) {
      return Value::undef();
    }
  }
  return first.value;
}

std::optional<Memory> Memory::store(Chunk ch, const Value& addr,
                                     const Value& v) const {
  if (!valid_access(ch, addr)) return std::nullopt;
  Memory m = *this;
  m.store_in_place(ch, addr, v);
  return m;
}

bool Memory::store_in_place(Chunk ch, const Value& addr, const Value& v) {
  if (!valid_access(ch, addr)) return false;
  Block& blk = blocks_[addr.ptr_block().index];
  std::int64_t ofs = addr.ptr_offset().signed_value();
  Value stored = normalize_for_chunk(ch, v);
  std::size_t size = chunk_size(ch);
  for (std::size_t k = 0; k < size; ++k) {
    blk.cells[static_cast<std::size_t>(ofs - blk.lo) + k] =
        MemCell::datum(static_cast<std::uint8_t>(k), stored, ch);
  }
  return true;
}

}  // namespace cminor
