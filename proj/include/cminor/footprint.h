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

// Footprints: per-byte fractional permissions with a partial, commutative
// and associative join. A share of 1 permits stores, any positive share
// permits loads.

#ifndef CMINOR_FOOTPRINT_H_
#define CMINOR_FOOTPRINT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cminor/values.h"

namespace cminor {

// Rational number in [0, 1], always stored in lowest terms.
class Share {
 public:
  constexpr Share() = default;
  // Throws Error unless 0 <= num <= den and den > 0.
  Share(std::uint64_t num, std::uint64_t den);

  static Share zero() { return Share(); }
  static Share full() { return Share(1, 1); }
  static Share half() { return Share(1, 2); }

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_full() const { return num_ == den_; }

  // q / 2, the canonical split.
  Share halved() const;
  // None when the sum exceeds 1.
  std::optional<Share> plus(Share other) const;
  std::string to_string() const;

  friend bool operator==(Share, Share) = default;
  friend std::strong_ordering operator<=>(Share a, Share b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

struct Address {
  BlockId block;
  std::int64_t offset = 0;

  friend constexpr auto operator<=>(const Address&, const Address&) = default;
};

enum class Access : std::uint8_t { kLoad, kStore };

class Footprint {
 public:
  using Map = std::map<Address, Share>;

  Footprint() = default;

  // Zero shares are dropped so the representation stays canonical.
  void set(Address a, Share s);
  Share share_at(Address a) const;
  const Map& entries() const { return perms_; }
  bool empty() const { return perms_.empty(); }
  std::size_t size() const { return perms_.size(); }

  friend bool operator==(const Footprint&, const Footprint&) = default;

 private:
  Map perms_;
};

// Per-address sum; None if any address would exceed a full share.
std::optional<Footprint> fp_join(const Footprint& a, const Footprint& b);

// True iff addr is a pointer and every byte of the chunk range has a
// positive share (load) or a full share (store).
bool allows(const Footprint& fp, const Value& addr, Chunk ch, Access mode);

// fp_join with the rectangle {(b, k) -> s | lo <= k < hi}.
std::optional<Footprint> fp_grant(const Footprint& fp, BlockId b,
                                  std::int64_t lo, std::int64_t hi, Share s);

// Removes (b, lo..hi-1). Throws Error when a share in range is not full.
Footprint fp_revoke(const Footprint& fp, BlockId b, std::int64_t lo,
                    std::int64_t hi);

// Restriction of fp to a single block.
Footprint fp_restrict_block(const Footprint& fp, BlockId b);

}  // namespace cminor

#endif  // CMINOR_FOOTPRINT_H_
