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

#include "cminor/footprint.h"

#include <limits>
#include <numeric>

namespace cminor {

using u128 = unsigned __int128;

Share::Share(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
  if (den == 0 || num > den) throw Error("share outside [0, 1]");
  std::uint64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ /= g;
  den_ /= g;
  if (num_ == 0) den_ = 1;
}

Share Share::halved() const {
  if (num_ == 0) return *this;
  if (num_ % 2 == 0) return Share(num_ / 2, den_);
  if (den_ > std::numeric_limits<std::uint64_t>::max() / 2) {
    throw Error("share denominator overflow");
  }
  return Share(num_, den_ * 2);
}

std::optional<Share> Share::plus(Share other) const {
  u128 n = u128(num_) * other.den_ + u128(other.num_) * den_;
  u128 d = u128(den_) * other.den_;
  if (n > d) return std::nullopt;
  u128 a = n, b = d;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  n /= a;
  d /= a;
  if (n == 0) return Share();
  if (d > std::numeric_limits<std::uint64_t>::max()) {
    throw Error("share denominator overflow");
  }
  return Share(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
}

std::string Share::to_string() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(Share a, Share b) {
  return u128(a.num_) * b.den_ <=> u128(b.num_) * a.den_;
}

void Footprint::set(Address a, Share s) {
  if (s.is_zero()) {
    perms_.erase(a);
  } else {
    perms_[a] = s;
  }
}

Share Footprint::share_at(Address a) const {
  auto it = perms_.find(a);
  return it == perms_.end() ? Share::zero() : it->second;
}

std::optional<Footprint> fp_join(const Footprint& a, const Footprint& b) {
  const Footprint& big = a.size() >= b.size() ? a : b;
  const Footprint& small = a.size() >= b.size() ? b : a;
  Footprint out = big;
  for (const auto& [addr, share] : small.entries()) {
    auto sum = out.share_at(addr).plus(share);
    if (!sum) return std::nullopt;
    out.set(addr, *sum);
  }
  return out;
}

bool allows(const Footprint& fp, const Value& addr, Chunk ch, Access mode) {
  if (!addr.is_ptr()) return false;
  std::int64_t base = addr.ptr_offset().signed_value();
  auto size = static_cast<std::int64_t>(chunk_size(ch));
  for (std::int64_t k = base; k < base + size; ++k) {
    Share s = fp.share_at(Address{addr.ptr_block(), k});
    if (mode == Access::kStore ? !s.is_full() : s.is_zero()) return false;
  }
  return true;
}

std::optional<Footprint> fp_grant(const Footprint& fp, BlockId b,
                                  std::int64_t lo, std::int64_t hi, Share s) {
  Footprint out = fp;
  if (s.is_zero()) return out;
  for (std::int64_t k = lo; k < hi; ++k) {
    Address a{b, k};
    auto sum = out.share_at(a).plus(s);
    if (!sum) return std::nullopt;
    out.set(a, *sum);
  }
  return out;
}

Footprint fp_revoke(const Footprint& fp, BlockId b, std::int64_t lo,
                    std::int64_t hi) {
  Footprint out = fp;
  for (std::int64_t k = lo; k < hi; ++k) {
    Address a{b, k};
    if (!out.share_at(a).is_full()) {
      throw Error("revoke of a range not fully owned");
    }
    out.set(a, Share::zero());
  }
  return out;
}

Footprint fp_restrict_block(const Footprint& fp, BlockId b) {
  Footprint out;
  for (const auto& [addr, share] : fp.entries()) {
    if (addr.block == b) out.set(addr, share);
  }
  return out;
}

}  // namespace cminor
