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

// Value domain of sequential Cminor: undefined values, 32-bit modular
// integers, block/offset pointers and 64-bit floats, plus the memory chunk
// descriptors used by loads and stores.

#ifndef CMINOR_VALUES_H_
#define CMINOR_VALUES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace cminor {

// Base class of every exception thrown by the workbench for contract
// violations (bad bounds, double free, malformed input...). Semantic
// partiality ("stuck") is never reported through exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 32-bit machine integer. The bit pattern is the value; signedness is chosen
// by each operation.
class Int32 {
 public:
  constexpr Int32() = default;
  constexpr explicit Int32(std::uint32_t bits) : bits_(bits) {}

  static constexpr Int32 from_signed(std::int32_t v) {
    return Int32(static_cast<std::uint32_t>(v));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::uint32_t unsigned_value() const { return bits_; }
  constexpr std::int32_t signed_value() const {
    return static_cast<std::int32_t>(bits_);
  }

  friend constexpr bool operator==(Int32, Int32) = default;

  friend constexpr Int32 operator+(Int32 a, Int32 b) {
    return Int32(a.bits_ + b.bits_);
  }
  friend constexpr Int32 operator-(Int32 a, Int32 b) {
    return Int32(a.bits_ - b.bits_);
  }
  friend constexpr Int32 operator*(Int32 a, Int32 b) {
    return Int32(a.bits_ * b.bits_);
  }
  friend constexpr Int32 operator&(Int32 a, Int32 b) {
    return Int32(a.bits_ & b.bits_);
  }
  friend constexpr Int32 operator|(Int32 a, Int32 b) {
    return Int32(a.bits_ | b.bits_);
  }
  friend constexpr Int32 operator^(Int32 a, Int32 b) {
    return Int32(a.bits_ ^ b.bits_);
  }
  constexpr Int32 operator-() const { return Int32(0u - bits_); }
  constexpr Int32 operator~() const { return Int32(~bits_); }

 private:
  std::uint32_t bits_ = 0;
};

inline constexpr Int32 kIntMin = Int32(0x80000000u);

// Abstract block number. Fresh allocations receive strictly increasing ids.
struct BlockId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(BlockId, BlockId) = default;
};

enum class ValueKind : std::uint8_t { kUndef, kInt, kPtr, kFloat };

class Value {
 public:
  // Default-constructed values are Vundef.
  Value() = default;

  static Value undef() { return Value(); }
  static Value integer(Int32 i) { return Value(Rep(std::in_place_index<1>, i)); }
  static Value integer(std::int32_t i) { return integer(Int32::from_signed(i)); }
  static Value pointer(BlockId b, Int32 offset) {
    return Value(Rep(std::in_place_index<2>, Ptr{b, offset}));
  }
  static Value pointer(BlockId b, std::int32_t offset) {
    return pointer(b, Int32::from_signed(offset));
  }
  static Value floating(double f) {
    return Value(Rep(std::in_place_index<3>, f));
  }

  ValueKind kind() const { return static_cast<ValueKind>(rep_.index()); }
  bool is_undef() const { return kind() == ValueKind::kUndef; }
  bool is_int() const { return kind() == ValueKind::kInt; }
  bool is_ptr() const { return kind() == ValueKind::kPtr; }
  bool is_float() const { return kind() == ValueKind::kFloat; }

  Int32 as_int() const { return std::get<1>(rep_); }
  BlockId ptr_block() const { return std::get<2>(rep_).block; }
  Int32 ptr_offset() const { return std::get<2>(rep_).offset; }
  double as_float() const { return std::get<3>(rep_); }

  // Structural identity: floats compare by bit pattern, so NaN equals
  // itself and +0.0 differs from -0.0. This is the equality used for
  // determinism and differential checks, not Cminor's float comparison.
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Ptr {
    BlockId block;
    Int32 offset;
  };
  using Rep = std::variant<std::monostate, Int32, Ptr, double>;
  explicit Value(Rep rep) : rep_(rep) {}

  Rep rep_;
};

// Textual rendering used by traces, reports and the pretty-printer:
// "undef", signed decimal ints, "ptr(b, ofs)", and floats in shortest
// round-trip form (always containing '.', 'e', "inf" or "nan").
std::string to_string(const Value& v);
std::string format_double(double f);

// A pointer or a nonzero integer.
bool is_true(const Value& v);
// Only Vint(0). Not the complement of is_true: Vundef and floats are neither.
bool is_false(const Value& v);

enum class Chunk : std::uint8_t {
  kInt8Signed,
  kInt8Unsigned,
  kInt16Signed,
  kInt16Unsigned,
  kInt32,
  kFloat32,
  kFloat64,
};

inline constexpr Chunk kAllChunks[] = {
    Chunk::kInt8Signed, Chunk::kInt8Unsigned, Chunk::kInt16Signed,
    Chunk::kInt16Unsigned, Chunk::kInt32, Chunk::kFloat32, Chunk::kFloat64};

std::size_t chunk_size(Chunk ch);
bool chunk_is_float(Chunk ch);
// Surface name: i8s, i8u, i16s, i16u, i32, f32, f64.
std::string_view chunk_name(Chunk ch);
std::optional<Chunk> chunk_from_name(std::string_view name);

// Normalizes a value to what a store with `ch` keeps: 8/16-bit integers are
// truncated then sign- or zero-extended, f32 narrows through float. Values of
// the wrong kind for the chunk become Vundef.
Value normalize_for_chunk(Chunk ch, const Value& v);

}  // namespace cminor

#endif  // CMINOR_VALUES_H_
