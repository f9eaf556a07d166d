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

#include "cminor/values.h"

#include <bit>
#include <charconv>
#include <cmath>

namespace cminor {

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ValueKind::kUndef:
      return true;
    case ValueKind::kInt:
      return a.as_int() == b.as_int();
    case ValueKind::kPtr:
      return a.ptr_block() == b.ptr_block() && a.ptr_offset() == b.ptr_offset();
    case ValueKind::kFloat:
      return std::bit_cast<std::uint64_t>(a.as_float()) ==
             std::bit_cast<std::uint64_t>(b.as_float());
  }
  return false;
}

std::string format_double(double f) {
  if (std::isnan(f)) return "nan";
  if (std::isinf(f)) return f > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, f);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string to_string(const Value& v) {
  switch (v.kind()) {
    case ValueKind::kUndef:
      return "undef";
    case ValueKind::kInt:
      return std::to_string(v.as_int().signed_value());
    case ValueKind::kPtr:
      return "ptr(" + std::to_string(v.ptr_block().index) + ", " +
             std::to_string(v.ptr_offset().signed_value()) + ")";
    case ValueKind::kFloat:
      return format_double(v.as_float());
  }
  return "?";
}

bool is_true(const Value& v) {
  return v.is_ptr() || (v.is_int() && v.as_int() != Int32(0));
}

bool is_false(const Value& v) { return v.is_int() && v.as_int() == Int32(0); }

std::size_t chunk_size(Chunk ch) {
  switch (ch) {
    case Chunk::kInt8Signed:
    case Chunk::kInt8Unsigned:
      return 1;
    case Chunk::kInt16Signed:
    case Chunk::kInt16Unsigned:
      return 2;
    case Chunk::kInt32:
    case Chunk::kFloat32:
      return 4;
    case Chunk::kFloat64:
      return 8;
  }
  return 0;
}

bool chunk_is_float(Chunk ch) {
  return ch == Chunk::kFloat32 || ch == Chunk::kFloat64;
}

std::string_view chunk_name(Chunk ch) {
  switch (ch) {
    case Chunk::kInt8Signed:
      return "i8s";
    case Chunk::kInt8Unsigned:
      return "i8u";
    case Chunk::kInt16Signed:
      return "i16s";
    case Chunk::kInt16Unsigned:
      return "i16u";
    case Chunk::kInt32:
      return "i32";
    case Chunk::kFloat32:
      return "f32";
    case Chunk::kFloat64:
      return "f64";
  }
  return "?";
}

std::optional<Chunk> chunk_from_name(std::string_view name) {
  for (Chunk ch : kAllChunks) {
    if (chunk_name(ch) == name) return ch;
  }
  return std::nullopt;
}

Value normalize_for_chunk(Chunk ch, const Value& v) {
  switch (ch) {
    case Chunk::kInt8Signed:
      if (!v.is_int()) return Value::undef();
      return Value::integer(static_cast<std::int32_t>(
          static_cast<std::int8_t>(v.as_int().bits() & 0xFFu)));
    case Chunk::kInt8Unsigned:
      if (!v.is_int()) return Value::undef();
      return Value::integer(Int32(v.as_int().bits() & 0xFFu));
    case Chunk::kInt16Signed:
      if (!v.is_int()) return Value::undef();
      return Value::integer(static_cast<std::int32_t>(
          static_cast<std::int16_t>(v.as_int().bits() & 0xFFFFu)));
    case Chunk::kInt16Unsigned:
      if (!v.is_int()) return Value::undef();
      return Value::integer(Int32(v.as_int().bits() & 0xFFFFu));
    case Chunk::kInt32:
      if (v.is_int() || v.is_ptr()) return v;
      return Value::undef();
    case Chunk::kFloat32:
      if (!v.is_float()) return Value::undef();
      return Value::floating(static_cast<double>(static_cast<float>(v.as_float())));
    case Chunk::kFloat64:
      if (!v.is_float()) return Value::undef();
      return v;
  }
  return Value::undef();
}

}  // namespace cminor
