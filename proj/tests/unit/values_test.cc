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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "cminor/values.h"
#include "support/reference.h"

namespace cminor {
namespace {

TEST(Truth, NonzeroIntIsTrue) {
  EXPECT_TRUE(is_true(Value::integer(3)));
  EXPECT_FALSE(is_false(Value::integer(3)));
}

TEST(Truth, ZeroIsFalse) {
  EXPECT_FALSE(is_true(Value::integer(0)));
  EXPECT_TRUE(is_false(Value::integer(0)));
}

TEST(Truth, UndefIsNeither) {
  EXPECT_FALSE(is_true(Value::undef()));
  EXPECT_FALSE(is_false(Value::undef()));
}

TEST(Truth, PointerIsTrueNeverFalse) {
  EXPECT_TRUE(is_true(Value::pointer(BlockId{0}, 0)));
  EXPECT_FALSE(is_false(Value::pointer(BlockId{0}, 0)));
}

TEST(Truth, FloatsAreNeither) {
  EXPECT_FALSE(is_false(Value::floating(0.0)));
  EXPECT_FALSE(is_true(Value::floating(1.5)));
}

TEST(Chunks, Sizes) {
  EXPECT_EQ(chunk_size(Chunk::kInt32), 4u);
  EXPECT_EQ(chunk_size(Chunk::kInt8Signed), 1u);
  EXPECT_EQ(chunk_size(Chunk::kInt8Unsigned), 1u);
  EXPECT_EQ(chunk_size(Chunk::kInt16Signed), 2u);
  EXPECT_EQ(chunk_size(Chunk::kFloat32), 4u);
  EXPECT_EQ(chunk_size(Chunk::kFloat64), 8u);
}

TEST(Chunks, NamesRoundTrip) {
  for (Chunk ch : kAllChunks) {
    auto back = chunk_from_name(chunk_name(ch));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, ch);
  }
  EXPECT_FALSE(chunk_from_name("i64").has_value());
}

TEST(Int32, WrapsModulo) {
  EXPECT_EQ(Int32(0xFFFFFFFFu) + Int32(1u), Int32(0u));
  EXPECT_EQ(kIntMin.signed_value(), std::numeric_limits<std::int32_t>::min());
  EXPECT_EQ((-kIntMin), kIntMin);
}

TEST(Values, EqualityIsStructural) {
  EXPECT_EQ(Value::integer(1), Value::integer(1));
  EXPECT_NE(Value::integer(0), Value::undef());
  EXPECT_NE(Value::pointer(BlockId{0}, 0), Value::pointer(BlockId{1}, 0));
  EXPECT_NE(Value::integer(0), Value::floating(0.0));
  EXPECT_EQ(Value::floating(std::nan("")), Value::floating(std::nan("")));
}

TEST(Values, Printing) {
  EXPECT_EQ(to_string(Value::integer(-4)), "-4");
  EXPECT_EQ(to_string(Value::undef()), "undef");
  EXPECT_EQ(to_string(Value::pointer(BlockId{2}, 8)), "ptr(2, 8)");
}

// Chunk normalization against the per-chunk reference spelled out in the
// test support library.
TEST(Values, NormalizeMatchesReference) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    Value v;
    switch (i % 4) {
      case 0: v = Value::integer(Int32(static_cast<std::uint32_t>(rng()))); break;
      case 1: v = Value::floating(static_cast<double>(static_cast<std::int64_t>(rng() % 2000) - 1000) / 7.0); break;
      case 2: v = Value::pointer(BlockId{1}, static_cast<std::int32_t>(rng() % 32)); break;
      default: v = Value::undef(); break;
    }
    for (Chunk ch : kAllChunks) {
      EXPECT_EQ(normalize_for_chunk(ch, v), testing::ref_normalize(ch, v))
          << chunk_name(ch) << " " << to_string(v);
    }
  }
}

}  // namespace
}  // namespace cminor
