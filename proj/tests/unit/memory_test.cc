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

#include <gtest/gtest.h>

#include "cminor/memory.h"
#include "support/properties.h"

namespace cminor {
namespace {

TEST(Alloc, FirstBlockIsZeroAndUninitialized) {
  auto [m, b] = Memory().alloc(0, 8);
  EXPECT_EQ(b.index, 0u);
  ASSERT_EQ(m.block(b).cells.size(), 8u);
  for (std::int64_t o = 0; o < 8; ++o) EXPECT_FALSE(m.block(b).at(o).initialized);
}

TEST(Alloc, FreshIds) {
  Memory m;
  EXPECT_EQ(m.alloc_in_place(0, 4).index, 0u);
  EXPECT_EQ(m.alloc_in_place(0, 4).index, 1u);
}

TEST(Alloc, EmptyBlockHasNoLoadableOffsets) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 0);
  EXPECT_TRUE(m.is_live(b));
  for (Chunk ch : kAllChunks) EXPECT_FALSE(m.load(ch, Value::pointer(b, 0)).has_value());
}

TEST(Alloc, InvertedBoundsRejected) {
  EXPECT_THROW(Memory().alloc(8, 0), Error);
}

TEST(Free, LoadFromDeadBlockFails) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  ASSERT_TRUE(m.store_in_place(Chunk::kInt32, Value::pointer(b, 0), Value::integer(1)));
  Memory dead = m.free(b);
  EXPECT_FALSE(dead.load(Chunk::kInt32, Value::pointer(b, 0)).has_value());
  EXPECT_TRUE(m.load(Chunk::kInt32, Value::pointer(b, 0)).has_value());
}

TEST(Free, DoubleFreeIsAnError) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  Memory once = m.free(b);
  EXPECT_THROW(once.free(b), Error);
  EXPECT_THROW(m.free(BlockId{7}), Error);
}

TEST(LoadStore, RoundTrip) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  auto m2 = m.store(Chunk::kInt32, Value::pointer(b, 0), Value::integer(5));
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->load(Chunk::kInt32, Value::pointer(b, 0)), Value::integer(5));
}

TEST(LoadStore, ChunkMismatchGivesUndef) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  auto m2 = m.store(Chunk::kInt32, Value::pointer(b, 0), Value::integer(5));
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->load(Chunk::kInt8Signed, Value::pointer(b, 0)), Value::undef());
  EXPECT_EQ(m2->load(Chunk::kFloat32, Value::pointer(b, 0)), Value::undef());
}

TEST(LoadStore, UninitializedLoadsUndef) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  EXPECT_EQ(m.load(Chunk::kInt32, Value::pointer(b, 4)), Value::undef());
}

TEST(LoadStore, NonPointerAddress) {
  Memory m;
  m.alloc_in_place(0, 8);
  EXPECT_FALSE(m.load(Chunk::kInt32, Value::integer(7)).has_value());
  EXPECT_FALSE(m.store(Chunk::kInt32, Value::integer(7), Value::integer(1)).has_value());
}

TEST(LoadStore, ByteTruncation) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  auto m2 = m.store(Chunk::kInt8Unsigned, Value::pointer(b, 3), Value::integer(0x1FF));
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->load(Chunk::kInt8Unsigned, Value::pointer(b, 3)), Value::integer(0x1FF & 0xFF));
}

TEST(LoadStore, SignedByteExtends) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  auto m2 = m.store(Chunk::kInt8Signed, Value::pointer(b, 0), Value::integer(0x80));
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->load(Chunk::kInt8Signed, Value::pointer(b, 0)), Value::integer(-128));
}

TEST(LoadStore, RangePastEnd) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  EXPECT_FALSE(m.store(Chunk::kInt32, Value::pointer(b, 7), Value::integer(1)).has_value());
  EXPECT_FALSE(m.load(Chunk::kInt32, Value::pointer(b, 8)).has_value());
  EXPECT_FALSE(m.load(Chunk::kInt32, Value::pointer(b, -4)).has_value());
}

TEST(LoadStore, MisalignedRejected) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 16);
  EXPECT_FALSE(m.store(Chunk::kInt32, Value::pointer(b, 2), Value::integer(1)).has_value());
  EXPECT_FALSE(m.load(Chunk::kInt16Signed, Value::pointer(b, 1)).has_value());
  EXPECT_TRUE(m.load(Chunk::kInt16Signed, Value::pointer(b, 2)).has_value());
}

TEST(LoadStore, OtherBlocksUnchanged) {
  Memory m;
  BlockId a = m.alloc_in_place(0, 8);
  BlockId b = m.alloc_in_place(0, 8);
  ASSERT_TRUE(m.store_in_place(Chunk::kInt32, Value::pointer(b, 0), Value::integer(3)));
  auto m2 = m.store(Chunk::kInt32, Value::pointer(a, 0), Value::integer(4));
  ASSERT_TRUE(m2);
  EXPECT_EQ(m2->block(b), m.block(b));
}

TEST(LoadStore, NegativeLowBound) {
  Memory m;
  BlockId b = m.alloc_in_place(-8, 0);
  ASSERT_TRUE(m.store_in_place(Chunk::kInt32, Value::pointer(b, -8), Value::integer(9)));
  EXPECT_EQ(m.load(Chunk::kInt32, Value::pointer(b, -8)), Value::integer(9));
}

TEST(LoadStore, PartialOverwriteInvalidatesWholeValue) {
  Memory m;
  BlockId b = m.alloc_in_place(0, 8);
  ASSERT_TRUE(m.store_in_place(Chunk::kInt32, Value::pointer(b, 0), Value::integer(0x01020304)));
  ASSERT_TRUE(m.store_in_place(Chunk::kInt8Unsigned, Value::pointer(b, 1), Value::integer(0)));
  EXPECT_EQ(m.load(Chunk::kInt32, Value::pointer(b, 0)), Value::undef());
}

TEST(MemoryModel, RandomSequencesAgainstReference) {
  const auto r = testing::check_memory_model(500, 91);
  EXPECT_TRUE(r.ok()) << r.summary();
}

}  // namespace
}  // namespace cminor
