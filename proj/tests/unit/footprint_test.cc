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

#include "cminor/footprint.h"
#include "support/properties.h"

namespace cminor {
namespace {

const BlockId kB{0};
const Address kA{kB, 0};

Footprint single(Address a, Share s) {
  Footprint fp;
  fp.set(a, s);
  return fp;
}

TEST(Share, Arithmetic) {
  EXPECT_EQ(Share(2, 4), Share::half());
  EXPECT_EQ(Share::half().plus(Share::half()), Share::full());
  EXPECT_FALSE(Share::full().plus(Share(1, 3)).has_value());
  EXPECT_EQ(Share::full().halved(), Share::half());
  EXPECT_LT(Share(1, 3), Share::half());
  EXPECT_THROW(Share(3, 2), Error);
}

TEST(Footprint, ZeroSharesAreNotStored) {
  Footprint fp;
  fp.set(kA, Share::zero());
  EXPECT_TRUE(fp.empty());
  EXPECT_EQ(fp.share_at(kA), Share::zero());
}

TEST(Join, HalvesRecombine) {
  EXPECT_EQ(fp_join(single(kA, Share::half()), single(kA, Share::half())),
            single(kA, Share::full()));
}

TEST(Join, EmptyIsIdentity) {
  const Footprint fp = single(kA, Share(1, 3));
  EXPECT_EQ(fp_join(fp, Footprint()), fp);
}

TEST(Join, OverflowIsUndefined) {
  EXPECT_FALSE(fp_join(single(kA, Share::full()), single(kA, Share::half())).has_value());
}

TEST(Allows, FullShareStores) {
  auto fp = fp_grant(Footprint(), kB, 0, 4, Share::full());
  ASSERT_TRUE(fp);
  EXPECT_TRUE(allows(*fp, Value::pointer(kB, 0), Chunk::kInt32, Access::kStore));
  EXPECT_TRUE(allows(*fp, Value::pointer(kB, 0), Chunk::kInt32, Access::kLoad));
}

TEST(Allows, HalfShareOnlyLoads) {
  auto fp = fp_grant(Footprint(), kB, 0, 4, Share::half());
  ASSERT_TRUE(fp);
  EXPECT_FALSE(allows(*fp, Value::pointer(kB, 0), Chunk::kInt32, Access::kStore));
  EXPECT_TRUE(allows(*fp, Value::pointer(kB, 0), Chunk::kInt32, Access::kLoad));
}

TEST(Allows, EveryByteOfTheChunkIsNeeded) {
  auto fp = fp_grant(Footprint(), kB, 0, 3, Share::full());
  ASSERT_TRUE(fp);
  EXPECT_FALSE(allows(*fp, Value::pointer(kB, 0), Chunk::kInt32, Access::kLoad));
  EXPECT_TRUE(allows(*fp, Value::pointer(kB, 2), Chunk::kInt8Signed, Access::kStore));
}

TEST(Allows, IntegersAreNotAddresses) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::full());
  for (Chunk ch : kAllChunks) {
    EXPECT_FALSE(allows(*fp, Value::integer(0), ch, Access::kLoad));
  }
}

TEST(Grant, FreshBlockAllowsStoresEverywhere) {
  auto fp = fp_grant(Footprint(), kB, 0, 16, Share::full());
  ASSERT_TRUE(fp);
  for (std::int32_t o = 0; o < 16; ++o) {
    EXPECT_TRUE(allows(*fp, Value::pointer(kB, o), Chunk::kInt8Unsigned, Access::kStore));
  }
}

TEST(Grant, OverFullRangeFails) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::full());
  EXPECT_FALSE(fp_grant(*fp, kB, 4, 12, Share(1, 8)).has_value());
}

TEST(Grant, ZeroShareIsNoOp) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::half());
  EXPECT_EQ(fp_grant(*fp, BlockId{1}, 0, 8, Share::zero()), fp);
}

TEST(Revoke, FullRangeRemoved) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::full());
  EXPECT_TRUE(fp_revoke(*fp, kB, 0, 8).empty());
  EXPECT_EQ(fp_revoke(*fp, kB, 0, 4).size(), 4u);
}

TEST(Revoke, PartialShareIsAnError) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::half());
  EXPECT_THROW(fp_revoke(*fp, kB, 0, 8), Error);
}

TEST(Revoke, EmptyRangeIsNoOp) {
  auto fp = fp_grant(Footprint(), kB, 0, 8, Share::half());
  EXPECT_EQ(fp_revoke(*fp, kB, 0, 0), *fp);
}

TEST(Algebra, RandomFootprints) {
  const auto r = testing::check_footprint_algebra(2000, 17);
  EXPECT_TRUE(r.ok()) << r.summary();
}

}  // namespace
}  // namespace cminor
