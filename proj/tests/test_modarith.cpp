// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kybermat/modarith.hpp"
#include "kybermat/rng.hpp"

using namespace kybermat;

TEST_CASE("splitmix64 reference stream and rejection sampling")
{
    SplitMix64 rng(1);
    CHECK(rng.next() == 0x910A2DEC89025CC1ull);

    SplitMix64 rng2(1);
    CHECK(sample_residue(rng2) == 3265);
    CHECK(sample_residue(rng2) == 3175);
    CHECK(sample_residue(rng2) == 1374);
    CHECK(sample_residue(rng2) == 2315);
}

TEST_CASE("modular add, sub, mul stay canonical")
{
    OpCounter ctx;
    CHECK(add_mod(3328, 1, ctx) == 0);
    CHECK(add_mod(3328, 3328, ctx) == 3327);
    CHECK(sub_mod(0, 1, ctx) == 3328);
    CHECK(sub_mod(5, 5, ctx) == 0);
    CHECK(mul_mod(3328, 3328, ctx) == 1);
    CHECK(mul_mod(2, 1665, ctx) == 1);
}

TEST_CASE("operation counters tick per call")
{
    OpCounter ctx;
    (void)add_mod(1, 2, ctx);
    (void)sub_mod(1, 2, ctx);
    (void)mul_mod(1, 2, ctx);
    CHECK(ctx.modadd == 2);
    CHECK(ctx.modmul == 1);
    CHECK(ctx.yconst_products == 0);

    OpCounter other;
    (void)mul_mod(7, 7, other);
    ctx += other;
    CHECK(ctx.modmul == 2);
}

TEST_CASE("pow_mod known values")
{
    CHECK(pow_mod(17, 0) == 1);
    CHECK(pow_mod(17, 1) == 17);
    CHECK(pow_mod(17, 128) == 3328);  // psi^m = -1 for the size-128 root
    CHECK(pow_mod(17, 256) == 1);
    CHECK(pow_mod(289, 64) == 3328);
    CHECK(pow_mod(0, 5) == 0);
}

TEST_CASE("inv_mod known values and exhaustive check")
{
    CHECK(inv_mod(1) == 1);
    CHECK(inv_mod(128) == 3303);
    CHECK(inv_mod(64) == 3277);
    CHECK_THROWS_AS((void)inv_mod(0), std::domain_error);

    OpCounter ctx;
    for (std::uint32_t a = 1; a < kQ; ++a)
        CHECK(mul_mod(static_cast<Residue>(a), inv_mod(static_cast<Residue>(a)),
                      ctx) == 1);
}
