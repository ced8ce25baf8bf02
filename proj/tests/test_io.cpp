// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "kybermat/io.hpp"
#include "kybermat/rng.hpp"

using namespace kybermat;

namespace {

NttDomainMatrix sample_matrix(std::size_t k, std::size_t L, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    OpCounter ctx;
    return matrix_to_ntt(random_matrix(rng, k, kRingDegree), L, ctx);
}

NttDomainVector sample_vector(std::size_t k, std::size_t L, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    OpCounter ctx;
    return vector_to_ntt(random_poly_vector(rng, k, kRingDegree), L, ctx);
}

} // namespace

TEST_CASE("header and entry lines are stable")
{
    std::ostringstream os;
    write_vector(os, sample_vector(2, 2, 5), "vector");
    const std::string text = os.str();
    CHECK(text.rfind("kybermat v1 kind=vector k=2 n=256 q=3329 L=2 "
                     "domain=ntt order=bitrev\n",
                     0) == 0);
    CHECK(text.find("\nentry i=0 j=0 phase=0:\n") != std::string::npos);
    CHECK(text.find("\nentry i=1 j=0 phase=1:\n") != std::string::npos);
}

TEST_CASE("matrix and vector round trip, concatenated documents")
{
    for (std::size_t L : {std::size_t{2}, std::size_t{4}}) {
        const NttDomainMatrix a = sample_matrix(3, L, 6);
        const NttDomainVector r = sample_vector(3, L, 7);

        std::ostringstream os;
        write_matrix(os, a);
        write_vector(os, r, "vector");
        write_vector(os, r, "output");

        std::istringstream is(os.str());
        const NttDomainMatrix a2 = read_matrix(is);
        std::string kind;
        const NttDomainVector r2 = read_vector(is, &kind);
        CHECK(kind == "vector");
        const NttDomainVector r3 = read_vector(is, &kind);
        CHECK(kind == "output");

        CHECK(a2.entries == a.entries);
        CHECK(r2.entries == r.entries);
        CHECK(r3.entries == r.entries);
    }
}

TEST_CASE("coefficient-domain vector documents round trip")
{
    SplitMix64 rng(8);
    const PolyVector r = random_poly_vector(rng, 2, kRingDegree);
    for (std::size_t L : {std::size_t{2}, std::size_t{4}}) {
        std::ostringstream os;
        write_poly_vector(os, r, L, "vector");
        CHECK(os.str().rfind("kybermat v1 kind=vector k=2 n=256 q=3329 L=" +
                                 std::to_string(L) +
                                 " domain=coeff order=bitrev\n",
                             0) == 0);

        std::istringstream is(os.str());
        std::size_t L2 = 0;
        CHECK(read_poly_vector(is, &L2) == r);
        CHECK(L2 == L);
    }

    // domain cross-reads are rejected
    std::ostringstream os;
    write_poly_vector(os, r, 2, "vector");
    std::istringstream is(os.str());
    CHECK_THROWS_AS((void)read_vector(is), IoError);
}

TEST_CASE("malformed documents are rejected with line numbers")
{
    const std::string good_header =
        "kybermat v1 kind=vector k=1 n=256 q=3329 L=2 domain=ntt order=bitrev\n";

    auto expect_bad = [](const std::string& text, const std::string& line_tag) {
        std::istringstream is(text);
        try {
            (void)read_vector(is);
            FAIL("expected IoError");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find(line_tag) != std::string::npos);
        }
    };

    expect_bad("notkybermat v1 kind=vector k=1 n=256 q=3329 L=2 domain=ntt "
               "order=bitrev\n",
               "(line 1)");
    expect_bad("kybermat v2 kind=vector k=1 n=256 q=3329 L=2 domain=ntt "
               "order=bitrev\n",
               "(line 1)");
    expect_bad("kybermat v1 kind=vector k=1 n=256 q=17 L=2 domain=ntt "
               "order=bitrev\n",
               "(line 1)");
    expect_bad("kybermat v1 kind=vector k=1 n=256 q=3329 L=3 domain=ntt "
               "order=bitrev\n",
               "(line 1)");
    expect_bad(good_header + "entry i=5 j=0 phase=0:\n", "(line 2)");

    {
        std::istringstream is("");
        CHECK_THROWS_AS((void)read_vector(is), IoError);
    }
    {
        std::istringstream is(good_header); // truncated body
        CHECK_THROWS_AS((void)read_vector(is), IoError);
    }

    // residue out of range, reported on the body line
    std::string bad_body = good_header + "entry i=0 j=0 phase=0:\n";
    for (int i = 0; i < 128; ++i)
        bad_body += (i ? " 3329" : "3329");
    bad_body += "\n";
    expect_bad(bad_body, "(line 3)");

    // kind mismatch for the matrix reader
    {
        std::istringstream is(good_header);
        CHECK_THROWS_AS((void)read_matrix(is), IoError);
    }
}
