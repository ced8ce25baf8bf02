// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/faststruct.hpp"

#include <stdexcept>
#include <string>

namespace kybermat {

namespace {

void check_lanes(std::size_t got, std::size_t want, const char* who)
{
    if (got != want)
        throw std::invalid_argument(std::string(who) + ": wrong lane count");
}

} // namespace

PreprocessedVectorEntry preprocess_vector_entry_2(const NttVector& r_even,
                                                  const NttVector& r_odd,
                                                  const TwiddleTables& t,
                                                  OpCounter& ctx)
{
    PreprocessedVectorEntry f;
    f.L = 2;
    f.lanes.resize(3);
    f.lanes[0] = pointwise_sub(r_odd, r_even, ctx);
    f.lanes[1] = r_even;
    f.lanes[2] = pointwise_sub(mul_y_constant(r_odd, t, ctx), r_even, ctx);
    return f;
}

PreprocessedMatrixEntry preprocess_matrix_entry_2(const NttVector& a_even,
                                                  const NttVector& a_odd,
                                                  OpCounter& ctx)
{
    PreprocessedMatrixEntry g;
    g.L = 2;
    g.lanes.resize(3);
    g.lanes[0] = a_even;
    g.lanes[1] = pointwise_add(a_even, a_odd, ctx);
    g.lanes[2] = a_odd;
    return g;
}

LaneProducts entry_mul_lanes(const PreprocessedMatrixEntry& g,
                             const PreprocessedVectorEntry& f,
                             OpCounter& ctx)
{
    if (g.lanes.size() != f.lanes.size() || g.L != f.L)
        throw std::invalid_argument("entry_mul_lanes: lane mismatch");

    LaneProducts s(g.lanes.size());
    for (std::size_t l = 0; l < s.size(); ++l)
        s[l] = pointwise_mul(g.lanes[l], f.lanes[l], ctx);
    return s;
}

std::pair<NttVector, NttVector> combine_lanes_2(const LaneProducts& s,
                                                OpCounter& ctx)
{
    check_lanes(s.size(), 3, "combine_lanes_2");
    return {pointwise_add(s[1], s[2], ctx), pointwise_add(s[1], s[0], ctx)};
}

PreprocessedVectorEntry preprocess_vector_entry_2_original(const NttVector& r_even,
                                                           const NttVector& r_odd,
                                                           OpCounter& ctx)
{
    PreprocessedVectorEntry f;
    f.L = 2;
    f.lanes.resize(3);
    f.lanes[0] = r_even;
    f.lanes[1] = r_odd;
    f.lanes[2] = pointwise_add(r_even, r_odd, ctx);
    return f;
}

PreprocessedMatrixEntry preprocess_matrix_entry_2_original(const NttVector& a_even,
                                                           const NttVector& a_odd,
                                                           OpCounter& ctx)
{
    PreprocessedMatrixEntry g;
    g.L = 2;
    g.lanes.resize(3);
    g.lanes[0] = a_even;
    g.lanes[1] = a_odd;
    g.lanes[2] = pointwise_add(a_even, a_odd, ctx);
    return g;
}

LaneProducts entry_mul_original_form_2(const PreprocessedMatrixEntry& g,
                                       const PreprocessedVectorEntry& f,
                                       const TwiddleTables& t,
                                       OpCounter& ctx)
{
    // The Y constant is applied in the combine step, not here; the tables
    // parameter keeps the two forms call-compatible.
    (void)t;
    return entry_mul_lanes(g, f, ctx);
}

std::pair<NttVector, NttVector> combine_lanes_2_original(const LaneProducts& s,
                                                         const TwiddleTables& t,
                                                         OpCounter& ctx)
{
    check_lanes(s.size(), 3, "combine_lanes_2_original");
    NttVector p_even = pointwise_add(s[0], mul_y_constant(s[1], t, ctx), ctx);
    NttVector p_odd = pointwise_sub(pointwise_sub(s[2], s[0], ctx), s[1], ctx);
    return {std::move(p_even), std::move(p_odd)};
}

PreprocessedVectorEntry preprocess_vector_entry_4(const std::vector<NttVector>& r,
                                                  const TwiddleTables& t,
                                                  OpCounter& ctx)
{
    if (r.size() != 4)
        throw std::invalid_argument("preprocess_vector_entry_4: need 4 phases");

    const NttVector wr1 = mul_y_constant(r[1], t, ctx);
    const NttVector wr2 = mul_y_constant(r[2], t, ctx);
    const NttVector wr3 = mul_y_constant(r[3], t, ctx);

    const NttVector c1 = pointwise_sub(r[1], r[0], ctx);
    const NttVector d = pointwise_sub(wr3, r[0], ctx);

    PreprocessedVectorEntry f;
    f.L = 4;
    f.lanes.resize(9);
    // outer lane 0: r_O - r_E = (r1 - r0) + y (r3 - r2)
    f.lanes[0] = pointwise_sub(pointwise_sub(r[3], r[2], ctx), c1, ctx);
    f.lanes[1] = c1;
    f.lanes[2] = pointwise_add(
        pointwise_sub(pointwise_sub(wr3, wr2, ctx), r[1], ctx), r[0], ctx);
    // outer lane 1: r_E = r0 + y r2
    f.lanes[3] = pointwise_sub(r[2], r[0], ctx);
    f.lanes[4] = r[0];
    f.lanes[5] = pointwise_sub(wr2, r[0], ctx);
    // outer lane 2: Y r_O - r_E = (W r3 - r0) + y (r1 - r2)
    f.lanes[6] = pointwise_add(
        pointwise_sub(pointwise_sub(r[1], r[2], ctx), wr3, ctx), r[0], ctx);
    f.lanes[7] = d;
    f.lanes[8] = pointwise_add(
        pointwise_sub(pointwise_sub(wr1, wr2, ctx), wr3, ctx), r[0], ctx);
    return f;
}

PreprocessedMatrixEntry preprocess_matrix_entry_4(const std::vector<NttVector>& a,
                                                  OpCounter& ctx)
{
    if (a.size() != 4)
        throw std::invalid_argument("preprocess_matrix_entry_4: need 4 phases");

    PreprocessedMatrixEntry g;
    g.L = 4;
    g.lanes.resize(9);
    // outer lane 0: a_E = a0 + y a2
    g.lanes[0] = a[0];
    g.lanes[1] = pointwise_add(a[0], a[2], ctx);
    g.lanes[2] = a[2];
    // outer lane 1: a_E + a_O = (a0 + a1) + y (a2 + a3)
    g.lanes[3] = pointwise_add(a[0], a[1], ctx);
    g.lanes[4] = pointwise_add(pointwise_add(pointwise_add(a[0], a[1], ctx),
                                             a[2], ctx),
                               a[3], ctx);
    g.lanes[5] = pointwise_add(a[2], a[3], ctx);
    // outer lane 2: a_O = a1 + y a3
    g.lanes[6] = a[1];
    g.lanes[7] = pointwise_add(a[1], a[3], ctx);
    g.lanes[8] = a[3];
    return g;
}

std::vector<NttVector> combine_lanes_4(const LaneProducts& s, OpCounter& ctx)
{
    check_lanes(s.size(), 9, "combine_lanes_4");

    NttVector even[3];
    NttVector odd[3];
    for (std::size_t o = 0; o < 3; ++o) {
        even[o] = pointwise_add(s[3 * o + 1], s[3 * o + 2], ctx);
        odd[o] = pointwise_add(s[3 * o + 1], s[3 * o + 0], ctx);
    }

    std::vector<NttVector> p(4);
    p[0] = pointwise_add(even[1], even[2], ctx);
    p[1] = pointwise_add(even[1], even[0], ctx);
    p[2] = pointwise_add(odd[1], odd[2], ctx);
    p[3] = pointwise_add(odd[1], odd[0], ctx);
    return p;
}

} // namespace kybermat
