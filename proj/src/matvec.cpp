// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/matvec.hpp"

#include <stdexcept>
#include <string>

namespace kybermat {

namespace {

void check_shapes(const NttDomainMatrix& a, const NttDomainVector& r,
                  std::size_t want_L, const char* who)
{
    if (a.L != want_L || r.L != want_L)
        throw std::invalid_argument(std::string(who) + ": wrong L");
    if (a.k == 0 || a.k != r.k)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

void accumulate(std::vector<NttVector>& acc, const std::vector<NttVector>& s,
                bool first, OpCounter& ctx)
{
    if (first) {
        acc = s;
        return;
    }
    for (std::size_t l = 0; l < acc.size(); ++l)
        acc[l] = pointwise_add(acc[l], s[l], ctx);
}

} // namespace

std::string_view algorithm_name(Algorithm alg)
{
    switch (alg) {
    case Algorithm::baseline4mult: return "baseline4mult";
    case Algorithm::baseline5mult: return "baseline5mult";
    case Algorithm::proposed2: return "proposed2";
    case Algorithm::unshared4: return "unshared4";
    case Algorithm::proposed4: return "proposed4";
    }
    throw std::invalid_argument("algorithm_name: bad enum value");
}

Algorithm algorithm_from_name(std::string_view name)
{
    if (name == "baseline4mult") return Algorithm::baseline4mult;
    if (name == "baseline5mult") return Algorithm::baseline5mult;
    if (name == "proposed2") return Algorithm::proposed2;
    if (name == "unshared4") return Algorithm::unshared4;
    if (name == "proposed4") return Algorithm::proposed4;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::size_t algorithm_L(Algorithm alg)
{
    switch (alg) {
    case Algorithm::baseline4mult:
    case Algorithm::baseline5mult:
    case Algorithm::proposed2:
        return 2;
    case Algorithm::unshared4:
    case Algorithm::proposed4:
        return 4;
    }
    throw std::invalid_argument("algorithm_L: bad enum value");
}

NttDomainVector vector_to_ntt(const PolyVector& r, std::size_t L, OpCounter& ctx)
{
    if (r.k() == 0)
        throw std::invalid_argument("vector_to_ntt: empty vector");
    const std::size_t n = r.entries[0].size();
    const TwiddleTables t = build_tables(n / L);

    NttDomainVector out;
    out.k = r.k();
    out.L = L;
    out.entries.resize(out.k);
    for (std::size_t j = 0; j < out.k; ++j) {
        const PhaseSplit split = decompose(r.entries[j], L);
        out.entries[j].resize(L);
        for (std::size_t p = 0; p < L; ++p)
            out.entries[j][p] = ntt_forward(split.phases[p], t, ctx);
    }
    return out;
}

NttDomainMatrix matrix_to_ntt(const std::vector<std::vector<Polynomial>>& a,
                              std::size_t L, OpCounter& ctx)
{
    if (a.empty())
        throw std::invalid_argument("matrix_to_ntt: empty matrix");
    const std::size_t k = a.size();
    const std::size_t n = a[0][0].size();
    const TwiddleTables t = build_tables(n / L);

    NttDomainMatrix out;
    out.k = k;
    out.L = L;
    out.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].size() != k)
            throw std::invalid_argument("matrix_to_ntt: not square");
        out.entries[i].resize(k);
        for (std::size_t j = 0; j < k; ++j) {
            const PhaseSplit split = decompose(a[i][j], L);
            out.entries[i][j].resize(L);
            for (std::size_t p = 0; p < L; ++p)
                out.entries[i][j][p] = ntt_forward(split.phases[p], t, ctx);
        }
    }
    return out;
}

PolyVector vector_from_ntt(const NttDomainVector& u, OpCounter& ctx)
{
    if (u.k == 0)
        throw std::invalid_argument("vector_from_ntt: empty vector");
    const std::size_t m = u.entries[0][0].size();
    const TwiddleTables t = build_tables(m);

    PolyVector out(u.k, m * u.L);
    for (std::size_t j = 0; j < u.k; ++j) {
        PhaseSplit split;
        split.L = u.L;
        split.phases.resize(u.L);
        for (std::size_t p = 0; p < u.L; ++p)
            split.phases[p] = ntt_inverse(u.entries[j][p], t, ctx);
        out.entries[j] = recompose(split);
    }
    return out;
}

NttDomainVector matvec_proposed(const NttDomainMatrix& a, const NttDomainVector& r,
                                Form form, OpCounter& ctx)
{
    if (a.L != 2 && a.L != 4)
        throw std::invalid_argument("matvec_proposed: L must be 2 or 4");
    if (a.L == 4 && form == Form::original)
        throw std::invalid_argument(
            "matvec_proposed: four-parallel structure is transposed only");
    check_shapes(a, r, a.L, "matvec_proposed");

    const std::size_t k = a.k;
    const std::size_t m = r.entries[0][0].size();
    const TwiddleTables t = build_tables(m);

    // vector preprocessing is done once and shared by every row
    std::vector<PreprocessedVectorEntry> f(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (a.L == 4)
            f[j] = preprocess_vector_entry_4(r.entries[j], t, ctx);
        else if (form == Form::transposed)
            f[j] = preprocess_vector_entry_2(r.entries[j][0], r.entries[j][1], t, ctx);
        else
            f[j] = preprocess_vector_entry_2_original(r.entries[j][0],
                                                      r.entries[j][1], ctx);
    }

    NttDomainVector u;
    u.k = k;
    u.L = a.L;
    u.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<NttVector> acc;
        for (std::size_t j = 0; j < k; ++j) {
            LaneProducts s;
            if (a.L == 4) {
                const PreprocessedMatrixEntry g =
                    preprocess_matrix_entry_4(a.entries[i][j], ctx);
                s = entry_mul_lanes(g, f[j], ctx);
            } else if (form == Form::transposed) {
                const PreprocessedMatrixEntry g = preprocess_matrix_entry_2(
                    a.entries[i][j][0], a.entries[i][j][1], ctx);
                s = entry_mul_lanes(g, f[j], ctx);
            } else {
                const PreprocessedMatrixEntry g = preprocess_matrix_entry_2_original(
                    a.entries[i][j][0], a.entries[i][j][1], ctx);
                s = entry_mul_original_form_2(g, f[j], t, ctx);
            }
            accumulate(acc, s, j == 0, ctx);
        }
        if (a.L == 4) {
            u.entries[i] = combine_lanes_4(acc, ctx);
        } else {
            auto [pe, po] = (form == Form::transposed)
                                ? combine_lanes_2(acc, ctx)
                                : combine_lanes_2_original(acc, t, ctx);
            u.entries[i] = {std::move(pe), std::move(po)};
        }
    }
    return u;
}

NttDomainVector matvec_baseline_4mult(const NttDomainMatrix& a,
                                      const NttDomainVector& r, OpCounter& ctx)
{
    check_shapes(a, r, 2, "matvec_baseline_4mult");
    const std::size_t k = a.k;
    const std::size_t m = r.entries[0][0].size();
    const TwiddleTables t = build_tables(m);

    NttDomainVector u;
    u.k = k;
    u.L = 2;
    u.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<NttVector> acc;
        for (std::size_t j = 0; j < k; ++j) {
            // every entry rebuilds its own preprocessed operands
            const PreprocessedVectorEntry f =
                preprocess_vector_entry_2(r.entries[j][0], r.entries[j][1], t, ctx);
            const PreprocessedMatrixEntry g = preprocess_matrix_entry_2(
                a.entries[i][j][0], a.entries[i][j][1], ctx);
            auto [pe, po] = combine_lanes_2(entry_mul_lanes(g, f, ctx), ctx);
            accumulate(acc, {std::move(pe), std::move(po)}, j == 0, ctx);
        }
        u.entries[i] = std::move(acc);
    }
    return u;
}

NttDomainVector matvec_baseline_5mult(const NttDomainMatrix& a,
                                      const NttDomainVector& r, OpCounter& ctx)
{
    check_shapes(a, r, 2, "matvec_baseline_5mult");
    const std::size_t k = a.k;
    const std::size_t m = r.entries[0][0].size();
    const TwiddleTables t = build_tables(m);

    NttDomainVector u;
    u.k = k;
    u.L = 2;
    u.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<NttVector> acc;
        for (std::size_t j = 0; j < k; ++j) {
            const NttVector& ae = a.entries[i][j][0];
            const NttVector& ao = a.entries[i][j][1];
            const NttVector& re = r.entries[j][0];
            const NttVector& ro = r.entries[j][1];
            NttVector pe = pointwise_add(
                pointwise_mul(ae, re, ctx),
                mul_y_constant(pointwise_mul(ao, ro, ctx), t, ctx), ctx);
            NttVector po = pointwise_add(pointwise_mul(ae, ro, ctx),
                                         pointwise_mul(ao, re, ctx), ctx);
            accumulate(acc, {std::move(pe), std::move(po)}, j == 0, ctx);
        }
        u.entries[i] = std::move(acc);
    }
    return u;
}

NttDomainVector matvec_four_parallel_unshared(const NttDomainMatrix& a,
                                              const NttDomainVector& r,
                                              OpCounter& ctx)
{
    check_shapes(a, r, 4, "matvec_four_parallel_unshared");
    const std::size_t k = a.k;
    const std::size_t m = r.entries[0][0].size();
    const TwiddleTables t = build_tables(m);

    NttDomainVector u;
    u.k = k;
    u.L = 4;
    u.entries.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<NttVector> acc;
        for (std::size_t j = 0; j < k; ++j) {
            const NttVector& a0 = a.entries[i][j][0];
            const NttVector& a1 = a.entries[i][j][1];
            const NttVector& a2 = a.entries[i][j][2];
            const NttVector& a3 = a.entries[i][j][3];
            const NttVector& r0 = r.entries[j][0];
            const NttVector& r1 = r.entries[j][1];
            const NttVector& r2 = r.entries[j][2];
            const NttVector& r3 = r.entries[j][3];

            // outer split on x-parity, Karatsuba inner on the two squares,
            // naive inner on the middle term
            const NttVector a02 = pointwise_add(a0, a2, ctx);
            const NttVector r02 = pointwise_add(r0, r2, ctx);
            const NttVector a13 = pointwise_add(a1, a3, ctx);
            const NttVector r13 = pointwise_add(r1, r3, ctx);
            const NttVector a01 = pointwise_add(a0, a1, ctx);
            const NttVector a23 = pointwise_add(a2, a3, ctx);
            const NttVector r01 = pointwise_add(r0, r1, ctx);
            const NttVector r23 = pointwise_add(r2, r3, ctx);

            const NttVector u0 = pointwise_mul(a0, r0, ctx);
            const NttVector u1 = pointwise_mul(a02, r02, ctx);
            const NttVector u2 = pointwise_mul(a2, r2, ctx);
            const NttVector w0 = pointwise_mul(a1, r1, ctx);
            const NttVector w1 = pointwise_mul(a13, r13, ctx);
            const NttVector w2 = pointwise_mul(a3, r3, ctx);
            const NttVector vee = pointwise_mul(a01, r01, ctx);
            const NttVector voo = pointwise_mul(a23, r23, ctx);
            const NttVector veo = pointwise_mul(a01, r23, ctx);
            const NttVector voe = pointwise_mul(a23, r01, ctx);

            const NttVector ku = pointwise_sub(pointwise_sub(u1, u0, ctx), u2, ctx);
            const NttVector kw = pointwise_sub(pointwise_sub(w1, w0, ctx), w2, ctx);

            std::vector<NttVector> p(4);
            p[0] = pointwise_add(
                u0, mul_y_constant(pointwise_add(u2, kw, ctx), t, ctx), ctx);
            p[2] = pointwise_add(pointwise_add(ku, w0, ctx),
                                 mul_y_constant(w2, t, ctx), ctx);
            const NttVector v0 = pointwise_sub(pointwise_sub(vee, u0, ctx), w0, ctx);
            const NttVector v2 = pointwise_sub(pointwise_sub(voo, u2, ctx), w2, ctx);
            p[1] = pointwise_add(v0, mul_y_constant(v2, t, ctx), ctx);
            p[3] = pointwise_sub(
                pointwise_sub(pointwise_add(veo, voe, ctx), ku, ctx), kw, ctx);

            accumulate(acc, p, j == 0, ctx);
        }
        u.entries[i] = std::move(acc);
    }
    return u;
}

NttDomainVector matvec_stage(Algorithm alg, const NttDomainMatrix& a,
                             const NttDomainVector& r, OpCounter& ctx)
{
    switch (alg) {
    case Algorithm::baseline4mult: return matvec_baseline_4mult(a, r, ctx);
    case Algorithm::baseline5mult: return matvec_baseline_5mult(a, r, ctx);
    case Algorithm::proposed2: return matvec_proposed(a, r, Form::transposed, ctx);
    case Algorithm::unshared4: return matvec_four_parallel_unshared(a, r, ctx);
    case Algorithm::proposed4: return matvec_proposed(a, r, Form::transposed, ctx);
    }
    throw std::invalid_argument("matvec_stage: bad enum value");
}

PolyVector matvec_pipeline(Algorithm alg,
                           const std::vector<std::vector<Polynomial>>& a,
                           const PolyVector& r, PipelineCounters& pc)
{
    const std::size_t L = algorithm_L(alg);
    const NttDomainMatrix an = matrix_to_ntt(a, L, pc.transform);
    const NttDomainVector rn = vector_to_ntt(r, L, pc.transform);
    const NttDomainVector un = matvec_stage(alg, an, rn, pc.stage);
    return vector_from_ntt(un, pc.transform);
}

PolyVector matvec_with_error(Algorithm alg,
                             const std::vector<std::vector<Polynomial>>& a,
                             const PolyVector& r, const PolyVector& e,
                             PipelineCounters& pc)
{
    PolyVector u = matvec_pipeline(alg, a, r, pc);
    if (e.k() != u.k())
        throw std::invalid_argument("matvec_with_error: error vector mismatch");
    for (std::size_t i = 0; i < u.k(); ++i) {
        if (e.entries[i].size() != u.entries[i].size())
            throw std::invalid_argument("matvec_with_error: error length mismatch");
        for (std::size_t c = 0; c < u.entries[i].size(); ++c)
            u.entries[i].coeffs[c] =
                add_mod(u.entries[i].coeffs[c], e.entries[i].coeffs[c], pc.stage);
    }
    return u;
}

} // namespace kybermat
