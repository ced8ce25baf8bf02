// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/ntt.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kybermat {

namespace {

std::size_t bitrev(std::size_t x, unsigned bits)
{
    std::size_t r = 0;
    for (unsigned b = 0; b < bits; ++b)
        r |= ((x >> b) & 1u) << (bits - 1 - b);
    return r;
}

void check_tables(const NttVector& v, const TwiddleTables& t, const char* who)
{
    if (v.size() != t.m)
        throw std::invalid_argument(std::string(who) + ": length does not match tables");
}

void check_same_size(const NttVector& u, const NttVector& v, const char* who)
{
    if (u.size() != v.size())
        throw std::invalid_argument(std::string(who) + ": length mismatch");
}

} // namespace

TwiddleTables build_tables(std::size_t m)
{
    if (m != 64 && m != 128)
        throw std::invalid_argument("build_tables: m must be 64 or 128");

    TwiddleTables t;
    t.m = m;
    t.psi = (m == 128) ? 17 : 289;
    t.m_inverse = inv_mod(static_cast<Residue>(m));

    const unsigned bits = static_cast<unsigned>(std::countr_zero(m));
    t.zetas.resize(m);
    t.inv_zetas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        t.zetas[i] = pow_mod(t.psi, bitrev(i, bits));
        t.inv_zetas[i] = inv_mod(t.zetas[i]);
    }

    // y = x^L maps to psi^(2*bitrev(j)+1) at evaluation slot j.
    t.y_constant = NttVector(m);
    for (std::size_t j = 0; j < m; ++j)
        t.y_constant.evals[j] = pow_mod(t.psi, 2 * bitrev(j, bits) + 1);
    return t;
}

NttVector ntt_forward(const Polynomial& f, const TwiddleTables& t, OpCounter& ctx)
{
    if (f.size() != t.m)
        throw std::invalid_argument("ntt_forward: length does not match tables");

    NttVector a;
    a.evals = f.coeffs;
    const std::size_t m = t.m;
    for (std::size_t len = m / 2; len >= 1; len >>= 1) {
        for (std::size_t start = 0; start < m; start += 2 * len) {
            const Residue zeta = t.zetas[m / (2 * len) + start / (2 * len)];
            for (std::size_t j = start; j < start + len; ++j) {
                const Residue tmp = mul_mod(zeta, a.evals[j + len], ctx);
                a.evals[j + len] = sub_mod(a.evals[j], tmp, ctx);
                a.evals[j] = add_mod(a.evals[j], tmp, ctx);
            }
        }
    }
    return a;
}

Polynomial ntt_inverse(const NttVector& v, const TwiddleTables& t, OpCounter& ctx)
{
    check_tables(v, t, "ntt_inverse");

    Polynomial a;
    a.coeffs = v.evals;
    const std::size_t m = t.m;
    for (std::size_t len = 1; len <= m / 2; len <<= 1) {
        for (std::size_t start = 0; start < m; start += 2 * len) {
            const Residue inv_zeta = t.inv_zetas[m / (2 * len) + start / (2 * len)];
            for (std::size_t j = start; j < start + len; ++j) {
                const Residue x = a.coeffs[j];
                const Residue y = a.coeffs[j + len];
                a.coeffs[j] = add_mod(x, y, ctx);
                a.coeffs[j + len] = mul_mod(inv_zeta, sub_mod(x, y, ctx), ctx);
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        a.coeffs[i] = mul_mod(a.coeffs[i], t.m_inverse, ctx);
    return a;
}

NttVector ntt_eval_reference(const Polynomial& f, const TwiddleTables& t)
{
    if (f.size() != t.m)
        throw std::invalid_argument("ntt_eval_reference: length does not match tables");

    const unsigned bits = static_cast<unsigned>(std::countr_zero(t.m));
    NttVector out(t.m);
    for (std::size_t j = 0; j < t.m; ++j) {
        const Residue point = pow_mod(t.psi, 2 * bitrev(j, bits) + 1);
        std::uint64_t acc = 0;
        for (std::size_t i = t.m; i-- > 0;)
            acc = (acc * point + f.coeffs[i]) % kQ;
        out.evals[j] = static_cast<Residue>(acc);
    }
    return out;
}

NttVector pointwise_mul(const NttVector& u, const NttVector& v, OpCounter& ctx)
{
    check_same_size(u, v, "pointwise_mul");
    NttVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out.evals[i] = mul_mod(u.evals[i], v.evals[i], ctx);
    return out;
}

NttVector pointwise_add(const NttVector& u, const NttVector& v, OpCounter& ctx)
{
    check_same_size(u, v, "pointwise_add");
    NttVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out.evals[i] = add_mod(u.evals[i], v.evals[i], ctx);
    return out;
}

NttVector pointwise_sub(const NttVector& u, const NttVector& v, OpCounter& ctx)
{
    check_same_size(u, v, "pointwise_sub");
    NttVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out.evals[i] = sub_mod(u.evals[i], v.evals[i], ctx);
    return out;
}

NttVector mul_y_constant(const NttVector& v, const TwiddleTables& t, OpCounter& ctx)
{
    check_tables(v, t, "mul_y_constant");
    ++ctx.yconst_products;
    NttVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.evals[i] = mul_mod(v.evals[i], t.y_constant.evals[i], ctx);
    return out;
}

} // namespace kybermat
