// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/polyphase.hpp"

#include <stdexcept>

namespace kybermat {

PhaseSplit decompose(const Polynomial& f, std::size_t L)
{
    if (L != 2 && L != 4)
        throw std::invalid_argument("decompose: L must be 2 or 4");
    if (f.size() == 0 || f.size() % L != 0)
        throw std::invalid_argument("decompose: length not divisible by L");

    const std::size_t phase_len = f.size() / L;
    PhaseSplit out;
    out.L = L;
    out.phases.assign(L, Polynomial(phase_len));
    for (std::size_t i = 0; i < f.size(); ++i)
        out.phases[i % L].coeffs[i / L] = f.coeffs[i];
    return out;
}

Polynomial recompose(const PhaseSplit& s)
{
    if (s.phases.size() != s.L || s.L == 0)
        throw std::invalid_argument("recompose: malformed split");
    const std::size_t phase_len = s.phases[0].size();
    for (const auto& p : s.phases)
        if (p.size() != phase_len)
            throw std::invalid_argument("recompose: inconsistent phase lengths");

    Polynomial f(phase_len * s.L);
    for (std::size_t t = 0; t < s.L; ++t)
        for (std::size_t i = 0; i < phase_len; ++i)
            f.coeffs[s.L * i + t] = s.phases[t].coeffs[i];
    return f;
}

} // namespace kybermat
