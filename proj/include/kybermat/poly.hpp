// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "kybermat/modarith.hpp"

namespace kybermat {

/// Element of Z_q[x]/(x^m + 1), stored as coefficients 0..m-1.
struct Polynomial {
    std::vector<Residue> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::size_t m) : coeffs(m, 0) {}

    std::size_t size() const noexcept { return coeffs.size(); }
    bool operator==(const Polynomial&) const = default;
};

/// NTT-domain evaluation vector, evals[j] = f(psi^(2*bitrev(j)+1)).
struct NttVector {
    std::vector<Residue> evals;

    NttVector() = default;
    explicit NttVector(std::size_t m) : evals(m, 0) {}

    std::size_t size() const noexcept { return evals.size(); }
    bool operator==(const NttVector&) const = default;
};

/// Length-k vector of length-256 polynomials (the r / e1 / u vectors).
struct PolyVector {
    std::vector<Polynomial> entries;

    PolyVector() = default;
    PolyVector(std::size_t k, std::size_t n) : entries(k, Polynomial(n)) {}

    std::size_t k() const noexcept { return entries.size(); }
    bool operator==(const PolyVector&) const = default;
};

inline constexpr std::size_t kRingDegree = 256;

} // namespace kybermat
