// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kybermat/matvec.hpp"

namespace kybermat {

/// Closed-form operation counts for the NTT-domain stage.
struct ClosedFormCounts {
    std::uint64_t modmul = 0;
    std::uint64_t modadd = 0;
};

/// Stage complexity as a function of k and n. For baseline5mult and
/// unshared4 the modadd entry follows the published formula, which the
/// implementation does not reproduce; the report prints both so the gap is
/// visible.
ClosedFormCounts closed_form_counts(Algorithm alg, std::size_t k,
                                    std::size_t n = kRingDegree);

struct ComplexityReport {
    Algorithm alg = Algorithm::baseline4mult;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t L = 0;
    OpCounter measured;
    ClosedFormCounts cf;
};

/// Runs one random instance through the full pipeline and records the stage
/// counters. Counts are data independent, so any seed gives the same report.
ComplexityReport measure(Algorithm alg, std::size_t k, std::uint64_t seed = 1);

/// All five algorithms for each requested k, ordered by algorithm then k.
std::vector<ComplexityReport> measure_all(const std::vector<std::size_t>& ks,
                                          std::uint64_t seed = 1);

/// One line: alg= k= n= L= modmul= modadd= cf_modmul= cf_modadd=
std::string format_report_line(const ComplexityReport& r);

/// Percentage reductions averaged uniformly over k in {2, 3, 4}, computed
/// from the closed forms. Values are percent, not fractions.
struct ReductionAverages {
    double p2_vs_4mult_mul = 0;     // proposed2 multiplier saving vs baseline4mult
    double p2_vs_4mult_add = 0;     // proposed2 adder saving vs baseline4mult
    double p2_vs_5mult_mul = 0;     // proposed2 multiplier saving vs baseline5mult
    double b5_fewer_adds_vs_p2 = 0; // baseline5mult adder saving vs proposed2
    double p4_vs_unshared_mul = 0;  // proposed4 multiplier saving vs unshared4
    double p4_vs_unshared_add = 0;  // proposed4 adder saving vs unshared4
};

ReductionAverages reduction_averages(std::size_t n = kRingDegree);

/// Human-readable per-k breakdown plus the averages above.
std::string reduction_summary(std::size_t n = kRingDegree);

/// Clock cycles for one matrix-vector product on the L-parallel datapath
/// with an N_pipe-stage pipelined multiplier: n / L - 2 + N_pipe.
std::uint64_t latency_model(std::size_t n, std::size_t L, std::uint64_t n_pipe);

} // namespace kybermat
