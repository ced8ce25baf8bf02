// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kybermat/ntt.hpp"
#include "kybermat/poly.hpp"

namespace kybermat {

/// Shared preprocessing of one vector entry: the lane inputs that feed the
/// parallel multipliers. 3 lanes for L=2, 9 lanes for L=4 (the two-parallel
/// structure applied at both nesting levels).
struct PreprocessedVectorEntry {
    std::size_t L = 0;
    std::vector<NttVector> lanes;
};

/// Preprocessing of one matrix entry (phase sums), same lane layout.
struct PreprocessedMatrixEntry {
    std::size_t L = 0;
    std::vector<NttVector> lanes;
};

/// Per-lane pointwise products for one (row, column) entry.
using LaneProducts = std::vector<NttVector>;

// Two-parallel structure, transposed form.
// f = [r_o - r_e, r_e, Y*r_o - r_e]; one Y product and two additions.
PreprocessedVectorEntry preprocess_vector_entry_2(const NttVector& r_even,
                                                  const NttVector& r_odd,
                                                  const TwiddleTables& t,
                                                  OpCounter& ctx);

// g = [a_e, a_e + a_o, a_o]; one addition.
PreprocessedMatrixEntry preprocess_matrix_entry_2(const NttVector& a_even,
                                                  const NttVector& a_odd,
                                                  OpCounter& ctx);

/// Lane-by-lane pointwise products; works for any matching lane count.
LaneProducts entry_mul_lanes(const PreprocessedMatrixEntry& g,
                             const PreprocessedVectorEntry& f,
                             OpCounter& ctx);

/// Transposed-form output combine: (p_e, p_o) = (s1 + s2, s1 + s0).
std::pair<NttVector, NttVector> combine_lanes_2(const LaneProducts& s,
                                                OpCounter& ctx);

// Two-parallel structure, original form. The Y product is deferred to the
// per-row combine, so the operation totals match the transposed form.
// f = [r_e, r_o, r_e + r_o]; one addition.
PreprocessedVectorEntry preprocess_vector_entry_2_original(const NttVector& r_even,
                                                           const NttVector& r_odd,
                                                           OpCounter& ctx);

// g = [a_e, a_o, a_e + a_o]; one addition.
PreprocessedMatrixEntry preprocess_matrix_entry_2_original(const NttVector& a_even,
                                                           const NttVector& a_odd,
                                                           OpCounter& ctx);

LaneProducts entry_mul_original_form_2(const PreprocessedMatrixEntry& g,
                                       const PreprocessedVectorEntry& f,
                                       const TwiddleTables& t,
                                       OpCounter& ctx);

/// Original-form combine: p_e = s0 + Y*s1, p_o = s2 - s0 - s1.
std::pair<NttVector, NttVector> combine_lanes_2_original(const LaneProducts& s,
                                                         const TwiddleTables& t,
                                                         OpCounter& ctx);

// Four-parallel structure: the two-parallel transposed form nested on itself
// (outer split in x, inner split in y = x^2, constant W = NTT(x^4)).
// Lane index is 3*outer + inner. Three W products and 15 additions.
PreprocessedVectorEntry preprocess_vector_entry_4(const std::vector<NttVector>& r_phases,
                                                  const TwiddleTables& t,
                                                  OpCounter& ctx);

/// Matrix-side phase sums for the nested structure; 7 additions.
PreprocessedMatrixEntry preprocess_matrix_entry_4(const std::vector<NttVector>& a_phases,
                                                  OpCounter& ctx);

/// Inner combine per outer lane, then outer combine; 10 additions.
/// Returns output phases [p0, p1, p2, p3].
std::vector<NttVector> combine_lanes_4(const LaneProducts& s, OpCounter& ctx);

} // namespace kybermat
