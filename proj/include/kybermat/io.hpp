// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kybermat/matvec.hpp"

namespace kybermat {

/// Thrown for malformed or inconsistent kybermat files. Messages carry the
/// offending line number.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format, one object per document:
//   kybermat v1 kind=<matrix|vector|output> k=<k> n=<n> q=3329 L=<L>
//       domain=<ntt|coeff> order=bitrev
// followed, per (entry, phase), by a header line
//   entry i=<row> j=<col> phase=<t>:
// and the m = n / L space-separated decimal residues on the next line.
// Vectors use j=0. NTT-domain values are stored in bit-reversed evaluation
// order; coefficient-domain documents store the polyphase components.
// Documents may be concatenated in one file; the readers consume exactly
// one document each.

void write_matrix(std::ostream& os, const NttDomainMatrix& a);

/// NTT-domain vector document; kind must be "vector" or "output".
void write_vector(std::ostream& os, const NttDomainVector& v,
                  const std::string& kind);

/// Coefficient-domain vector document (phases of each entry, undecimated
/// values recoverable via recompose). kind as above.
void write_poly_vector(std::ostream& os, const PolyVector& r, std::size_t L,
                       const std::string& kind);

NttDomainMatrix read_matrix(std::istream& is);

/// Reads an NTT-domain vector or output document; reports the kind via
/// kind_out if non-null.
NttDomainVector read_vector(std::istream& is, std::string* kind_out = nullptr);

/// Reads a coefficient-domain vector document; reports the declared L via
/// L_out if non-null.
PolyVector read_poly_vector(std::istream& is, std::size_t* L_out = nullptr,
                            std::string* kind_out = nullptr);

} // namespace kybermat
