#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detkit/matrix.hpp"
#include "detkit/report.hpp"
#include "detkit/ring.hpp"

namespace detkit {

/// n x n matrices A, B, X whose 3n^2 entries are independent indeterminates
/// a_i_j, b_i_j, x_i_j over Z. An identity that holds for these matrices
/// holds over every commutative ring by substitution.
struct GenericTriple {
    unsigned n;
    Ring ring;
    Matrix a, b, x;
};

/// Same idea for binary identities (2n^2 indeterminates).
struct GenericPair {
    unsigned n;
    Ring ring;
    Matrix first, second;
};

GenericTriple make_generic_triple(unsigned n);
GenericPair make_generic_pair(unsigned n, const std::string& first_prefix,
                              const std::string& second_prefix);

/// P = A + B - AXB and Q = A + B - BXA.
std::pair<Matrix, Matrix> ternary_pair(const Matrix& a, const Matrix& b, const Matrix& x);

/// det(A + B - AXB) == det(A + B - BXA); holds for every input over a
/// commutative ring. A failing report indicates an implementation bug.
IdentityReport check_ternary_det(const Matrix& a, const Matrix& b, const Matrix& x);

/// A + B - AXB is invertible iff A + B - BXA is.
IdentityReport check_ternary_units(const Matrix& a, const Matrix& b, const Matrix& x);

/// tr(A + B - AXB) == tr(A + B - XBA) == tr(A + B - BAX).
IdentityReport check_trace_identity(const Matrix& a, const Matrix& b, const Matrix& x);

/// The deliberate failure: with A = E11, X = E12, B = s E21 (s != 0, n >= 2),
/// tr(A + B - AXB) differs from tr(A + B - BXA) by exactly s. The report has
/// holds == false by construction.
IdentityReport trace_counterexample(const RingElement& s, unsigned n);

/// With A = [[0,1],[0,0]], B = [[0,1],[1,0]], X = [[0,x],[y,1]] over the ring
/// of x and y: the determinants of A+B-AXB, A+B-XBA, A+B-BAX, which evaluate
/// to y-2, x-2 and 2y-2.
std::array<RingElement, 3> phk_values(const RingElement& x, const RingElement& y);

/// phk_values over Z[x,y], checked against the expected three polynomials
/// (pairwise distinct even though the matrices share a trace).
IdentityReport phk_report();

/// det(I - AB) == det(I - BA).
IdentityReport sylvester_check(const Matrix& a, const Matrix& b);

/// Substituting A -> I-A, B -> I-B, X -> I into the ternary identity turns
/// its two sides into I-AB and I-BA entry-wise.
IdentityReport specialize_sylvester_route1(const Matrix& a, const Matrix& b);

/// The other specialization: the B slot receives I and the X slot receives
/// I+B with B the surviving free matrix; both sides again become I-AB and
/// I-BA entry-wise. With literal_reading = true the (documented, vacuous)
/// sequential reading is used instead: B := I first, then X := I+B = 2I,
/// which collapses both sides to I-A.
IdentityReport specialize_sylvester_route2(const Matrix& a, const Matrix& b,
                                           bool literal_reading = false);

/// M1 = I-AX+AXA, M2 = I-XA+AXA, M3 = I-AX+A^2X, M4 = I-XA+XA^2.
std::array<Matrix, 4> theorem32_matrices(const Matrix& a, const Matrix& x);

/// The four matrices share determinant and trace for every A, X; for n <= 2
/// they share the full characteristic polynomial (asserted). For n >= 3 the
/// charpoly comparison outcome is recorded in the note, not asserted.
IdentityReport check_theorem32(const Matrix& a, const Matrix& x);

/// Fixed 2x2 instance over Z showing I-AXB invertible while I-BXA is not,
/// even though A+B-AXB and A+B-BXA both have determinant zero.
IdentityReport example31();

/// Fixed symbolic instance over Z[r,s,t] of the four-matrix family with
/// common determinant 1 + sr and common trace 2 + sr.
IdentityReport example33();

/// I - ab invertible iff I - ba invertible (matrix-ring instance).
IdentityReport jacobson_check(const Matrix& a, const Matrix& b);

/// a + b - axb invertible iff a + b - bxa invertible (matrix-ring instance).
IdentityReport super_jacobson_check(const Matrix& a, const Matrix& b, const Matrix& x);

/// Expand both sides of the named identity over Z[generic entries] and
/// compare exactly; a holding report proves the identity for that n over all
/// commutative rings. Ids: ternary-det, trace, sylvester, theorem32-det,
/// theorem32-trace, theorem32-charpoly.
IdentityReport prove_identity_generic(std::string_view identity_id, unsigned n);

/// Second proof route over Frac(Z[3n^2 vars]): checks the entry-wise identity
/// A^-1 P B^-1 = B^-1 + A^-1 - X = B^-1 Q A^-1 by cross-multiplication, then
/// the determinant cancellation giving det(P) = det(Q). Intended for n <= 2;
/// larger n runs with a budget warning in the note.
IdentityReport fraction_proof_check(unsigned n);

/// The stable identity ids exposed by the CLI.
const std::vector<std::string>& identity_ids();

}  // namespace detkit
