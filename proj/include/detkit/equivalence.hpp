#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detkit/integer.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

/// The block product [[I,-B],[I-AX,A]] * [[I,0],[X,I]] == [[I-BX,-B],[I,A]].
bool block_identity_product(const Matrix& a, const Matrix& b, const Matrix& x);

/// Column transform revealing P: [[I,-B],[I-AX,A]] * [[I,B],[0,I]]
/// == [[I,0],[I-AX,A+B-AXB]].
bool block_identity_reveal_p(const Matrix& a, const Matrix& b, const Matrix& x);

/// Column transform revealing Q: [[I-BX,-B],[I,A]] * [[I,-A],[0,I]]
/// == [[I-BX,-(A+B-BXA)],[I,0]].
bool block_identity_reveal_q(const Matrix& a, const Matrix& b, const Matrix& x);

/// U * diag(P, I_n) * V = diag(Q, I_n) with det(U) = det(V) = 1, where
/// P = A+B-AXB and Q = A+B-BXA. U and V come with their factorizations into
/// named determinant-one block factors; the product identity and both
/// determinants are re-verified before returning.
struct SLWitness {
    Matrix u, v;
    std::vector<std::pair<std::string, Matrix>> left_factors;   // product = u
    std::vector<std::pair<std::string, Matrix>> right_factors;  // product = v
};

SLWitness sl_witness(const Matrix& a, const Matrix& b, const Matrix& x);

/// For invertible A and B: (U, V) = (B A^-1, B^-1 A) with U P V = Q.
/// Rejects non-invertible inputs, reporting the offending determinant.
std::pair<Matrix, Matrix> direct_equivalence_witness(const Matrix& a, const Matrix& b,
                                                     const Matrix& x);

/// Smith normal form over Z: D = U M V with U, V of determinant +-1,
/// D diagonal with non-negative divisibility-ordered entries.
struct SmithResult {
    Matrix d, u, v;
    std::vector<Integer> diagonal;
};

SmithResult smith_normal_form(const Matrix& m);

/// Equivalence-screening data for one matrix: determinant, trace, the 1x1
/// entry-ideal generators, all k x k minors, and (for Z[x] matrices) Smith
/// normal forms of the integer evaluations x -> c over a range.
struct InvariantProfile {
    std::string det;
    std::string trace;
    std::vector<std::string> entry_ideal_generators;
    std::vector<std::vector<std::string>> minors;  // minors[k-1] lists the k x k minors
    std::vector<std::pair<long, std::vector<std::string>>> snf_evaluations;
};

InvariantProfile invariant_profile(const Matrix& m, long eval_lo, long eval_hi);

/// The Z[x] fixture: X = I, A = [[0,0],[0,x]], B = [[0,2],[0,x]] giving
/// P = [[0,2],[0,2x-x^2]] and Q = [[0,2-2x],[0,2x-x^2]]. Recomputes P and Q,
/// checks them against those expected matrices, and reports both invariant
/// profiles together with which screening invariants (if any) separate them.
/// Non-equivalence itself is not asserted.
struct NonequivalenceFixture {
    Matrix a, b, x, p, q;
    bool matches_expected;
    InvariantProfile p_profile, q_profile;
    bool profiles_separate;
    std::vector<std::string> findings;
};

NonequivalenceFixture nonequivalence_fixture(long eval_lo = -10, long eval_hi = 10);

}  // namespace detkit
