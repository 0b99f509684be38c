#pragma once

#include <memory>
#include <string>
#include <vector>

#include "detkit/integer.hpp"
#include "detkit/monomial.hpp"

namespace detkit {

/// Sparse multivariate polynomial over the integers.
///
/// Terms are held in descending graded-lex order with no zero coefficients,
/// so structural equality is value equality and printing is canonical.
/// The variable table maps index -> display name and is shared between all
/// polynomials of one ring.
class MultiPoly {
public:
    using VarTable = std::vector<std::string>;
    using VarTablePtr = std::shared_ptr<const VarTable>;

    struct Term {
        Monomial mono;
        Integer coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    explicit MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarTablePtr vars, Integer c);
    static MultiPoly variable(VarTablePtr vars, std::uint32_t index);

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Constant term (zero when absent).
    Integer constant_value() const;

    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;

    /// Exact quotient this / d; throws std::domain_error when the division
    /// is not exact. Used by fraction-free elimination.
    MultiPoly divexact(const MultiPoly& d) const;

    /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
    Integer content() const;

    /// Evaluation at the fixed integer point variable i -> i^2 + 2; part of
    /// the digest printed for oversized polynomials.
    Integer eval_at_probe_point() const;

    std::string to_string() const;

private:
    friend class RingContext;
    void check_same_table(const MultiPoly& o) const;

    VarTablePtr vars_;
    std::vector<Term> terms_;  // descending grlex, no zero coefficients
};

}  // namespace detkit
