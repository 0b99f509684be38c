#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "detkit/integer.hpp"
#include "detkit/multipoly.hpp"

namespace detkit {

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

enum class RingKind { Integers, Modular, Polynomial, Fraction };

class RingElement;

/// Numerator/denominator over the base domain of a fraction ring.
struct FractionParts {
    std::shared_ptr<const RingElement> num;
    std::shared_ptr<const RingElement> den;
};

/// Exact element of one of the supported commutative rings. Carries its ring
/// so that mixed-context arithmetic is rejected instead of silently wrong.
/// Values are immutable once constructed.
class RingElement {
public:
    using Rep = std::variant<Integer, MultiPoly, FractionParts>;

    static RingElement zero(const Ring& ring);
    static RingElement one(const Ring& ring);
    static RingElement from_int(const Ring& ring, long v) { return from_integer(ring, Integer(v)); }
    static RingElement from_integer(const Ring& ring, const Integer& v);
    /// Single-variable monomial of a polynomial ring.
    static RingElement variable(const Ring& ring, std::uint32_t index);
    /// num/den over the base domain of a fraction ring.
    static RingElement fraction(const Ring& ring, const RingElement& num, const RingElement& den);

    const Ring& ring() const { return ring_; }
    RingKind kind() const;

    bool is_zero() const;
    bool is_one() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// Value size for report statistics: polynomial term count, or numerator
    /// plus denominator term count for fractions, 1 for plain scalars.
    std::size_t term_count() const;

    std::string to_string() const;

    const Integer& integer_value() const;
    const MultiPoly& poly_value() const;
    const RingElement& fraction_num() const;
    const RingElement& fraction_den() const;

private:
    friend class RingContext;
    RingElement(Ring ring, Rep rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    Ring ring_;
    Rep rep_;
};

/// Descriptor and operation dispatcher for one commutative ring. Immutable;
/// share via `Ring`.
class RingContext : public std::enable_shared_from_this<RingContext> {
public:
    static Ring integers();
    static Ring modular(const Integer& modulus);  // modulus >= 2, not necessarily prime
    static Ring polynomial(std::vector<std::string> variable_names);
    static Ring fraction_of(const Ring& base);  // base must be an integral domain context

    RingKind kind() const { return kind_; }
    const Integer& modulus() const { return modulus_; }
    const MultiPoly::VarTablePtr& var_table() const { return vars_; }
    const Ring& base() const { return base_; }

    std::size_t var_count() const { return vars_ ? vars_->size() : 0; }
    const std::string& var_name(std::uint32_t index) const { return (*vars_)[index]; }

    /// "Z", "Z/6", "Z[x,y]", "Frac(Z[x,y])".
    std::string description() const;

    bool same_as(const RingContext& o) const;

    /// Exact division is available (fraction-free elimination precondition).
    bool supports_exact_division() const {
        return kind_ == RingKind::Integers || kind_ == RingKind::Polynomial;
    }

private:
    friend class RingElement;
    RingContext() = default;

    void require_same(const RingElement& a, const RingElement& b) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    bool eq(const RingElement& a, const RingElement& b) const;

    RingElement make(RingElement::Rep rep) const;
    RingElement canonical_modular(Integer v) const;
    RingElement make_fraction_parts(const RingElement& num, const RingElement& den) const;

    RingKind kind_ = RingKind::Integers;
    Integer modulus_;
    MultiPoly::VarTablePtr vars_;
    Ring base_;

public:
    // Non-member-style operations that need dispatch; kept here so the
    // element type stays small.
    friend bool is_unit(const RingElement& a);
    friend RingElement inverse_of_unit(const RingElement& a);
    friend RingElement divexact(const RingElement& a, const RingElement& b);
    friend RingElement substitute(const RingElement& p,
                                  const std::map<std::uint32_t, RingElement>& bindings,
                                  const Ring& target);
    friend class RingElement;
};

/// Unit test: |a| = 1 over Z, gcd(a, m) = 1 over Z/m, constant +-1 over
/// Z[vars], nonzero over a fraction field.
bool is_unit(const RingElement& a);

/// Multiplicative inverse of a unit; throws std::invalid_argument otherwise.
RingElement inverse_of_unit(const RingElement& a);

/// Exact quotient in Z or Z[vars]; throws std::domain_error when not exact
/// and std::invalid_argument when the ring has no exact division.
RingElement divexact(const RingElement& a, const RingElement& b);

/// Image of a polynomial-ring element under the homomorphism sending each
/// bound variable to its binding (elements of `target`). Every variable
/// occurring in p must be bound; the error names the missing variable.
RingElement substitute(const RingElement& p,
                       const std::map<std::uint32_t, RingElement>& bindings,
                       const Ring& target);

RingElement pow(const RingElement& base, unsigned long exponent);

/// Equality by cross-multiplication for fraction elements; plain equality
/// elsewhere (same as operator==, named for emphasis at call sites).
inline bool fraction_eq(const RingElement& a, const RingElement& b) { return a == b; }

}  // namespace detkit
