#include "detkit/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace detkit {

namespace {

std::shared_ptr<const RingElement> box(RingElement e) {
    return std::make_shared<const RingElement>(std::move(e));
}

}  // namespace

// ---------------------------------------------------------------- contexts

Ring RingContext::integers() {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->kind_ = RingKind::Integers;
    return ctx;
}

Ring RingContext::modular(const Integer& modulus) {
    if (modulus < Integer(2))
        throw std::invalid_argument("RingContext::modular: modulus must be >= 2");
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->kind_ = RingKind::Modular;
    ctx->modulus_ = modulus;
    return ctx;
}

Ring RingContext::polynomial(std::vector<std::string> variable_names) {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->kind_ = RingKind::Polynomial;
    ctx->vars_ = std::make_shared<const MultiPoly::VarTable>(std::move(variable_names));
    return ctx;
}

Ring RingContext::fraction_of(const Ring& base) {
    if (!base || !base->supports_exact_division())
        throw std::invalid_argument("RingContext::fraction_of: base must be Z or a polynomial ring");
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->kind_ = RingKind::Fraction;
    ctx->base_ = base;
    return ctx;
}

std::string RingContext::description() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Modular: return "Z/" + modulus_.str();
        case RingKind::Polynomial: {
            std::ostringstream out;
            out << "Z[";
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                if (i) out << ",";
                out << (*vars_)[i];
            }
            out << "]";
            return out.str();
        }
        case RingKind::Fraction: return "Frac(" + base_->description() + ")";
    }
    return "?";
}

bool RingContext::same_as(const RingContext& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case RingKind::Integers: return true;
        case RingKind::Modular: return modulus_ == o.modulus_;
        case RingKind::Polynomial: return vars_ == o.vars_ || *vars_ == *o.vars_;
        case RingKind::Fraction: return base_->same_as(*o.base_);
    }
    return false;
}

void RingContext::require_same(const RingElement& a, const RingElement& b) const {
    if (!a.ring()->same_as(*b.ring()))
        throw std::invalid_argument("ring context mismatch: " + a.ring()->description() +
                                    " vs " + b.ring()->description());
}

RingElement RingContext::make(RingElement::Rep rep) const {
    return RingElement(shared_from_this(), std::move(rep));
}

RingElement RingContext::canonical_modular(Integer v) const {
    return make(v.mod(modulus_));
}

// --------------------------------------------------------------- factories

RingElement RingElement::zero(const Ring& ring) { return from_integer(ring, Integer(0)); }
RingElement RingElement::one(const Ring& ring) { return from_integer(ring, Integer(1)); }

RingElement RingElement::from_integer(const Ring& ring, const Integer& v) {
    switch (ring->kind()) {
        case RingKind::Integers: return RingElement(ring, v);
        case RingKind::Modular: return ring->canonical_modular(v);
        case RingKind::Polynomial: return RingElement(ring, MultiPoly::constant(ring->var_table(), v));
        case RingKind::Fraction: {
            FractionParts f{box(from_integer(ring->base(), v)),
                            box(one(ring->base()))};
            return RingElement(ring, std::move(f));
        }
    }
    throw std::logic_error("unreachable");
}

RingElement RingElement::variable(const Ring& ring, std::uint32_t index) {
    if (ring->kind() != RingKind::Polynomial)
        throw std::invalid_argument("RingElement::variable: not a polynomial ring");
    return RingElement(ring, MultiPoly::variable(ring->var_table(), index));
}

RingElement RingElement::fraction(const Ring& ring, const RingElement& num, const RingElement& den) {
    if (ring->kind() != RingKind::Fraction)
        throw std::invalid_argument("RingElement::fraction: not a fraction ring");
    if (!num.ring()->same_as(*ring->base()) || !den.ring()->same_as(*ring->base()))
        throw std::invalid_argument("RingElement::fraction: parts must lie in the base domain");
    return ring->make_fraction_parts(num, den);
}

/// Canonical form: zero becomes 0/1; integer-base fractions are reduced to
/// lowest terms with positive denominator; polynomial-base fractions are
/// kept as built (no multivariate gcd).
RingElement RingContext::make_fraction_parts(const RingElement& num, const RingElement& den) const {
    if (den.is_zero())
        throw std::invalid_argument("fraction denominator is zero");
    if (num.is_zero())
        return make(FractionParts{box(RingElement::zero(base_)), box(RingElement::one(base_))});
    if (base_->kind() == RingKind::Integers) {
        Integer n = num.integer_value(), d = den.integer_value();
        Integer g = Integer::gcd(n, d);
        n = n.divexact(g);
        d = d.divexact(g);
        if (d.sign() < 0) { n = -n; d = -d; }
        return make(FractionParts{box(RingElement::from_integer(base_, n)),
                                  box(RingElement::from_integer(base_, d))});
    }
    return make(FractionParts{box(num), box(den)});
}

// -------------------------------------------------------------- accessors

RingKind RingElement::kind() const { return ring_->kind(); }

const Integer& RingElement::integer_value() const {
    if (const Integer* v = std::get_if<Integer>(&rep_)) return *v;
    throw std::logic_error("RingElement: not an integer-backed value");
}

const MultiPoly& RingElement::poly_value() const {
    if (const MultiPoly* v = std::get_if<MultiPoly>(&rep_)) return *v;
    throw std::logic_error("RingElement: not a polynomial value");
}

const RingElement& RingElement::fraction_num() const {
    if (const FractionParts* f = std::get_if<FractionParts>(&rep_)) return *f->num;
    throw std::logic_error("RingElement: not a fraction value");
}

const RingElement& RingElement::fraction_den() const {
    if (const FractionParts* f = std::get_if<FractionParts>(&rep_)) return *f->den;
    throw std::logic_error("RingElement: not a fraction value");
}

bool RingElement::is_zero() const {
    switch (kind()) {
        case RingKind::Integers:
        case RingKind::Modular: return integer_value().is_zero();
        case RingKind::Polynomial: return poly_value().is_zero();
        case RingKind::Fraction: return fraction_num().is_zero();
    }
    return false;
}

bool RingElement::is_one() const { return *this == one(ring_); }

std::size_t RingElement::term_count() const {
    switch (kind()) {
        case RingKind::Integers:
        case RingKind::Modular: return 1;
        case RingKind::Polynomial: return poly_value().term_count();
        case RingKind::Fraction: return fraction_num().term_count() + fraction_den().term_count();
    }
    return 1;
}

// ------------------------------------------------------------- arithmetic

RingElement RingContext::add(const RingElement& a, const RingElement& b) const {
    require_same(a, b);
    switch (kind_) {
        case RingKind::Integers: return make(a.integer_value() + b.integer_value());
        case RingKind::Modular: return canonical_modular(a.integer_value() + b.integer_value());
        case RingKind::Polynomial: return make(a.poly_value() + b.poly_value());
        case RingKind::Fraction: {
            const RingElement &n1 = a.fraction_num(), &d1 = a.fraction_den();
            const RingElement &n2 = b.fraction_num(), &d2 = b.fraction_den();
            return make_fraction_parts(n1 * d2 + n2 * d1, d1 * d2);
        }
    }
    throw std::logic_error("unreachable");
}

RingElement RingContext::mul(const RingElement& a, const RingElement& b) const {
    require_same(a, b);
    switch (kind_) {
        case RingKind::Integers: return make(a.integer_value() * b.integer_value());
        case RingKind::Modular: return canonical_modular(a.integer_value() * b.integer_value());
        case RingKind::Polynomial: return make(a.poly_value() * b.poly_value());
        case RingKind::Fraction:
            return make_fraction_parts(a.fraction_num() * b.fraction_num(),
                                       a.fraction_den() * b.fraction_den());
    }
    throw std::logic_error("unreachable");
}

RingElement RingContext::neg(const RingElement& a) const {
    switch (kind_) {
        case RingKind::Integers: return make(-a.integer_value());
        case RingKind::Modular: return canonical_modular(-a.integer_value());
        case RingKind::Polynomial: return make(-a.poly_value());
        case RingKind::Fraction:
            return make(FractionParts{box(-a.fraction_num()), box(a.fraction_den())});
    }
    throw std::logic_error("unreachable");
}

bool RingContext::eq(const RingElement& a, const RingElement& b) const {
    require_same(a, b);
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Modular: return a.integer_value() == b.integer_value();
        case RingKind::Polynomial: return a.poly_value() == b.poly_value();
        case RingKind::Fraction:
            // Cross-multiplication in the base domain.
            return a.fraction_num() * b.fraction_den() == b.fraction_num() * a.fraction_den();
    }
    throw std::logic_error("unreachable");
}

RingElement RingElement::operator+(const RingElement& o) const { return ring_->add(*this, o); }
RingElement RingElement::operator*(const RingElement& o) const { return ring_->mul(*this, o); }
RingElement RingElement::operator-() const { return ring_->neg(*this); }
RingElement RingElement::operator-(const RingElement& o) const { return ring_->add(*this, ring_->neg(o)); }
bool RingElement::operator==(const RingElement& o) const { return ring_->eq(*this, o); }

// ------------------------------------------------------------- operations

bool is_unit(const RingElement& a) {
    switch (a.kind()) {
        case RingKind::Integers: return a.integer_value().abs().is_one();
        case RingKind::Modular:
            return Integer::gcd(a.integer_value(), a.ring()->modulus()).is_one();
        case RingKind::Polynomial: {
            const MultiPoly& p = a.poly_value();
            return p.is_constant() && p.constant_value().abs().is_one();
        }
        case RingKind::Fraction: return !a.is_zero();
    }
    return false;
}

RingElement inverse_of_unit(const RingElement& a) {
    switch (a.kind()) {
        case RingKind::Integers:
        case RingKind::Polynomial:
            if (!is_unit(a))
                throw std::invalid_argument("inverse_of_unit: " + a.to_string() + " is not a unit in " +
                                            a.ring()->description());
            return a;  // +-1 is its own inverse
        case RingKind::Modular: {
            Integer g, s, t;
            Integer::gcdext(a.integer_value(), a.ring()->modulus(), g, s, t);
            if (!g.is_one())
                throw std::invalid_argument("inverse_of_unit: " + a.to_string() + " is not a unit in " +
                                            a.ring()->description());
            return RingElement::from_integer(a.ring(), s);
        }
        case RingKind::Fraction:
            if (a.is_zero())
                throw std::invalid_argument("inverse_of_unit: zero has no inverse in " +
                                            a.ring()->description());
            return RingElement::fraction(a.ring(), a.fraction_den(), a.fraction_num());
    }
    throw std::logic_error("unreachable");
}

RingElement divexact(const RingElement& a, const RingElement& b) {
    if (!a.ring()->supports_exact_division())
        throw std::invalid_argument("divexact: no exact division in " + a.ring()->description());
    a.ring()->require_same(a, b);
    if (a.kind() == RingKind::Integers) {
        if (b.is_zero()) throw std::domain_error("divexact: division by zero");
        if (!a.integer_value().divisible_by(b.integer_value()))
            throw std::domain_error("divexact: division is not exact");
        return RingElement::from_integer(a.ring(), a.integer_value().divexact(b.integer_value()));
    }
    return a.ring()->make(a.poly_value().divexact(b.poly_value()));
}

RingElement substitute(const RingElement& p,
                       const std::map<std::uint32_t, RingElement>& bindings,
                       const Ring& target) {
    if (p.kind() != RingKind::Polynomial)
        throw std::invalid_argument("substitute: source element is not polynomial");
    RingElement acc = RingElement::zero(target);
    for (const MultiPoly::Term& t : p.poly_value().terms()) {
        RingElement v = RingElement::from_integer(target, t.coeff);
        for (const auto& [var, exp] : t.mono.factors()) {
            auto it = bindings.find(var);
            if (it == bindings.end())
                throw std::invalid_argument("substitute: unbound variable '" +
                                            p.ring()->var_name(var) + "'");
            v = v * pow(it->second, exp);
        }
        acc = acc + v;
    }
    return acc;
}

RingElement pow(const RingElement& base, unsigned long exponent) {
    RingElement result = RingElement::one(base.ring());
    RingElement b = base;
    while (exponent > 0) {
        if (exponent & 1) result = result * b;
        b = b * b;
        exponent >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------- display

std::string RingElement::to_string() const {
    switch (kind()) {
        case RingKind::Integers:
        case RingKind::Modular: return integer_value().str();
        case RingKind::Polynomial: return poly_value().to_string();
        case RingKind::Fraction: {
            std::string n = fraction_num().to_string();
            if (fraction_den().is_one()) return n;
            std::string d = fraction_den().to_string();
            auto wrap = [](const std::string& s) {
                return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
            };
            return wrap(n) + "/" + wrap(d);
        }
    }
    return "?";
}

}  // namespace detkit
