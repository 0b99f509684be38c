#include "detkit/multipoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace detkit {

MultiPoly MultiPoly::constant(VarTablePtr vars, Integer c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, std::uint32_t index) {
    if (!vars || index >= vars->size())
        throw std::invalid_argument("MultiPoly::variable: index outside the variable table");
    MultiPoly p(std::move(vars));
    p.terms_.push_back({Monomial::variable(index), Integer(1)});
    return p;
}

Integer MultiPoly::constant_value() const {
    if (terms_.empty()) return Integer(0);
    const Term& last = terms_.back();
    return last.mono.is_one() ? last.coeff : Integer(0);
}

void MultiPoly::check_same_table(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw std::invalid_argument("MultiPoly: operands use different variable tables");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = Monomial::grlex_compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) r.terms_.push_back(terms_[i++]);
        else if (c < 0) r.terms_.push_back(o.terms_[j++]);
        else {
            Integer sum = terms_[i].coeff + o.terms_[j].coeff;
            if (!sum.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(sum)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(vars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    std::map<Monomial, Integer, GrlexGreater> acc;
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Monomial m = a.mono.times(b.mono);
            auto [it, inserted] = acc.emplace(std::move(m), a.coeff * b.coeff);
            if (!inserted) it->second += a.coeff * b.coeff;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [mono, coeff] : acc)
        if (!coeff.is_zero()) r.terms_.push_back({mono, std::move(coeff)});
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
    check_same_table(d);
    if (d.is_zero()) throw std::domain_error("MultiPoly::divexact: division by zero");
    MultiPoly quotient(vars_);
    MultiPoly rem = *this;
    const Term& lead_d = d.terms_.front();
    // Leading-term reduction; exact quotients leave no remainder.
    while (!rem.is_zero()) {
        const Term& lead_r = rem.terms_.front();
        if (!lead_d.mono.divides(lead_r.mono) || !lead_r.coeff.divisible_by(lead_d.coeff))
            throw std::domain_error("MultiPoly::divexact: division is not exact");
        MultiPoly t(vars_);
        t.terms_.push_back({lead_r.mono.quotient_by(lead_d.mono), lead_r.coeff.divexact(lead_d.coeff)});
        quotient = quotient + t;
        rem = rem - t * d;
    }
    return quotient;
}

Integer MultiPoly::content() const {
    Integer g(0);
    for (const Term& t : terms_) g = Integer::gcd(g, t.coeff);
    return g;
}

Integer MultiPoly::eval_at_probe_point() const {
    Integer total(0);
    for (const Term& t : terms_) {
        Integer v = t.coeff;
        for (const auto& [var, exp] : t.mono.factors()) {
            long base = static_cast<long>(var);
            // quadratic in the index so matrices of consecutive variables do
            // not degenerate into arithmetic-progression rows
            v *= Integer(base * base + 2).pow(exp);
        }
        total += v;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        Integer mag = t.coeff.abs();
        // In the expression grammar a leading unary minus binds tighter than
        // '^', so "-x^2" would read back as (-x)^2. A negative leading term
        // whose first factor carries an exponent therefore keeps its
        // explicit coefficient: "-1*x^2".
        bool force_coeff = false;
        if (first) {
            if (t.coeff.sign() < 0) {
                out << "-";
                force_coeff = !t.mono.is_one() && t.mono.factors().front().second >= 2;
            }
            first = false;
        } else {
            out << (t.coeff.sign() < 0 ? " - " : " + ");
        }
        if (t.mono.is_one()) {
            out << mag.str();
            continue;
        }
        bool need_star = false;
        if (!mag.is_one() || force_coeff) {
            out << mag.str();
            need_star = true;
        }
        for (const auto& [var, exp] : t.mono.factors()) {
            if (need_star) out << "*";
            out << (*vars_)[var];
            if (exp > 1) out << "^" << exp;
            need_star = true;
        }
    }
    return out.str();
}

}  // namespace detkit
