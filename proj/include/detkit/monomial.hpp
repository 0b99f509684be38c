#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace detkit {

/// Power product of variables, kept as (variable index, exponent > 0) pairs
/// sorted by ascending variable index. The constant monomial has no factors.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(std::uint32_t index, std::uint32_t exponent = 1) {
        if (exponent == 0) return Monomial();
        Monomial m;
        m.factors_.emplace_back(index, exponent);
        m.degree_ = exponent;
        return m;
    }

    static Monomial from_factors(std::vector<Factor> factors) {
        Monomial m;
        for (const auto& [var, exp] : factors) {
            if (exp == 0) continue;
            if (!m.factors_.empty() && var <= m.factors_.back().first)
                throw std::invalid_argument("Monomial: factors must be strictly ascending by variable");
            m.factors_.emplace_back(var, exp);
            m.degree_ += exp;
        }
        return m;
    }

    bool is_one() const { return factors_.empty(); }
    unsigned degree() const { return degree_; }
    const std::vector<Factor>& factors() const { return factors_; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
        std::size_t i = 0, j = 0;
        while (i < factors_.size() && j < o.factors_.size()) {
            if (factors_[i].first < o.factors_[j].first) r.factors_.push_back(factors_[i++]);
            else if (factors_[i].first > o.factors_[j].first) r.factors_.push_back(o.factors_[j++]);
            else {
                r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
                ++i; ++j;
            }
        }
        for (; i < factors_.size(); ++i) r.factors_.push_back(factors_[i]);
        for (; j < o.factors_.size(); ++j) r.factors_.push_back(o.factors_[j]);
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        std::size_t j = 0;
        for (const auto& [var, exp] : factors_) {
            while (j < o.factors_.size() && o.factors_[j].first < var) ++j;
            if (j == o.factors_.size() || o.factors_[j].first != var || o.factors_[j].second < exp)
                return false;
        }
        return true;
    }

    /// this / d, assuming d divides this.
    Monomial quotient_by(const Monomial& d) const {
        Monomial r;
        std::size_t j = 0;
        for (const auto& [var, exp] : factors_) {
            std::uint32_t sub = 0;
            while (j < d.factors_.size() && d.factors_[j].first < var) ++j;
            if (j < d.factors_.size() && d.factors_[j].first == var) sub = d.factors_[j].second;
            if (sub > exp) throw std::invalid_argument("Monomial::quotient_by: not divisible");
            if (exp > sub) {
                r.factors_.emplace_back(var, exp - sub);
                r.degree_ += exp - sub;
            }
        }
        return r;
    }

    /// Graded lexicographic order: total degree first, then the exponent
    /// vector read by ascending variable index (earlier variable, larger
    /// exponent wins). Returns <0, 0, >0 like strcmp.
    static int grlex_compare(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        std::size_t i = 0, j = 0;
        while (i < a.factors_.size() && j < b.factors_.size()) {
            const auto& fa = a.factors_[i];
            const auto& fb = b.factors_[j];
            if (fa.first != fb.first) return fa.first < fb.first ? 1 : -1;
            if (fa.second != fb.second) return fa.second > fb.second ? 1 : -1;
            ++i; ++j;
        }
        // Equal degree and one is a prefix of the other: only possible when
        // both are exhausted (same exponent vector).
        return 0;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Strict weak order placing grlex-larger monomials first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex_compare(a, b) > 0;
    }
};

}  // namespace detkit
