#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace detkit {

/// Arbitrary-precision integer with value semantics. Thin wrapper over GMP
/// so the rest of the library never sees mpz expression templates.
class Integer {
public:
    Integer() : v_(0) {}
    Integer(long v) : v_(v) {}
    explicit Integer(const std::string& decimal) : v_(decimal, 10) {}

    static Integer from_raw(mpz_class v) { return Integer(std::move(v)); }
    const mpz_class& raw() const { return v_; }

    Integer operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }
    Integer operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }
    Integer operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    bool operator==(const Integer& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Integer& o) const {
        int c = cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Integer abs() const { return Integer(mpz_class(::abs(v_))); }

    /// Euclidean remainder in [0, |m|).
    Integer mod(const Integer& m) const {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
        return Integer(std::move(r));
    }

    /// Floor division quotient.
    Integer fdiv_q(const Integer& d) const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
        return Integer(std::move(q));
    }

    bool divisible_by(const Integer& d) const {
        return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
    }

    /// Exact division; caller guarantees divisibility.
    Integer divexact(const Integer& d) const {
        if (d.is_zero()) throw std::invalid_argument("Integer::divexact: division by zero");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
        return Integer(std::move(q));
    }

    static Integer gcd(const Integer& a, const Integer& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return Integer(std::move(g));
    }

    /// g = gcd(a, b) together with s, t such that s*a + t*b = g.
    static void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
        mpz_gcdext(g.v_.get_mpz_t(), s.v_.get_mpz_t(), t.v_.get_mpz_t(),
                   a.v_.get_mpz_t(), b.v_.get_mpz_t());
    }

    Integer pow(unsigned long e) const {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
        return Integer(std::move(r));
    }

    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Integer::to_long: value does not fit");
        return v_.get_si();
    }

    std::string str() const { return v_.get_str(); }

private:
    explicit Integer(mpz_class v) : v_(std::move(v)) {}
    mpz_class v_;
};

}  // namespace detkit
