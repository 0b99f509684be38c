#pragma once

#include <cstdint>
#include <random>

#include "detkit/matrix.hpp"
#include "detkit/ring.hpp"

namespace detkit {

/// Deterministic generator for seeded test/bench data. All derived values go
/// through next()/below() so the stream is identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

/// Small random element appropriate for exact arithmetic tests: integers in
/// [-9, 9], residues below m, short low-degree polynomials, reduced integer
/// fractions or unreduced polynomial fractions.
inline RingElement random_element(const Ring& ring, Rng& rng) {
    switch (ring->kind()) {
        case RingKind::Integers:
            return RingElement::from_int(ring, rng.range(-9, 9));
        case RingKind::Modular: {
            const Integer& m = ring->modulus();
            if (m.fits_long()) return RingElement::from_int(ring, rng.range(0, m.to_long() - 1));
            return RingElement::from_integer(ring, Integer(static_cast<long>(rng.next() >> 1)).mod(m));
        }
        case RingKind::Polynomial: {
            RingElement acc = RingElement::from_int(ring, rng.range(-3, 3));
            const std::uint64_t extra_terms = ring->var_count() == 0 ? 0 : rng.below(3);
            for (std::uint64_t t = 0; t < extra_terms; ++t) {
                long c = rng.range(-3, 3);
                if (c == 0) c = 1;
                RingElement term = RingElement::from_int(ring, c);
                term = term * pow(RingElement::variable(ring, static_cast<std::uint32_t>(
                                                                 rng.below(ring->var_count()))),
                                  1 + rng.below(2));
                acc = acc + term;
            }
            return acc;
        }
        case RingKind::Fraction: {
            RingElement num = random_element(ring->base(), rng);
            RingElement den = random_element(ring->base(), rng);
            while (den.is_zero()) den = random_element(ring->base(), rng);
            return RingElement::fraction(ring, num, den);
        }
    }
    return RingElement::zero(ring);
}

inline Matrix random_matrix(const Ring& ring, unsigned n, Rng& rng) {
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, random_element(ring, rng));
    return m;
}

/// Rejection-samples until is_invertible; meant for rings where random
/// matrices are invertible with decent probability (e.g. Z/p).
inline Matrix random_invertible_matrix(const Ring& ring, unsigned n, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(ring, n, rng);
        if (m.is_invertible()) return m;
    }
}

}  // namespace detkit
