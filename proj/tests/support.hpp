#pragma once

#include <numeric>
#include <vector>

#include "detkit/expr.hpp"
#include "detkit/matrix.hpp"
#include "detkit/random.hpp"
#include "detkit/ring.hpp"

namespace detkit::test {

/// Independent determinant oracle: plain Leibniz permutation sum, kept free
/// of the library's det implementations on purpose.
inline RingElement leibniz_det(const Matrix& m) {
    const unsigned n = m.dim();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    RingElement acc = RingElement::zero(m.ring());
    do {
        // parity by counting inversions
        unsigned inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        RingElement prod = m.at(0, perm[0]);
        for (unsigned i = 1; i < n; ++i) prod = prod * m.at(i, perm[i]);
        acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

/// The four concrete ring contexts most tests cycle through.
inline std::vector<Ring> standard_rings() {
    return {RingContext::integers(), RingContext::modular(Integer(6)),
            RingContext::modular(Integer(7)), RingContext::polynomial({"x"})};
}

/// Random expression tree for print/parse round-trip checks. Never nests
/// equality and never emits the reserved identifier I as a variable name.
inline ExprPtr random_ast(Rng& rng, unsigned depth) {
    if (depth == 0 || rng.below(4) == 0) {
        switch (rng.below(3)) {
            case 0: return ast::var(std::string(1, static_cast<char>('A' + rng.below(4))));
            case 1: return ast::identity();
            default: return ast::lit(static_cast<long>(rng.below(7)));
        }
    }
    switch (rng.below(7)) {
        case 0: return ast::add(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 1: return ast::sub(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 2: return ast::mul(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 3: return ast::neg(random_ast(rng, depth - 1));
        case 4: return ast::pow(random_ast(rng, depth - 1), rng.below(4));
        case 5: return ast::det(random_ast(rng, depth - 1));
        default: return ast::tr(random_ast(rng, depth - 1));
    }
}

}  // namespace detkit::test
