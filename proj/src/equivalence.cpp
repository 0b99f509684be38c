#include "detkit/equivalence.hpp"

#include <sstream>
#include <stdexcept>

#include "detkit/identities.hpp"

namespace detkit {

namespace {

void require_triple(const Matrix& a, const Matrix& b, const Matrix& x) {
    if (a.dim() != b.dim() || a.dim() != x.dim())
        throw std::invalid_argument("matrices must share one dimension");
    if (!a.ring()->same_as(*b.ring()) || !a.ring()->same_as(*x.ring()))
        throw std::invalid_argument("matrices must share one ring context");
}

}  // namespace

bool block_identity_product(const Matrix& a, const Matrix& b, const Matrix& x) {
    require_triple(a, b, x);
    const Ring& ring = a.ring();
    const unsigned n = a.dim();
    Matrix id = Matrix::identity(ring, n), zero(ring, n);
    Matrix left = block2x2(id, -b, id - a * x, a);
    Matrix shear = block2x2(id, zero, x, id);
    Matrix right = block2x2(id - b * x, -b, id, a);
    return left * shear == right;
}

bool block_identity_reveal_p(const Matrix& a, const Matrix& b, const Matrix& x) {
    require_triple(a, b, x);
    const Ring& ring = a.ring();
    const unsigned n = a.dim();
    Matrix id = Matrix::identity(ring, n), zero(ring, n);
    Matrix left = block2x2(id, -b, id - a * x, a);
    Matrix col = block2x2(id, b, zero, id);
    Matrix expected = block2x2(id, zero, id - a * x, a + b - a * x * b);
    return left * col == expected;
}

bool block_identity_reveal_q(const Matrix& a, const Matrix& b, const Matrix& x) {
    require_triple(a, b, x);
    const Ring& ring = a.ring();
    const unsigned n = a.dim();
    Matrix id = Matrix::identity(ring, n), zero(ring, n);
    Matrix right = block2x2(id - b * x, -b, id, a);
    Matrix col = block2x2(id, -a, zero, id);
    Matrix expected = block2x2(id - b * x, -(a + b - b * x * a), id, zero);
    return right * col == expected;
}

SLWitness sl_witness(const Matrix& a, const Matrix& b, const Matrix& x) {
    require_triple(a, b, x);
    const Ring& ring = a.ring();
    const unsigned n = a.dim();
    Matrix id = Matrix::identity(ring, n), zero(ring, n);

    // Factors assembled from the block column transforms plus one block row
    // clean-up on each side and the determinant-one block swap.
    Matrix row_fix1 = block2x2(id, zero, id - a * x, id);
    Matrix row_fix2 = block2x2(id, -(id - b * x), zero, id);
    Matrix swap_j = block2x2(zero, -id, id, zero);
    Matrix c_b_inv = block2x2(id, -b, zero, id);
    Matrix c_x = block2x2(id, zero, x, id);
    Matrix c_neg_a = block2x2(id, -a, zero, id);

    SLWitness w{row_fix2 * row_fix1 * swap_j,
                swap_j * c_b_inv * c_x * c_neg_a * swap_j,
                {{"RowFix2", row_fix2}, {"RowFix1", row_fix1}, {"SwapJ", swap_j}},
                {{"SwapJ", swap_j},
                 {"C_B_inv", c_b_inv},
                 {"C_X", c_x},
                 {"C_negA", c_neg_a},
                 {"SwapJ", swap_j}}};

    auto [p, q] = ternary_pair(a, b, x);
    RingElement one = RingElement::one(ring);
    bool ok = w.u * suspend(p, n) * w.v == suspend(q, n) && w.u.det() == one && w.v.det() == one;
    for (const auto& [name, factor] : w.left_factors) ok = ok && factor.det() == one;
    for (const auto& [name, factor] : w.right_factors) ok = ok && factor.det() == one;
    if (!ok)
        throw std::logic_error("sl_witness: internal verification failed (implementation bug)");
    return w;
}

std::pair<Matrix, Matrix> direct_equivalence_witness(const Matrix& a, const Matrix& b,
                                                     const Matrix& x) {
    require_triple(a, b, x);
    RingElement da = a.det(), db = b.det();
    if (!is_unit(da))
        throw std::invalid_argument("direct_equivalence_witness: A is not invertible, det(A) = " +
                                    da.to_string());
    if (!is_unit(db))
        throw std::invalid_argument("direct_equivalence_witness: B is not invertible, det(B) = " +
                                    db.to_string());
    Matrix u = b * a.inverse();
    Matrix v = b.inverse() * a;
    auto [p, q] = ternary_pair(a, b, x);
    if (!(u * p * v == q))
        throw std::logic_error("direct_equivalence_witness: U P V != Q (implementation bug)");
    return {u, v};
}

// -------------------------------------------------------- Smith normal form

namespace {

struct IntGrid {
    unsigned n;
    std::vector<Integer> cells;
    Integer& at(unsigned i, unsigned j) { return cells[i * n + j]; }
    const Integer& at(unsigned i, unsigned j) const { return cells[i * n + j]; }
};

IntGrid identity_grid(unsigned n) {
    IntGrid g{n, std::vector<Integer>(static_cast<std::size_t>(n) * n, Integer(0))};
    for (unsigned i = 0; i < n; ++i) g.at(i, i) = Integer(1);
    return g;
}

void swap_rows(IntGrid& g, unsigned r1, unsigned r2) {
    if (r1 == r2) return;
    for (unsigned j = 0; j < g.n; ++j) std::swap(g.at(r1, j), g.at(r2, j));
}

void swap_cols(IntGrid& g, unsigned c1, unsigned c2) {
    if (c1 == c2) return;
    for (unsigned i = 0; i < g.n; ++i) std::swap(g.at(i, c1), g.at(i, c2));
}

void add_row_multiple(IntGrid& g, unsigned dst, unsigned src, const Integer& factor) {
    for (unsigned j = 0; j < g.n; ++j) g.at(dst, j) += factor * g.at(src, j);
}

void add_col_multiple(IntGrid& g, unsigned dst, unsigned src, const Integer& factor) {
    for (unsigned i = 0; i < g.n; ++i) g.at(i, dst) += factor * g.at(i, src);
}

void negate_row(IntGrid& g, unsigned r) {
    for (unsigned j = 0; j < g.n; ++j) g.at(r, j) = -g.at(r, j);
}

Matrix grid_to_matrix(const IntGrid& g, const Ring& ring) {
    Matrix m(ring, g.n);
    for (unsigned i = 0; i < g.n; ++i)
        for (unsigned j = 0; j < g.n; ++j) m.set(i, j, RingElement::from_integer(ring, g.at(i, j)));
    return m;
}

}  // namespace

SmithResult smith_normal_form(const Matrix& m) {
    if (m.ring()->kind() != RingKind::Integers)
        throw std::invalid_argument("smith_normal_form: integer matrices only");
    const unsigned n = m.dim();
    IntGrid w{n, {}};
    w.cells.reserve(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) w.cells.push_back(m.at(i, j).integer_value());
    IntGrid u = identity_grid(n), v = identity_grid(n);

    for (unsigned k = 0; k < n; ++k) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing block,
            // ties broken by lowest (row, column).
            bool found = false;
            unsigned pi = k, pj = k;
            Integer best(0);
            for (unsigned i = k; i < n; ++i)
                for (unsigned j = k; j < n; ++j) {
                    const Integer& c = w.at(i, j);
                    if (c.is_zero()) continue;
                    if (!found || c.abs() < best) {
                        found = true;
                        best = c.abs();
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) break;  // trailing block is zero

            swap_rows(w, k, pi);
            swap_rows(u, k, pi);
            swap_cols(w, k, pj);
            swap_cols(v, k, pj);
            if (w.at(k, k).sign() < 0) {
                negate_row(w, k);
                negate_row(u, k);
            }

            const Integer pivot = w.at(k, k);
            bool leftovers = false;
            for (unsigned i = k + 1; i < n; ++i) {
                if (w.at(i, k).is_zero()) continue;
                Integer quot = w.at(i, k).fdiv_q(pivot);
                if (!quot.is_zero()) {
                    add_row_multiple(w, i, k, -quot);
                    add_row_multiple(u, i, k, -quot);
                }
                leftovers = leftovers || !w.at(i, k).is_zero();
            }
            for (unsigned j = k + 1; j < n; ++j) {
                if (w.at(k, j).is_zero()) continue;
                Integer quot = w.at(k, j).fdiv_q(pivot);
                if (!quot.is_zero()) {
                    add_col_multiple(w, j, k, -quot);
                    add_col_multiple(v, j, k, -quot);
                }
                leftovers = leftovers || !w.at(k, j).is_zero();
            }
            if (leftovers) continue;  // a strictly smaller pivot now exists

            // Divisibility sweep: the pivot must divide the whole trailing
            // block for the diagonal to be divisibility-ordered.
            bool fixed = false;
            for (unsigned i = k + 1; i < n && !fixed; ++i)
                for (unsigned j = k + 1; j < n && !fixed; ++j)
                    if (!w.at(i, j).divisible_by(pivot)) {
                        add_row_multiple(w, k, i, Integer(1));
                        add_row_multiple(u, k, i, Integer(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    SmithResult result{grid_to_matrix(w, m.ring()), grid_to_matrix(u, m.ring()),
                       grid_to_matrix(v, m.ring()), {}};
    result.diagonal.reserve(n);
    for (unsigned i = 0; i < n; ++i) result.diagonal.push_back(w.at(i, i));
    return result;
}

// ------------------------------------------------------- invariant profiles

namespace {

void enumerate_subsets(unsigned n, unsigned k, std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        out.push_back(pick);
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && pick[pos] == n - k + pos) --pos;
        if (pos < 0) return;
        ++pick[pos];
        for (unsigned i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
}

RingElement submatrix_det(const Matrix& m, const std::vector<unsigned>& rows,
                          const std::vector<unsigned>& cols) {
    Matrix sub(m.ring(), static_cast<unsigned>(rows.size()));
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < cols.size(); ++j) sub.set(i, j, m.at(rows[i], cols[j]));
    return sub.det();
}

}  // namespace

InvariantProfile invariant_profile(const Matrix& m, long eval_lo, long eval_hi) {
    InvariantProfile profile;
    profile.det = serialize_value(m.det());
    profile.trace = serialize_value(m.trace());
    const unsigned n = m.dim();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            profile.entry_ideal_generators.push_back(serialize_value(m.at(i, j)));

    for (unsigned k = 1; k <= n; ++k) {
        std::vector<std::vector<unsigned>> subsets;
        enumerate_subsets(n, k, subsets);
        std::vector<std::string> values;
        for (const auto& rows : subsets)
            for (const auto& cols : subsets) values.push_back(serialize_value(submatrix_det(m, rows, cols)));
        profile.minors.push_back(std::move(values));
    }

    // Integer evaluations -> Smith normal form, for univariate polynomial
    // matrices over Z.
    if (m.ring()->kind() == RingKind::Polynomial && m.ring()->var_count() == 1) {
        Ring z = RingContext::integers();
        for (long c = eval_lo; c <= eval_hi; ++c) {
            std::map<std::uint32_t, RingElement> bind{{0u, RingElement::from_int(z, c)}};
            Matrix evaluated =
                m.map_entries(z, [&](const RingElement& e) { return substitute(e, bind, z); });
            SmithResult snf = smith_normal_form(evaluated);
            std::vector<std::string> diag;
            for (const Integer& d : snf.diagonal) diag.push_back(d.str());
            profile.snf_evaluations.emplace_back(c, std::move(diag));
        }
    }
    return profile;
}

NonequivalenceFixture nonequivalence_fixture(long eval_lo, long eval_hi) {
    Ring ring = RingContext::polynomial({"x"});
    RingElement xv = RingElement::variable(ring, 0);
    RingElement zero = RingElement::zero(ring);
    RingElement two = RingElement::from_int(ring, 2);

    Matrix a = Matrix::from_rows(ring, {{zero, zero}, {zero, xv}});
    Matrix b = Matrix::from_rows(ring, {{zero, two}, {zero, xv}});
    Matrix x = Matrix::identity(ring, 2);
    auto [p, q] = ternary_pair(a, b, x);

    RingElement p22 = two * xv - xv * xv;
    Matrix expected_p = Matrix::from_rows(ring, {{zero, two}, {zero, p22}});
    Matrix expected_q = Matrix::from_rows(ring, {{zero, two - two * xv}, {zero, p22}});

    NonequivalenceFixture fx{a,
                             b,
                             x,
                             p,
                             q,
                             p == expected_p && q == expected_q,
                             invariant_profile(p, eval_lo, eval_hi),
                             invariant_profile(q, eval_lo, eval_hi),
                             false,
                             {}};

    bool det_differs = fx.p_profile.det != fx.q_profile.det;
    bool trace_differs = fx.p_profile.trace != fx.q_profile.trace;
    bool snf_differs = fx.p_profile.snf_evaluations != fx.q_profile.snf_evaluations;
    fx.profiles_separate = det_differs || trace_differs || snf_differs;

    fx.findings.push_back(std::string("det: ") + (det_differs ? "DIFFER" : "equal") + " (" +
                          fx.p_profile.det + ")");
    fx.findings.push_back(std::string("trace: ") + (trace_differs ? "DIFFER" : "equal") + " (" +
                          fx.p_profile.trace + ")");
    {
        std::ostringstream line;
        line << "entry-ideal generators: {";
        for (std::size_t i = 0; i < fx.p_profile.entry_ideal_generators.size(); ++i)
            line << (i ? ", " : "") << fx.p_profile.entry_ideal_generators[i];
        line << "} vs {";
        for (std::size_t i = 0; i < fx.q_profile.entry_ideal_generators.size(); ++i)
            line << (i ? ", " : "") << fx.q_profile.entry_ideal_generators[i];
        line << "} (generator lists differ; ideal equality is not decided by screening)";
        fx.findings.push_back(line.str());
    }
    fx.findings.push_back(std::string("SNF of integer evaluations x -> c, c in [") +
                          std::to_string(eval_lo) + ", " + std::to_string(eval_hi) + "]: " +
                          (snf_differs ? "DIFFER" : "all equal"));
    fx.findings.push_back(fx.profiles_separate
                              ? "screening invariants separate P and Q"
                              : "screening invariants do not separate P and Q; "
                                "non-equivalence is not decided by this profile");
    return fx;
}

}  // namespace detkit
