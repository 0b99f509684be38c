#include "detkit/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "detkit/random.hpp"

namespace detkit {

namespace {

IdentityReport base_report(std::string id, const Ring& ring, unsigned n) {
    IdentityReport r;
    r.identity = std::move(id);
    r.ring = ring->description();
    r.n = n;
    return r;
}

void fill_sides(IdentityReport& r, const RingElement& left, const RingElement& right) {
    r.left = serialize_value(left);
    r.right = serialize_value(right);
    r.stats.left_terms = left.term_count();
    r.stats.right_terms = right.term_count();
}

void require_triple(const Matrix& a, const Matrix& b, const Matrix& x) {
    if (a.dim() != b.dim() || a.dim() != x.dim())
        throw std::invalid_argument("matrices must share one dimension");
    if (!a.ring()->same_as(*b.ring()) || !a.ring()->same_as(*x.ring()))
        throw std::invalid_argument("matrices must share one ring context");
}

void require_pair(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrices must share one dimension");
    if (!a.ring()->same_as(*b.ring()))
        throw std::invalid_argument("matrices must share one ring context");
}

std::string index_name(const std::string& prefix, unsigned i, unsigned j) {
    return prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Matrix generic_matrix(const Ring& ring, unsigned n, std::uint32_t offset) {
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m.set(i, j, RingElement::variable(ring, offset + i * n + j));
    return m;
}

}  // namespace

GenericTriple make_generic_triple(unsigned n) {
    if (n < 1) throw std::invalid_argument("make_generic_triple: n must be >= 1");
    std::vector<std::string> names;
    names.reserve(3u * n * n);
    for (const char* prefix : {"a", "b", "x"})
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) names.push_back(index_name(prefix, i, j));
    Ring ring = RingContext::polynomial(std::move(names));
    return GenericTriple{n, ring, generic_matrix(ring, n, 0), generic_matrix(ring, n, n * n),
                         generic_matrix(ring, n, 2 * n * n)};
}

GenericPair make_generic_pair(unsigned n, const std::string& first_prefix,
                              const std::string& second_prefix) {
    if (n < 1) throw std::invalid_argument("make_generic_pair: n must be >= 1");
    std::vector<std::string> names;
    names.reserve(2u * n * n);
    for (const std::string* prefix : {&first_prefix, &second_prefix})
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) names.push_back(index_name(*prefix, i, j));
    Ring ring = RingContext::polynomial(std::move(names));
    return GenericPair{n, ring, generic_matrix(ring, n, 0), generic_matrix(ring, n, n * n)};
}

std::pair<Matrix, Matrix> ternary_pair(const Matrix& a, const Matrix& b, const Matrix& x) {
    require_triple(a, b, x);
    Matrix sum = a + b;
    return {sum - a * x * b, sum - b * x * a};
}

IdentityReport check_ternary_det(const Matrix& a, const Matrix& b, const Matrix& x) {
    IdentityReport r = base_report("ternary-det", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    auto [p, q] = ternary_pair(a, b, x);
    RingElement dp = p.det(), dq = q.det();
    fill_sides(r, dp, dq);
    r.holds = dp == dq;
    if (!r.holds) r.witness = "det(A+B-AXB) != det(A+B-BXA) for " + a.to_string() + ", " +
                              b.to_string() + ", " + x.to_string();
    return r;
}

IdentityReport check_ternary_units(const Matrix& a, const Matrix& b, const Matrix& x) {
    IdentityReport r = base_report("ternary-units", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    auto [p, q] = ternary_pair(a, b, x);
    RingElement dp = p.det(), dq = q.det();
    fill_sides(r, dp, dq);
    bool pu = is_unit(dp), qu = is_unit(dq);
    r.holds = pu == qu;
    r.note = std::string("A+B-AXB ") + (pu ? "invertible" : "not invertible") +
             ", A+B-BXA " + (qu ? "invertible" : "not invertible");
    return r;
}

IdentityReport check_trace_identity(const Matrix& a, const Matrix& b, const Matrix& x) {
    IdentityReport r = base_report("trace", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    require_triple(a, b, x);
    Matrix sum = a + b;
    RingElement t1 = (sum - a * x * b).trace();
    RingElement t2 = (sum - x * b * a).trace();
    RingElement t3 = (sum - b * a * x).trace();
    fill_sides(r, t1, t2);
    r.holds = t1 == t2 && t2 == t3;
    r.note = "tr(A+B-BAX) = " + serialize_value(t3);
    return r;
}

IdentityReport trace_counterexample(const RingElement& s, unsigned n) {
    if (n < 2) throw std::invalid_argument("trace_counterexample: needs n >= 2");
    if (s.is_zero()) throw std::invalid_argument("trace_counterexample: needs s != 0");
    const Ring& ring = s.ring();
    IdentityReport r = base_report("trace-cx", ring, n);
    ScopedTimer timer(r.stats);
    Matrix a = matrix_unit(ring, n, 1, 1);
    Matrix x = matrix_unit(ring, n, 1, 2);
    Matrix b = s * matrix_unit(ring, n, 2, 1);
    RingElement tr_axb = (a * x * b).trace();
    RingElement tr_bxa = (b * x * a).trace();
    fill_sides(r, tr_axb, tr_bxa);
    r.holds = tr_axb == tr_bxa;  // false by construction
    Matrix sum = a + b;
    RingElement tp = (sum - a * x * b).trace(), tq = (sum - b * x * a).trace();
    r.witness = "trace difference = " + serialize_value(tr_axb - tr_bxa);
    r.note = "tr(A+B-AXB) = " + serialize_value(tp) + ", tr(A+B-BXA) = " + serialize_value(tq);
    return r;
}

std::array<RingElement, 3> phk_values(const RingElement& x, const RingElement& y) {
    const Ring& ring = x.ring();
    if (!ring->same_as(*y.ring()))
        throw std::invalid_argument("phk_values: x and y must share one ring");
    auto from = [&](long v) { return RingElement::from_int(ring, v); };
    Matrix a = Matrix::from_rows(ring, {{from(0), from(1)}, {from(0), from(0)}});
    Matrix b = Matrix::from_rows(ring, {{from(0), from(1)}, {from(1), from(0)}});
    Matrix xm = Matrix::from_rows(ring, {{from(0), x}, {y, from(1)}});
    Matrix sum = a + b;
    return {(sum - a * xm * b).det(), (sum - xm * b * a).det(), (sum - b * a * xm).det()};
}

IdentityReport phk_report() {
    Ring ring = RingContext::polynomial({"x", "y"});
    IdentityReport r = base_report("phk", ring, 2);
    ScopedTimer timer(r.stats);
    RingElement x = RingElement::variable(ring, 0), y = RingElement::variable(ring, 1);
    RingElement two = RingElement::from_int(ring, 2);
    auto got = phk_values(x, y);
    std::array<RingElement, 3> expected = {y - two, x - two, two * y - two};
    bool match = got[0] == expected[0] && got[1] == expected[1] && got[2] == expected[2];
    bool distinct = got[0] != got[1] && got[1] != got[2] && got[0] != got[2];
    fill_sides(r, got[0], got[1]);
    r.holds = match && distinct;
    r.note = "det values " + serialize_value(got[0]) + ", " + serialize_value(got[1]) + ", " +
             serialize_value(got[2]) + (distinct ? " (pairwise distinct)" : " (NOT distinct)");
    if (!match) r.witness = "values differ from expected y-2, x-2, 2y-2";
    return r;
}

IdentityReport sylvester_check(const Matrix& a, const Matrix& b) {
    IdentityReport r = base_report("sylvester", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    require_pair(a, b);
    Matrix id = Matrix::identity(a.ring(), a.dim());
    RingElement l = (id - a * b).det(), rr = (id - b * a).det();
    fill_sides(r, l, rr);
    r.holds = l == rr;
    return r;
}

IdentityReport specialize_sylvester_route1(const Matrix& a, const Matrix& b) {
    IdentityReport r = base_report("sylvester-route1", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    require_pair(a, b);
    Matrix id = Matrix::identity(a.ring(), a.dim());
    Matrix ap = id - a, bp = id - b;
    auto [p, q] = ternary_pair(ap, bp, id);
    bool left_ok = p == id - a * b;
    bool right_ok = q == id - b * a;
    r.left = p.to_string();
    r.right = (id - a * b).to_string();
    r.holds = left_ok && right_ok;
    r.note = std::string("entry-wise: lhs -> I-AB ") + (left_ok ? "ok" : "FAIL") +
             ", rhs -> I-BA " + (right_ok ? "ok" : "FAIL");
    return r;
}

IdentityReport specialize_sylvester_route2(const Matrix& a, const Matrix& b, bool literal_reading) {
    IdentityReport r = base_report("sylvester-route2", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    require_pair(a, b);
    Matrix id = Matrix::identity(a.ring(), a.dim());
    if (literal_reading) {
        // B := I first, then X := I + B = 2I; both sides collapse to I - A.
        Matrix two_id = id + id;
        auto [p, q] = ternary_pair(a, id, two_id);
        bool ok = p == id - a && q == id - a;
        r.left = p.to_string();
        r.right = (id - a).to_string();
        r.holds = ok;
        r.note = "literal sequential reading: both sides reduce to I-A (vacuous)";
        return r;
    }
    auto [p, q] = ternary_pair(a, id, id + b);
    bool left_ok = p == id - a * b;
    bool right_ok = q == id - b * a;
    r.left = p.to_string();
    r.right = (id - a * b).to_string();
    r.holds = left_ok && right_ok;
    r.note = std::string("entry-wise: lhs -> I-AB ") + (left_ok ? "ok" : "FAIL") +
             ", rhs -> I-BA " + (right_ok ? "ok" : "FAIL");
    return r;
}

std::array<Matrix, 4> theorem32_matrices(const Matrix& a, const Matrix& x) {
    require_pair(a, x);
    Matrix id = Matrix::identity(a.ring(), a.dim());
    Matrix ax = a * x, xa = x * a;
    return {id - ax + ax * a, id - xa + a * xa, id - ax + a * ax, id - xa + xa * a};
}

IdentityReport check_theorem32(const Matrix& a, const Matrix& x) {
    IdentityReport r = base_report("theorem32", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    auto ms = theorem32_matrices(a, x);
    std::array<RingElement, 4> dets = {ms[0].det(), ms[1].det(), ms[2].det(), ms[3].det()};
    std::array<RingElement, 4> traces = {ms[0].trace(), ms[1].trace(), ms[2].trace(), ms[3].trace()};
    bool det_ok = dets[0] == dets[1] && dets[1] == dets[2] && dets[2] == dets[3];
    bool trace_ok = traces[0] == traces[1] && traces[1] == traces[2] && traces[2] == traces[3];
    fill_sides(r, dets[0], dets[1]);
    bool charpoly_ok = true;
    {
        CharPoly c1 = ms[0].charpoly();
        charpoly_ok = c1 == ms[1].charpoly() && c1 == ms[2].charpoly() && c1 == ms[3].charpoly();
    }
    if (a.dim() <= 2) {
        r.holds = det_ok && trace_ok && charpoly_ok;
        r.note = "charpolys equal (asserted for n <= 2)";
    } else {
        r.holds = det_ok && trace_ok;
        r.note = std::string("charpoly comparison (recorded, not asserted): ") +
                 (charpoly_ok ? "equal" : "not all equal");
    }
    if (!det_ok) r.witness = "determinants differ";
    else if (!trace_ok) r.witness = "traces differ";
    return r;
}

IdentityReport example31() {
    Ring ring = RingContext::integers();
    IdentityReport r = base_report("example31", ring, 2);
    ScopedTimer timer(r.stats);
    Matrix a = Matrix::from_ints(ring, {{1, 0}, {0, 0}});
    Matrix x = Matrix::from_ints(ring, {{0, 1}, {1, 0}});
    Matrix b = Matrix::from_ints(ring, {{1, 1}, {0, 0}});
    Matrix id = Matrix::identity(ring, 2);
    RingElement d1 = (id - a * x * b).det();
    RingElement d2 = (id - b * x * a).det();
    auto [p, q] = ternary_pair(a, b, x);
    RingElement d3 = p.det(), d4 = q.det();
    bool shapes = p == Matrix::from_ints(ring, {{2, 1}, {0, 0}}) &&
                  q == Matrix::from_ints(ring, {{1, 1}, {0, 0}});
    fill_sides(r, d3, d4);
    r.holds = d1.is_one() && d2.is_zero() && d3.is_zero() && d4.is_zero() && shapes;
    r.note = "det(I-AXB) = " + d1.to_string() + ", det(I-BXA) = " + d2.to_string() +
             ", det(A+B-AXB) = " + d3.to_string() + ", det(A+B-BXA) = " + d4.to_string();
    if (!shapes) r.witness = "A+B-AXB or A+B-BXA differs from the expected matrices";
    return r;
}

IdentityReport example33() {
    Ring ring = RingContext::polynomial({"r", "s", "t"});
    IdentityReport rep = base_report("example33", ring, 2);
    ScopedTimer timer(rep.stats);
    RingElement r = RingElement::variable(ring, 0);
    RingElement s = RingElement::variable(ring, 1);
    RingElement t = RingElement::variable(ring, 2);
    RingElement zero = RingElement::zero(ring), one = RingElement::one(ring);
    Matrix a = Matrix::from_rows(ring, {{one, r}, {one, zero}});
    Matrix x = Matrix::from_rows(ring, {{s, t}, {zero, zero}});
    auto ms = theorem32_matrices(a, x);

    RingElement sr = s * r;
    Matrix m1 = Matrix::from_rows(ring, {{one + t, sr - t}, {t, one + sr - t}});
    Matrix m2 = Matrix::from_rows(ring, {{one, zero}, {s + t, one + sr}});
    Matrix m34 = Matrix::from_rows(ring, {{one + sr, r * t}, {zero, one}});
    bool shapes = ms[0] == m1 && ms[1] == m2 && ms[2] == m34 && ms[3] == m34;

    RingElement expected_det = one + sr;
    RingElement expected_trace = one + one + sr;
    bool det_ok = true, trace_ok = true;
    for (const Matrix& m : ms) {
        det_ok = det_ok && m.det() == expected_det;
        trace_ok = trace_ok && m.trace() == expected_trace;
    }
    bool charpolys_ok = ms[0].charpoly() == ms[1].charpoly() &&
                        ms[1].charpoly() == ms[2].charpoly() &&
                        ms[2].charpoly() == ms[3].charpoly();

    fill_sides(rep, ms[0].det(), expected_det);
    rep.holds = shapes && det_ok && trace_ok && charpolys_ok;
    rep.note = "common det = " + serialize_value(expected_det) +
               ", common trace = " + serialize_value(expected_trace);
    if (!shapes) rep.witness = "computed M1..M4 differ from the expected matrices";
    return rep;
}

IdentityReport jacobson_check(const Matrix& a, const Matrix& b) {
    IdentityReport r = base_report("jacobson", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    require_pair(a, b);
    Matrix id = Matrix::identity(a.ring(), a.dim());
    RingElement l = (id - a * b).det(), rr = (id - b * a).det();
    fill_sides(r, l, rr);
    bool lu = is_unit(l), ru = is_unit(rr);
    r.holds = lu == ru;
    r.note = std::string("I-ab ") + (lu ? "invertible" : "not invertible") + ", I-ba " +
             (ru ? "invertible" : "not invertible");
    return r;
}

IdentityReport super_jacobson_check(const Matrix& a, const Matrix& b, const Matrix& x) {
    IdentityReport r = base_report("super-jacobson", a.ring(), a.dim());
    ScopedTimer timer(r.stats);
    auto [p, q] = ternary_pair(a, b, x);
    RingElement dp = p.det(), dq = q.det();
    fill_sides(r, dp, dq);
    bool pu = is_unit(dp), qu = is_unit(dq);
    r.holds = pu == qu;
    r.note = std::string("a+b-axb ") + (pu ? "invertible" : "not invertible") + ", a+b-bxa " +
             (qu ? "invertible" : "not invertible");
    return r;
}

namespace {

/// Deterministic hunt for a small concrete instance where the four-matrix
/// family does not share a characteristic polynomial. Entries grow from
/// {-1,0,1} outward so the first hit is a smallest-found witness.
std::string find_charpoly_counterexample(unsigned n) {
    Ring ring = RingContext::integers();
    for (long bound = 1; bound <= 3; ++bound) {
        for (std::uint64_t seed = 1; seed <= 400; ++seed) {
            Rng rng(seed * 7919 + static_cast<std::uint64_t>(bound));
            Matrix a(ring, n), x(ring, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    a.set(i, j, RingElement::from_int(ring, rng.range(-bound, bound)));
                    x.set(i, j, RingElement::from_int(ring, rng.range(-bound, bound)));
                }
            auto ms = theorem32_matrices(a, x);
            CharPoly c1 = ms[0].charpoly();
            for (unsigned k = 1; k < 4; ++k) {
                CharPoly ck = ms[k].charpoly();
                if (!(c1 == ck)) {
                    std::ostringstream out;
                    out << "A = " << a.to_string() << ", X = " << x.to_string() << ": charpoly(M1) = "
                        << c1.to_string() << " but charpoly(M" << (k + 1) << ") = " << ck.to_string();
                    return out.str();
                }
            }
        }
    }
    return "no concrete counterexample found in the search range";
}

}  // namespace

IdentityReport prove_identity_generic(std::string_view identity_id, unsigned n) {
    if (identity_id == "ternary-det") {
        GenericTriple g = make_generic_triple(n);
        return check_ternary_det(g.a, g.b, g.x);
    }
    if (identity_id == "trace") {
        GenericTriple g = make_generic_triple(n);
        return check_trace_identity(g.a, g.b, g.x);
    }
    if (identity_id == "sylvester") {
        GenericPair g = make_generic_pair(n, "a", "b");
        return sylvester_check(g.first, g.second);
    }
    if (identity_id == "theorem32-det" || identity_id == "theorem32-trace" ||
        identity_id == "theorem32-charpoly") {
        GenericPair g = make_generic_pair(n, "a", "x");
        IdentityReport r = base_report(std::string(identity_id), g.ring, n);
        ScopedTimer timer(r.stats);
        auto ms = theorem32_matrices(g.first, g.second);
        if (identity_id == "theorem32-det") {
            std::array<RingElement, 4> d = {ms[0].det(), ms[1].det(), ms[2].det(), ms[3].det()};
            fill_sides(r, d[0], d[1]);
            r.holds = d[0] == d[1] && d[1] == d[2] && d[2] == d[3];
        } else if (identity_id == "theorem32-trace") {
            std::array<RingElement, 4> t = {ms[0].trace(), ms[1].trace(), ms[2].trace(),
                                            ms[3].trace()};
            fill_sides(r, t[0], t[1]);
            r.holds = t[0] == t[1] && t[1] == t[2] && t[2] == t[3];
        } else {
            CharPoly c1 = ms[0].charpoly();
            std::array<CharPoly, 3> rest = {ms[1].charpoly(), ms[2].charpoly(), ms[3].charpoly()};
            r.holds = c1 == rest[0] && c1 == rest[1] && c1 == rest[2];
            r.left = serialize_value(c1.coeff[0]);
            r.right = serialize_value(rest[0].coeff[0]);
            if (!r.holds) {
                unsigned deg = 0;
                for (unsigned d = 0; d <= n; ++d)
                    if (!(c1.coeff[d] == rest[0].coeff[d] && c1.coeff[d] == rest[1].coeff[d] &&
                          c1.coeff[d] == rest[2].coeff[d])) {
                        deg = d;
                        break;
                    }
                r.note = "generic charpolys differ first at the t^" + std::to_string(deg) +
                         " coefficient";
                r.witness = "concrete instance: " + find_charpoly_counterexample(n);
            } else {
                r.note = "generic charpolys all equal";
            }
        }
        return r;
    }
    throw std::invalid_argument("unknown identity id: " + std::string(identity_id));
}

IdentityReport fraction_proof_check(unsigned n) {
    GenericTriple g = make_generic_triple(n);
    Ring frac = RingContext::fraction_of(g.ring);
    IdentityReport r = base_report("fraction-proof", frac, n);
    ScopedTimer timer(r.stats);

    auto into_frac = [&](const RingElement& e) {
        return RingElement::fraction(frac, e, RingElement::one(g.ring));
    };
    Matrix fa = g.a.map_entries(frac, into_frac);
    Matrix fb = g.b.map_entries(frac, into_frac);
    Matrix fx = g.x.map_entries(frac, into_frac);

    Matrix a_inv = fa.inverse();
    Matrix b_inv = fb.inverse();
    auto [p, q] = ternary_pair(fa, fb, fx);

    Matrix lhs = a_inv * p * b_inv;
    Matrix mid = b_inv + a_inv - fx;
    Matrix rhs = b_inv * q * a_inv;
    bool entrywise = lhs == mid && mid == rhs;

    // Cancellation: det(A^-1 P B^-1) = det(B^-1 Q A^-1) with det(A), det(B)
    // nonzero in the domain forces det(P) = det(Q) in the polynomial ring.
    bool sanity = (fa.det() * a_inv.det()).is_one() && (fb.det() * b_inv.det()).is_one();
    auto [pp, pq] = ternary_pair(g.a, g.b, g.x);
    RingElement dp = pp.det(), dq = pq.det();
    bool cancelled = lhs.det() == rhs.det() && dp == dq;

    fill_sides(r, dp, dq);
    r.holds = entrywise && sanity && cancelled;
    r.note = std::string("entry-wise A^-1PB^-1 = B^-1+A^-1-X = B^-1QA^-1: ") +
             (entrywise ? "ok" : "FAIL") + "; det cancellation: " + (cancelled ? "ok" : "FAIL");
    if (n > 2) r.note += "; warning: n exceeds the n <= 2 budget for this check";
    return r;
}

const std::vector<std::string>& identity_ids() {
    static const std::vector<std::string> ids = {
        "ternary-det", "ternary-units", "trace",     "sylvester", "theorem32", "jacobson",
        "super-jacobson", "example31",  "example33", "phk",       "trace-cx",  "fraction-proof"};
    return ids;
}

}  // namespace detkit
