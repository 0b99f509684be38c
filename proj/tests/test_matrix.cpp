#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detkit/matrix.hpp"
#include "detkit/random.hpp"
#include "support.hpp"

using namespace detkit;
using detkit::test::leibniz_det;

TEST_CASE("matrix units multiply like E_ij") {
    Ring z = RingContext::integers();
    Matrix e11 = matrix_unit(z, 2, 1, 1);
    Matrix e12 = matrix_unit(z, 2, 1, 2);
    CHECK(e11 * e12 == e12);
    CHECK((e12 * e11) == Matrix(z, 2));
    CHECK(e11.to_string() == "[[1, 0], [0, 0]]");
    CHECK(e12.to_string() == "[[0, 1], [0, 0]]");
    CHECK_THROWS_AS(matrix_unit(z, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(matrix_unit(z, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("A X B collapses to s E11 for the trace counterexample shape") {
    Ring zs = RingContext::polynomial({"s"});
    RingElement s = RingElement::variable(zs, 0);
    Matrix a = matrix_unit(zs, 2, 1, 1);
    Matrix x = matrix_unit(zs, 2, 1, 2);
    Matrix b = s * matrix_unit(zs, 2, 2, 1);
    Matrix axb = a * x * b;
    CHECK(axb == s * matrix_unit(zs, 2, 1, 1));
    CHECK(axb.trace() == s);
    CHECK((b * x * a).trace().is_zero());
}

TEST_CASE("identity times random matrix") {
    Rng rng(5);
    for (const Ring& ring : test::standard_rings()) {
        Matrix m = random_matrix(ring, 3, rng);
        Matrix id = Matrix::identity(ring, 3);
        CHECK(id * m == m);
        CHECK(m * id == m);
    }
}

TEST_CASE("frozen determinants") {
    Ring zx = RingContext::polynomial({"x"});
    RingElement x = RingElement::variable(zx, 0);
    RingElement zero = RingElement::zero(zx), two = RingElement::from_int(zx, 2);

    Matrix p = Matrix::from_rows(zx, {{zero, two}, {zero, two * x - x * x}});
    CHECK(p.det().is_zero());

    Ring zy = RingContext::polynomial({"y"});
    RingElement y = RingElement::variable(zy, 0);
    Matrix m = Matrix::from_rows(
        zy, {{-RingElement::one(zy), RingElement::from_int(zy, 2) - y},
             {RingElement::one(zy), RingElement::zero(zy)}});
    CHECK(m.det() == y - RingElement::from_int(zy, 2));

    CHECK(Matrix::identity(RingContext::integers(), 4).det().is_one());
    Matrix one_by_one = Matrix::from_ints(RingContext::integers(), {{-7}});
    CHECK(one_by_one.det() == RingElement::from_int(RingContext::integers(), -7));
}

TEST_CASE("generic 2x2 determinant is the Leibniz formula") {
    Ring r = RingContext::polynomial({"a", "b", "c", "d"});
    auto v = [&](unsigned i) { return RingElement::variable(r, i); };
    Matrix m = Matrix::from_rows(r, {{v(0), v(1)}, {v(2), v(3)}});
    CHECK(m.det() == v(0) * v(3) - v(1) * v(2));
}

TEST_CASE("determinant algorithms agree with the Leibniz oracle") {
    Rng rng(7);
    std::vector<Ring> rings = test::standard_rings();
    rings.push_back(RingContext::fraction_of(RingContext::integers()));
    for (const Ring& ring : rings) {
        for (unsigned n = 1; n <= 4; ++n) {
            for (int rep = 0; rep < 8; ++rep) {
                Matrix m = random_matrix(ring, n, rng);
                RingElement expected = leibniz_det(m);
                CHECK(m.det_cofactor() == expected);
                CHECK(m.det_berkowitz() == expected);
                CHECK(m.det() == expected);
                if (ring->supports_exact_division()) CHECK(m.det_bareiss() == expected);
            }
        }
    }
}

TEST_CASE("bareiss rejects rings without exact division") {
    Ring z6 = RingContext::modular(Integer(6));
    Matrix m = Matrix::from_ints(z6, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(m.det_bareiss(), std::invalid_argument);
}

TEST_CASE("det is multiplicative") {
    Rng rng(13);
    for (const Ring& ring : test::standard_rings()) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 20; ++rep) {
                Matrix a = random_matrix(ring, n, rng);
                Matrix b = random_matrix(ring, n, rng);
                CHECK((a * b).det() == a.det() * b.det());
            }
        }
    }
}

TEST_CASE("charpoly shape and coefficients") {
    Ring z = RingContext::integers();
    CharPoly zero2 = Matrix(z, 2).charpoly();
    CHECK(zero2.coeff.size() == 3);
    CHECK(zero2.coeff[0].is_zero());
    CHECK(zero2.coeff[1].is_zero());
    CHECK(zero2.coeff[2].is_one());

    Rng rng(17);
    std::vector<Ring> rings = test::standard_rings();
    for (const Ring& ring : rings) {
        for (unsigned n = 1; n <= 4; ++n) {
            Matrix m = random_matrix(ring, n, rng);
            CharPoly cp = m.charpoly();
            REQUIRE(cp.coeff.size() == n + 1);
            CHECK(cp.coeff[n].is_one());
            CHECK(cp.coeff[n - 1] == -m.trace());
            RingElement det_from_cp = (n % 2 == 0) ? cp.coeff[0] : -cp.coeff[0];
            CHECK(det_from_cp == leibniz_det(m));
        }
    }

    // 2x2 closed form: t^2 - tr t + det
    Ring z6 = RingContext::modular(Integer(6));
    Matrix m = random_matrix(z6, 2, rng);
    CharPoly cp = m.charpoly();
    CHECK(cp.coeff[0] == m.det_berkowitz());
    CHECK(cp.coeff[1] == -m.trace());
}

TEST_CASE("charpoly agrees with det(tI - M) for generic matrices") {
    // One generic check per n proves the identity of the two routes for all
    // commutative rings at that size, by substitution.
    for (unsigned n = 1; n <= 4; ++n) {
        std::vector<std::string> names;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                names.push_back("m_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        names.push_back("t");
        Ring r = RingContext::polynomial(names);
        RingElement t = RingElement::variable(r, n * n);

        Matrix m(r, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.set(i, j, RingElement::variable(r, i * n + j));

        Matrix characteristic = t * Matrix::identity(r, n) - m;
        RingElement oracle = leibniz_det(characteristic);

        CharPoly cp = m.charpoly();
        RingElement assembled = RingElement::zero(r);
        for (unsigned k = 0; k <= n; ++k) assembled = assembled + cp.coeff[k] * pow(t, k);
        CHECK(assembled == oracle);
    }
}

TEST_CASE("adjugate identity") {
    Ring r = RingContext::polynomial({"a", "b", "c", "d"});
    auto v = [&](unsigned i) { return RingElement::variable(r, i); };
    Matrix m = Matrix::from_rows(r, {{v(0), v(1)}, {v(2), v(3)}});
    Matrix adj = m.adjugate();
    CHECK(adj == Matrix::from_rows(r, {{v(3), -v(1)}, {-v(2), v(0)}}));

    Rng rng(19);
    for (const Ring& ring : test::standard_rings()) {
        for (unsigned n = 1; n <= 4; ++n) {
            Matrix a = random_matrix(ring, n, rng);
            Matrix prod = a * a.adjugate();
            Matrix expected = a.det() * Matrix::identity(ring, n);
            CHECK(prod == expected);
            CHECK(a.adjugate() * a == expected);
        }
    }
}

TEST_CASE("inverse") {
    Ring z = RingContext::integers();
    CHECK(Matrix::identity(z, 3).inverse() == Matrix::identity(z, 3));

    Matrix d23 = Matrix::from_ints(z, {{2, 0}, {0, 3}});
    CHECK_FALSE(d23.is_invertible());
    try {
        d23.inverse();
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("6") != std::string::npos);
    }

    Ring z7 = RingContext::modular(Integer(7));
    Matrix d23_mod7 = Matrix::from_ints(z7, {{2, 0}, {0, 3}});
    CHECK(d23_mod7.is_invertible());
    CHECK(d23_mod7 * d23_mod7.inverse() == Matrix::identity(z7, 2));

    // generic 2x2 over the fraction field
    Ring zp = RingContext::polynomial({"a", "b", "c", "d"});
    Ring f = RingContext::fraction_of(zp);
    auto lift = [&](unsigned i) {
        return RingElement::fraction(f, RingElement::variable(zp, i), RingElement::one(zp));
    };
    Matrix g = Matrix::from_rows(f, {{lift(0), lift(1)}, {lift(2), lift(3)}});
    CHECK(g * g.inverse() == Matrix::identity(f, 2));
}

TEST_CASE("trace cyclicity") {
    Rng rng(29);
    for (const Ring& ring : test::standard_rings()) {
        for (int rep = 0; rep < 50; ++rep) {
            Matrix y = random_matrix(ring, 3, rng);
            Matrix z = random_matrix(ring, 3, rng);
            CHECK((y * z).trace() == (z * y).trace());
        }
    }
    Ring z = RingContext::integers();
    CHECK(Matrix::identity(z, 5).trace() == RingElement::from_int(z, 5));
}

TEST_CASE("invertibility by determinant unit") {
    Ring z5 = RingContext::modular(Integer(5));
    Matrix two_i = Matrix::from_ints(z5, {{2, 0}, {0, 2}});
    CHECK(two_i.is_invertible());
    Matrix two_i_z = Matrix::from_ints(RingContext::integers(), {{2, 0}, {0, 2}});
    CHECK_FALSE(two_i_z.is_invertible());
    CHECK(Matrix::identity(RingContext::integers(), 2).is_sl());
    CHECK_FALSE(two_i_z.is_sl());
}

TEST_CASE("blocks and suspension") {
    Ring z = RingContext::integers();
    Matrix a = Matrix::from_ints(z, {{1, 2}, {3, 4}});
    Matrix id = Matrix::identity(z, 2), zero(z, 2);

    Matrix blk = block2x2(id, zero, a, id);
    CHECK(blk.dim() == 4);
    CHECK(blk.at(2, 0) == RingElement::from_int(z, 1));
    CHECK(block2x2(id, zero, zero, id) == Matrix::identity(z, 4));

    CHECK(suspend(a, 2).det() == a.det());
    CHECK(suspend(Matrix::identity(z, 2), 3) == Matrix::identity(z, 5));
    CHECK(suspend(a, 0) == a);

    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        Matrix m11 = random_matrix(z, 2, rng), m21 = random_matrix(z, 2, rng),
               m22 = random_matrix(z, 2, rng);
        // block-triangular determinant
        CHECK(block2x2(m11, Matrix(z, 2), m21, m22).det() == m11.det() * m22.det());
        CHECK(suspend(m11, 3).det() == m11.det());
    }
}

TEST_CASE("dimension and context mismatches") {
    Ring z = RingContext::integers();
    Matrix a(z, 2), b(z, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    Matrix c(RingContext::modular(Integer(5)), 2);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
    CHECK_THROWS_AS(block2x2(a, a, a, b), std::invalid_argument);
}
