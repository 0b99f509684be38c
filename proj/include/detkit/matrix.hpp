#pragma once

#include <functional>
#include <string>
#include <vector>

#include "detkit/ring.hpp"

namespace detkit {

struct CharPoly;

/// Dense square matrix over one ring context. Value type; all algorithms are
/// exact and division-free unless stated otherwise.
class Matrix {
public:
    /// Zero matrix.
    Matrix(Ring ring, unsigned n);
    static Matrix identity(const Ring& ring, unsigned n);
    static Matrix from_rows(const Ring& ring, const std::vector<std::vector<RingElement>>& rows);
    /// Integer-entry convenience constructor (entries embedded via from_int).
    static Matrix from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows);

    unsigned dim() const { return n_; }
    const Ring& ring() const { return ring_; }

    const RingElement& at(unsigned row, unsigned col) const { return entries_[row * n_ + col]; }
    void set(unsigned row, unsigned col, RingElement v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Entry-wise scale by a ring element.
    Matrix scaled(const RingElement& s) const;
    friend Matrix operator*(const RingElement& s, const Matrix& m) { return m.scaled(s); }

    RingElement trace() const;

    /// Exact determinant; dispatches internally (cofactor for small matrices
    /// over domains, Berkowitz otherwise). All routes agree.
    RingElement det() const;
    RingElement det_cofactor() const;
    RingElement det_berkowitz() const;
    /// Fraction-free elimination; requires Z or a polynomial ring.
    RingElement det_bareiss() const;

    CharPoly charpoly() const;

    /// adjugate(M) satisfies M * adjugate(M) = det(M) * I.
    Matrix adjugate() const;
    /// Requires det(M) to be a unit; the error carries det(M).
    Matrix inverse() const;

    bool is_invertible() const;
    bool is_sl() const;

    /// Apply f to every entry, producing a matrix over `target`.
    Matrix map_entries(const Ring& target,
                       const std::function<RingElement(const RingElement&)>& f) const;

    /// Matrix literal, e.g. [[1, 0], [x + 1, 2]].
    std::string to_string() const;

private:
    Matrix minor_matrix(unsigned drop_row, unsigned drop_col) const;
    void require_compatible(const Matrix& o) const;

    Ring ring_;
    unsigned n_;
    std::vector<RingElement> entries_;  // row-major
};

/// Coefficients c0..cn of det(tI - M), indexed by degree. Monic; c0 is
/// (-1)^n det(M) and c_{n-1} is -trace(M).
struct CharPoly {
    std::vector<RingElement> coeff;

    unsigned degree() const { return static_cast<unsigned>(coeff.size()) - 1; }
    bool operator==(const CharPoly& o) const { return coeff == o.coeff; }
    std::string to_string() const;
};

/// E_ij scaled by one: the matrix with a single 1 at (i, j). Indices are
/// 1-based, matching the usual matrix-unit notation (E_11 is top-left).
Matrix matrix_unit(const Ring& ring, unsigned n, unsigned i, unsigned j);

/// Assemble [[M11, M12], [M21, M22]] from four n x n blocks.
Matrix block2x2(const Matrix& m11, const Matrix& m12, const Matrix& m21, const Matrix& m22);

/// diag(M, I_k).
Matrix suspend(const Matrix& m, unsigned k);

}  // namespace detkit
