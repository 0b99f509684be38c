#include "detkit/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace detkit {

Matrix::Matrix(Ring ring, unsigned n) : ring_(std::move(ring)), n_(n) {
    if (n_ == 0) throw std::invalid_argument("Matrix: dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(n_) * n_, RingElement::zero(ring_));
}

Matrix Matrix::identity(const Ring& ring, unsigned n) {
    Matrix m(ring, n);
    RingElement one = RingElement::one(ring);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<RingElement>>& rows) {
    unsigned n = static_cast<unsigned>(rows.size());
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("Matrix::from_rows: matrix must be square");
        for (unsigned j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(const Ring& ring, const std::vector<std::vector<long>>& rows) {
    unsigned n = static_cast<unsigned>(rows.size());
    Matrix m(ring, n);
    for (unsigned i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("Matrix::from_ints: matrix must be square");
        for (unsigned j = 0; j < n; ++j) m.set(i, j, RingElement::from_int(ring, rows[i][j]));
    }
    return m;
}

void Matrix::set(unsigned row, unsigned col, RingElement v) {
    if (!v.ring()->same_as(*ring_))
        throw std::invalid_argument("Matrix::set: entry belongs to " + v.ring()->description() +
                                    ", matrix is over " + ring_->description());
    entries_[row * n_ + col] = std::move(v);
}

void Matrix::require_compatible(const Matrix& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix dimension mismatch");
    if (!ring_->same_as(*o.ring_))
        throw std::invalid_argument("matrix ring context mismatch: " + ring_->description() +
                                    " vs " + o.ring_->description());
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(o);
    Matrix r(ring_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(o);
    Matrix r(ring_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(ring_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_compatible(o);
    Matrix r(ring_, n_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) {
            RingElement acc = at(i, 0) * o.at(0, j);
            for (unsigned k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.set(i, j, std::move(acc));
        }
    }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    require_compatible(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

Matrix Matrix::scaled(const RingElement& s) const {
    Matrix r(ring_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = s * entries_[i];
    return r;
}

RingElement Matrix::trace() const {
    RingElement acc = at(0, 0);
    for (unsigned i = 1; i < n_; ++i) acc = acc + at(i, i);
    return acc;
}

Matrix Matrix::minor_matrix(unsigned drop_row, unsigned drop_col) const {
    Matrix r(ring_, n_ - 1);
    for (unsigned i = 0, ri = 0; i < n_; ++i) {
        if (i == drop_row) continue;
        for (unsigned j = 0, rj = 0; j < n_; ++j) {
            if (j == drop_col) continue;
            r.set(ri, rj, at(i, j));
            ++rj;
        }
        ++ri;
    }
    return r;
}

RingElement Matrix::det_cofactor() const {
    if (n_ == 1) return at(0, 0);
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    RingElement acc = RingElement::zero(ring_);
    for (unsigned j = 0; j < n_; ++j) {
        if (at(0, j).is_zero()) continue;
        RingElement term = at(0, j) * minor_matrix(0, j).det_cofactor();
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Division-free characteristic polynomial via iterated Toeplitz products
/// over trailing principal submatrices. Valid over any commutative ring.
CharPoly Matrix::charpoly() const {
    const RingElement one = RingElement::one(ring_);
    // p holds the coefficients of the trailing submatrix's characteristic
    // polynomial in descending degree (p[0] is the leading 1).
    std::vector<RingElement> p{one};
    for (unsigned i = n_; i-- > 0;) {
        const unsigned m = n_ - i;  // size of the submatrix starting at (i, i)
        // s[0] = 1, s[1] = -M(i,i), s[k] = -(R * M'^(k-2) * C) where R/C are
        // the first row/column of the submatrix minus its corner and M' is
        // the submatrix at (i+1, i+1).
        std::vector<RingElement> s;
        s.reserve(m + 1);
        s.push_back(one);
        s.push_back(-at(i, i));
        if (m >= 2) {
            std::vector<RingElement> u;  // current M'^j * C
            u.reserve(m - 1);
            for (unsigned r = i + 1; r < n_; ++r) u.push_back(at(r, i));
            for (unsigned k = 2; k <= m; ++k) {
                if (k > 2) {
                    std::vector<RingElement> next;
                    next.reserve(m - 1);
                    for (unsigned r = i + 1; r < n_; ++r) {
                        RingElement acc = at(r, i + 1) * u[0];
                        for (unsigned c = i + 2; c < n_; ++c)
                            acc = acc + at(r, c) * u[c - i - 1];
                        next.push_back(std::move(acc));
                    }
                    u = std::move(next);
                }
                RingElement dot = at(i, i + 1) * u[0];
                for (unsigned c = i + 2; c < n_; ++c) dot = dot + at(i, c) * u[c - i - 1];
                s.push_back(-dot);
            }
        }
        std::vector<RingElement> next(m + 1, RingElement::zero(ring_));
        for (unsigned j = 0; j <= m; ++j) {
            for (unsigned k = 0; k <= j && k < s.size(); ++k) {
                if (j - k >= p.size()) continue;
                next[j] = next[j] + s[k] * p[j - k];
            }
        }
        p = std::move(next);
    }
    CharPoly cp;
    cp.coeff.assign(p.rbegin(), p.rend());  // store by ascending degree
    return cp;
}

RingElement Matrix::det_berkowitz() const {
    CharPoly cp = charpoly();
    RingElement c0 = cp.coeff.front();
    return (n_ % 2 == 0) ? c0 : -c0;
}

RingElement Matrix::det_bareiss() const {
    if (!ring_->supports_exact_division())
        throw std::invalid_argument("det_bareiss: requires Z or a polynomial ring, got " +
                                    ring_->description());
    Matrix w = *this;
    RingElement prev = RingElement::one(ring_);
    bool negate = false;
    for (unsigned k = 0; k + 1 < n_; ++k) {
        if (w.at(k, k).is_zero()) {
            unsigned pivot = k + 1;
            while (pivot < n_ && w.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n_) return RingElement::zero(ring_);
            for (unsigned j = 0; j < n_; ++j) {
                RingElement tmp = w.at(k, j);
                w.set(k, j, w.at(pivot, j));
                w.set(pivot, j, std::move(tmp));
            }
            negate = !negate;
        }
        for (unsigned i = k + 1; i < n_; ++i) {
            for (unsigned j = k + 1; j < n_; ++j) {
                RingElement num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.set(i, j, divexact(num, prev));
            }
            w.set(i, k, RingElement::zero(ring_));
        }
        prev = w.at(k, k);
    }
    RingElement d = w.at(n_ - 1, n_ - 1);
    return negate ? -d : d;
}

RingElement Matrix::det() const {
    // Berkowitz handles zero divisors and big matrices; cofactor expansion
    // is cheaper for small matrices over domains.
    if (n_ <= 3 && ring_->kind() != RingKind::Modular) return det_cofactor();
    return det_berkowitz();
}

Matrix Matrix::adjugate() const {
    Matrix r(ring_, n_);
    if (n_ == 1) {
        r.set(0, 0, RingElement::one(ring_));
        return r;
    }
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) {
            RingElement c = minor_matrix(i, j).det();
            if ((i + j) % 2 == 1) c = -c;
            r.set(j, i, std::move(c));  // transpose of the cofactor matrix
        }
    }
    return r;
}

Matrix Matrix::inverse() const {
    RingElement d = det();
    if (!is_unit(d))
        throw std::invalid_argument("Matrix::inverse: determinant " + d.to_string() +
                                    " is not a unit in " + ring_->description());
    return adjugate().scaled(inverse_of_unit(d));
}

bool Matrix::is_invertible() const { return is_unit(det()); }

bool Matrix::is_sl() const { return det() == RingElement::one(ring_); }

Matrix Matrix::map_entries(const Ring& target,
                           const std::function<RingElement(const RingElement&)>& f) const {
    Matrix r(target, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r.set(i, j, f(at(i, j)));
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (unsigned i = 0; i < n_; ++i) {
        if (i) out << ", ";
        out << "[";
        for (unsigned j = 0; j < n_; ++j) {
            if (j) out << ", ";
            out << at(i, j).to_string();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string CharPoly::to_string() const {
    std::ostringstream out;
    for (unsigned d = degree() + 1; d-- > 0;) {
        if (d < degree()) out << " + ";
        out << "(" << coeff[d].to_string() << ")";
        if (d > 0) out << "*t";
        if (d > 1) out << "^" << d;
    }
    return out.str();
}

Matrix matrix_unit(const Ring& ring, unsigned n, unsigned i, unsigned j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("matrix_unit: index out of range");
    Matrix m(ring, n);
    m.set(i - 1, j - 1, RingElement::one(ring));
    return m;
}

Matrix block2x2(const Matrix& m11, const Matrix& m12, const Matrix& m21, const Matrix& m22) {
    const unsigned n = m11.dim();
    for (const Matrix* b : {&m12, &m21, &m22})
        if (b->dim() != n || !b->ring()->same_as(*m11.ring()))
            throw std::invalid_argument("block2x2: blocks must share dimension and ring");
    Matrix r(m11.ring(), 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            r.set(i, j, m11.at(i, j));
            r.set(i, j + n, m12.at(i, j));
            r.set(i + n, j, m21.at(i, j));
            r.set(i + n, j + n, m22.at(i, j));
        }
    }
    return r;
}

Matrix suspend(const Matrix& m, unsigned k) {
    if (k == 0) return m;
    const unsigned n = m.dim();
    Matrix r(m.ring(), n + k);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.set(i, j, m.at(i, j));
    RingElement one = RingElement::one(m.ring());
    for (unsigned i = n; i < n + k; ++i) r.set(i, i, one);
    return r;
}

}  // namespace detkit
