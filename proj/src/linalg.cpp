#include "lpc/linalg.hpp"

#include "lpc/poly_gcd.hpp"

namespace lpc {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + Rational(-1) * b; }

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
    return out;
}

RationalMatrix identity_matrix(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

Rational trace(const RationalMatrix& a) {
    Rational t(0);
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

bool is_zero(const RationalMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rational det(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        const Rational inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<std::vector<Rational>> null_space(RationalMatrix m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

std::vector<Rational> characteristic_coefficients(const RationalMatrix& a) {
    // Faddeev-LeVerrier: exact over Q.
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("characteristic_coefficients: matrix not square");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RationalMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * identity_matrix(n);
        c[n - k] = Rational(-1) * trace(a * mk) / Rational(static_cast<long>(k));
    }
    return c;
}

namespace {

// Returns the number of pivots; leaves the last pivot in prev and tracks row/column swaps.
std::size_t bareiss_eliminate(PolynomialMatrix& m, Polynomial& last_pivot, int& sign) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t n = rows == 0 ? 0 : m(0, 0).ring_dimension();
    Polynomial prev = Polynomial::constant(n, Rational(1));
    sign = 1;
    std::size_t k = 0;
    for (; k < rows && k < cols; ++k) {
        // Pivot: the sparsest nonzero entry in the trailing block.
        std::size_t pi = rows, pj = cols, best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const auto s = m(i, j).size();
                if (s != 0 && (pi == rows || s < best)) {
                    pi = i;
                    pj = j;
                    best = s;
                }
            }
        if (pi == rows) break;
        if (pi != k) {
            m.swap_rows(pi, k);
            sign = -sign;
        }
        if (pj != k) {
            m.swap_cols(pj, k);
            sign = -sign;
        }
        const Polynomial pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const Polynomial lead = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                Polynomial v = m(i, j) * pivot;
                if (!lead.is_zero() && !m(k, j).is_zero()) v -= lead * m(k, j);
                if (!prev.is_constant() && !v.is_zero()) {
                    auto q = divide_exact(v, prev);
                    if (!q) throw std::logic_error("bareiss: inexact division");
                    v = std::move(*q);
                } else if (!prev.is_zero()) {
                    v *= prev.leading_coefficient().inverse();
                }
                m(i, j) = std::move(v);
            }
            m(i, k) = Polynomial(n);
        }
        prev = pivot;
    }
    last_pivot = prev;
    return k;
}

}  // namespace

std::size_t bareiss_rank(PolynomialMatrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Polynomial last;
    int sign = 1;
    return bareiss_eliminate(m, last, sign);
}

Polynomial bareiss_determinant(PolynomialMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix not square");
    if (m.rows() == 0) throw std::invalid_argument("bareiss_determinant: empty matrix");
    Polynomial last;
    int sign = 1;
    const std::size_t n = m(0, 0).ring_dimension();
    const std::size_t r = bareiss_eliminate(m, last, sign);
    if (r < m.rows()) return Polynomial(n);
    return sign > 0 ? last : -last;
}

RationalMatrix evaluate(const PolynomialMatrix& m, std::span<const Rational> point) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = evaluate(m(i, j), point);
    return out;
}

}  // namespace lpc
