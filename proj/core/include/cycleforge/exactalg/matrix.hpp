#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cycleforge {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& r : init) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

namespace detail {

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
template <class K>
bool is_zero(const Poly<K>& x) {
    return x.is_zero();
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline QuadExt exact_div(const QuadExt& a, const QuadExt& b) { return a / b; }
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    return a.exact_quotient(b);
}

inline std::size_t weight(const Rational&) { return 1; }
inline std::size_t weight(const QuadExt&) { return 1; }
template <class K>
std::size_t weight(const Poly<K>& p) {
    return p.size();
}

template <class T>
struct unit_of {
    static T get() { return T(1); }
};
template <class K>
struct unit_of<Poly<K>> {
    static Poly<K> get() { return Poly<K>::constant(K(1)); }
};

template <class T>
T one_like(const T&) {
    return T(1);
}
template <class K>
Poly<K> one_like(const Poly<K>& p) {
    return Poly<K>::constant(K(1), p.vars());
}
template <class T>
T zero_like(const T&) {
    return T(0);
}
template <class K>
Poly<K> zero_like(const Poly<K>& p) {
    return Poly<K>(p.vars());
}

} // namespace detail

// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T determinant(Matrix<T> m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return detail::unit_of<T>::get();
    T prev = detail::one_like(m(0, 0));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i)
            if (!detail::is_zero(m(i, k)) && (best == n || detail::weight(m(i, k)) < detail::weight(m(best, k))))
                best = i;
        if (best == n) return detail::zero_like(m(0, 0));
        if (best != k) {
            m.swap_rows(best, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = detail::exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = detail::zero_like(m(i, k));
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? -d : d;
}

// Rank by fraction-free elimination (entries over an integral domain).
template <class T>
std::size_t rank(Matrix<T> m) {
    std::size_t r = 0;
    T prev{};
    bool have_prev = false;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!detail::is_zero(m(i, c)) && (piv == m.rows() || detail::weight(m(i, c)) < detail::weight(m(piv, c))))
                piv = i;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                T v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                m(i, j) = have_prev ? detail::exact_div(v, prev) : v;
            }
            m(i, c) = detail::zero_like(m(i, c));
        }
        prev = m(r, c);
        have_prev = true;
        ++r;
    }
    return r;
}

template <class K>
struct LinearSolution {
    enum class Kind { unique, parametrized, inconsistent };
    Kind kind = Kind::unique;
    std::vector<Poly<K>> x;              // free variables set to zero
    std::vector<std::size_t> free_vars;  // column indices
    std::vector<std::size_t> failing_equations;
    std::size_t rank = 0;
};

// Gauss-Jordan over the scalar field with polynomial right-hand sides. Pivots are chosen left to
// right, so the free variables are the trailing dependent columns.
template <class K>
LinearSolution<K> solve_linear_exact(Matrix<K> a, std::vector<Poly<K>> b) {
    if (a.rows() != b.size()) throw std::invalid_argument("dimension mismatch in linear solve");
    LinearSolution<K> sol;
    std::size_t n = a.cols(), m = a.rows();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == m) continue;
        if (piv != r) {
            a.swap_rows(piv, r);
            std::swap(b[piv], b[r]);
        }
        K inv = K(1) / a(r, c);
        for (std::size_t j = c; j < n; ++j) a(r, j) *= inv;
        b[r] = b[r].scale(inv);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            K f = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(r, j);
            b[i] -= b[r].scale(f);
        }
        pivot_col.push_back(c);
        ++r;
    }
    sol.rank = r;
    for (std::size_t i = r; i < m; ++i)
        if (!b[i].is_zero()) sol.failing_equations.push_back(i);
    if (!sol.failing_equations.empty()) {
        sol.kind = LinearSolution<K>::Kind::inconsistent;
        return sol;
    }
    VarList vars = b.empty() ? empty_vars() : b[0].vars();
    sol.x.assign(n, Poly<K>(vars));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < r; ++i) {
        is_pivot[pivot_col[i]] = true;
        sol.x[pivot_col[i]] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) sol.free_vars.push_back(c);
    sol.kind = sol.free_vars.empty() ? LinearSolution<K>::Kind::unique : LinearSolution<K>::Kind::parametrized;
    return sol;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix<T> r(x.rows(), y.cols(), detail::zero_like(x(0, 0)));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            T s = detail::zero_like(x(0, 0));
            for (std::size_t k = 0; k < x.cols(); ++k) s = s + x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

} // namespace cycleforge
