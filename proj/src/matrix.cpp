#include "qsphere/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace qsphere {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RatFunc(1);
    return m;
}

Matrix Matrix::diagonal(const std::vector<RatFunc>& d) {
    const int n = static_cast<int>(d.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const RatFunc& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const RatFunc& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix Matrix::pow(int e) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
    Matrix r = identity(rows_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

int size_measure(const RatFunc& x) {
    return x.num().degree() + x.den().degree() +
           static_cast<int>(mpz_sizeinbase(x.num().lead().get_mpz_t(), 2));
}

}  // namespace

Echelon row_reduce(Matrix m) {
    Echelon e;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1, best_size = 0;
        for (int i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            int s = size_measure(m(i, c));
            if (best < 0 || s < best_size) {
                best = i;
                best_size = s;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < cols; ++j) std::swap(m(best, j), m(r, j));
        RatFunc inv = m(r, c).inverse();
        for (int j = c; j < cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            RatFunc f = m(i, c);
            for (int j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

int rank(const Matrix& m) { return row_reduce(m).rank(); }

int nullity(const Matrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<RatFunc>> null_space(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<RatFunc>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<RatFunc> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(f)] = RatFunc(1);
        for (size_t k = 0; k < e.pivots.size(); ++k)
            v[static_cast<size_t>(e.pivots[k])] = -e.reduced(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<RatFunc>> solve(const Matrix& m, const std::vector<RatFunc>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[static_cast<size_t>(i)];
    }
    Echelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    std::vector<RatFunc> x(static_cast<size_t>(m.cols()));
    for (size_t k = 0; k < e.pivots.size(); ++k)
        x[static_cast<size_t>(e.pivots[k])] = e.reduced(static_cast<int>(k), m.cols());
    return x;
}

RatFunc determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    RatFunc det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return {};
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        RatFunc inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            RatFunc f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

std::string poly_to_string(const RatPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p[i] << ")";
        if (i == 1)
            os << "*x";
        else if (i > 1)
            os << "*x^" << i;
    }
    return os.str();
}

RatPoly charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: not square");
    const int n = m.rows();
    // Coefficients in descending order while iterating.
    std::vector<RatFunc> p{RatFunc(1)};
    for (int k = 0; k < n; ++k) {
        std::vector<RatFunc> col(static_cast<size_t>(k) + 2);
        col[0] = RatFunc(1);
        col[1] = -m(k, k);
        std::vector<RatFunc> v(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = m(i, k);
        for (int j = 2; j <= k + 1; ++j) {
            RatFunc dot;
            for (int i = 0; i < k; ++i) dot += m(k, i) * v[static_cast<size_t>(i)];
            col[static_cast<size_t>(j)] = -dot;
            std::vector<RatFunc> w(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                for (int l = 0; l < k; ++l)
                    if (!m(i, l).is_zero()) w[static_cast<size_t>(i)] += m(i, l) * v[static_cast<size_t>(l)];
            v = std::move(w);
        }
        std::vector<RatFunc> next(static_cast<size_t>(k) + 2);
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j <= i && j < p.size(); ++j) next[i] += col[i - j] * p[j];
        p = std::move(next);
    }
    RatPoly asc(p.rbegin(), p.rend());
    trim(asc);
    return asc;
}

}  // namespace qsphere
