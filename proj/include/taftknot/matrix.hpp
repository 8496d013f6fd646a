#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taftknot/exactnum.hpp"

namespace taftknot {

// Dense matrix over Q(zeta_ell), row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const CycField* f) : rows_(rows), cols_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, Cyc(f, Rational())) {}
  static Matrix identity(int n, const CycField* f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m(i, i) = Cyc(f, Rational(1));
    return m;
  }
  static Matrix diagonal(const std::vector<Cyc>& d, const CycField* f) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), f);
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CycField* field() const { return f_; }
  Cyc& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Cyc& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error("matrix shape mismatch in product");
    Matrix r(x.rows_, y.cols_, x.f_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const Cyc& a = x(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const Cyc& b = y(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch in sum");
    Matrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) { return x + y * Cyc(x.f_, Rational(-1)); }
  friend Matrix operator*(const Matrix& x, const Cyc& c) {
    Matrix r = x;
    for (auto& v : r.a_) v *= c;
    return r;
  }
  friend Matrix operator*(const Cyc& c, const Matrix& x) { return x * c; }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
  }
  std::optional<Cyc> as_scalar() const {
    if (rows_ != cols_ || rows_ == 0 || !is_diagonal()) return std::nullopt;
    for (int i = 1; i < rows_; ++i)
      if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
    return (*this)(0, 0);
  }
  std::vector<Cyc> diag() const {
    std::vector<Cyc> d;
    for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }
  Cyc trace() const {
    Cyc t(f_, Rational());
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }
  Matrix pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    Matrix r = identity(rows_, f_), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }
  Matrix kron(const Matrix& y) const {
    Matrix r(rows_ * y.rows_, cols_ * y.cols_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const Cyc& a = (*this)(i, j);
        if (a.is_zero()) continue;
        for (int k = 0; k < y.rows_; ++k)
          for (int l = 0; l < y.cols_; ++l)
            if (!y(k, l).is_zero()) r(i * y.rows_ + k, j * y.cols_ + l) = a * y(k, l);
      }
    return r;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Cyc inv = (*this)(r, c).inverse();
      for (int j = c; j < cols_; ++j)
        if (!(*this)(r, j).is_zero()) (*this)(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        Cyc fct = (*this)(i, c);
        for (int j = c; j < cols_; ++j)
          if (!(*this)(r, j).is_zero()) (*this)(i, j) -= fct * (*this)(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }
  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }
  // Basis of the right null space, one column vector per entry.
  std::vector<std::vector<Cyc>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Cyc>> basis;
    for (int fcol = 0; fcol < cols_; ++fcol) {
      if (is_piv[fcol]) continue;
      std::vector<Cyc> v(cols_, Cyc(f_, Rational()));
      v[fcol] = Cyc(f_, Rational(1));
      for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), fcol);
      basis.push_back(v);
    }
    return basis;
  }
  Matrix inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_, f_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = Cyc(f_, Rational(1));
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) < rows_ || piv[rows_ - 1] != rows_ - 1) throw NotInvertible("singular matrix");
    Matrix r(rows_, cols_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = aug(i, cols_ + j);
    return r;
  }
  std::vector<Cyc> apply(const std::vector<Cyc>& v) const {
    std::vector<Cyc> out(rows_, Cyc(f_, Rational()));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += "[";
      for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]\n";
    }
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  const CycField* f_ = nullptr;
  std::vector<Cyc> a_;
};

// Monic minimal polynomial, coefficients low to high (last entry 1).
inline std::vector<Cyc> minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("minimal polynomial of a non-square matrix");
  const CycField* f = m.field();
  int n = m.rows();
  size_t flat = static_cast<size_t>(n) * n;
  std::vector<Matrix> powers{Matrix::identity(n, f)};
  for (int d = 1; d <= n; ++d) {
    powers.push_back(powers.back() * m);
    // columns: flattened powers 0..d; look for a relation with top coefficient 1
    Matrix sys(static_cast<int>(flat), d, f);
    std::vector<Cyc> rhs(flat);
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys(i * n + j, k) = powers[k](i, j);
    Matrix aug(static_cast<int>(flat), d + 1, f);
    for (int i = 0; i < static_cast<int>(flat); ++i) {
      for (int k = 0; k < d; ++k) aug(i, k) = sys(i, k);
      aug(i, d) = -powers[d](i / n, i % n);
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == d) continue;  // inconsistent
    if (static_cast<int>(piv.size()) < d) throw Error("minimal polynomial: lower-degree relation missed");
    std::vector<Cyc> coeffs(d + 1, Cyc(f, Rational()));
    for (int k = 0; k < d; ++k) coeffs[k] = aug(k, d);
    coeffs[d] = Cyc(f, Rational(1));
    return coeffs;
  }
  throw Error("minimal polynomial degree exceeds matrix size");
}

// Expand prod (x - r_i), coefficients low to high.
inline std::vector<Cyc> poly_from_roots(const std::vector<Cyc>& roots, const CycField* f) {
  std::vector<Cyc> p{Cyc(f, Rational(1))};
  for (const auto& r : roots) {
    std::vector<Cyc> np(p.size() + 1, Cyc(f, Rational()));
    for (size_t i = 0; i < p.size(); ++i) {
      np[i + 1] += p[i];
      np[i] -= r * p[i];
    }
    p = np;
  }
  return p;
}

// Square matrix with at most one nonzero entry per column: col j -> (row[j], val[j]).
struct MonoMat {
  int n = 0;
  const CycField* f = nullptr;
  std::vector<int> row;  // -1 for a zero column
  std::vector<Cyc> val;

  static MonoMat zero(int n, const CycField* f) { return MonoMat{n, f, std::vector<int>(n, -1), std::vector<Cyc>(n)}; }
  static MonoMat identity(int n, const CycField* f) {
    MonoMat m{n, f, std::vector<int>(n), std::vector<Cyc>(n, Cyc(f, Rational(1)))};
    for (int i = 0; i < n; ++i) m.row[i] = i;
    return m;
  }
  bool is_zero() const {
    for (int r : row)
      if (r >= 0) return false;
    return true;
  }
  // this * o
  MonoMat operator*(const MonoMat& o) const {
    MonoMat r = zero(n, f);
    for (int j = 0; j < n; ++j) {
      int k = o.row[j];
      if (k < 0 || row[k] < 0) continue;
      r.row[j] = row[k];
      r.val[j] = val[k] * o.val[j];
    }
    return r;
  }
  MonoMat scaled(const Cyc& c) const {
    MonoMat r = *this;
    if (c.is_zero()) return zero(n, f);
    for (int j = 0; j < n; ++j)
      if (r.row[j] >= 0) r.val[j] = r.val[j] * c;
    return r;
  }
  Cyc trace() const {
    Cyc t(f, Rational());
    for (int j = 0; j < n; ++j)
      if (row[j] == j) t += val[j];
    return t;
  }
  Matrix dense() const {
    Matrix m(n, n, f);
    for (int j = 0; j < n; ++j)
      if (row[j] >= 0) m(row[j], j) = val[j];
    return m;
  }
  // returns nullopt if the dense matrix is not monomial
  static std::optional<MonoMat> from_dense(const Matrix& m) {
    MonoMat r = zero(m.rows(), m.field());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i) {
        if (m(i, j).is_zero()) continue;
        if (r.row[j] >= 0) return std::nullopt;
        r.row[j] = i;
        r.val[j] = m(i, j);
      }
    return r;
  }
};

}  // namespace taftknot
