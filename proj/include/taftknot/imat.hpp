#pragma once

#include <vector>

#include "taftknot/cycint.hpp"
#include "taftknot/matrix.hpp"

namespace taftknot {

// Dense matrix over Z[zeta_ell] with small coefficients. Used for module
// actions, braidings and the bead products; Matrix (over Q(zeta)) is used
// whenever a division is needed.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols, const CycField* f) : rows_(rows), cols_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, CycInt::zero(f)) {}
  static IMat identity(int n, const CycField* f) {
    IMat m(n, n, f);
    for (int i = 0; i < n; ++i) m(i, i) = CycInt::one(f);
    return m;
  }
  static IMat diagonal(const std::vector<CycInt>& d, const CycField* f) {
    IMat m(static_cast<int>(d.size()), static_cast<int>(d.size()), f);
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  // throws when an entry is not a small cyclotomic integer
  static IMat from_matrix(const Matrix& m) {
    IMat r(m.rows(), m.cols(), m.field());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = CycInt::from_cyc(m(i, j), m.field());
    return r;
  }
  Matrix to_matrix() const {
    Matrix m(rows_, cols_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) m(i, j) = (*this)(i, j).to_cyc();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CycField* field() const { return f_; }
  CycInt& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycInt& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend IMat operator*(const IMat& x, const IMat& y) {
    if (x.cols_ != y.rows_) throw Error("matrix shape mismatch in product");
    IMat r(x.rows_, y.cols_, x.f_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const CycInt& a = x(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const CycInt& b = y(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }
  friend IMat operator+(IMat x, const IMat& y) {
    x += y;
    return x;
  }
  friend IMat operator-(IMat x, const IMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch in difference");
    for (size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  IMat& operator+=(const IMat& y) {
    if (rows_ != y.rows_ || cols_ != y.cols_) throw Error("matrix shape mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i)
      if (!y.a_[i].is_zero()) a_[i] += y.a_[i];
    return *this;
  }
  friend IMat operator*(const CycInt& c, IMat x) {
    for (auto& v : x.a_)
      if (!v.is_zero()) v = c * v;
    return x;
  }
  friend bool operator==(const IMat& x, const IMat& y) { return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_; }
  friend bool operator!=(const IMat& x, const IMat& y) { return !(x == y); }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }
  CycInt trace() const {
    CycInt t = CycInt::zero(f_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }
  std::vector<CycInt> diag() const {
    std::vector<CycInt> d;
    for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }
  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
  }
  // c when the matrix is c times the identity
  std::optional<CycInt> as_scalar() const {
    if (rows_ != cols_ || rows_ == 0 || !is_diagonal()) return std::nullopt;
    for (int i = 1; i < rows_; ++i)
      if ((*this)(i, i) != (*this)(0, 0)) return std::nullopt;
    return (*this)(0, 0);
  }
  IMat pow(long long k) const {
    if (k < 0) throw Error("negative power of an integer matrix");
    IMat r = identity(rows_, f_), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }
  IMat kron(const IMat& y) const {
    IMat r(rows_ * y.rows_, cols_ * y.cols_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const CycInt& a = (*this)(i, j);
        if (a.is_zero()) continue;
        for (int k = 0; k < y.rows_; ++k)
          for (int l = 0; l < y.cols_; ++l)
            if (!y(k, l).is_zero()) r(i * y.rows_ + k, j * y.cols_ + l) = a * y(k, l);
      }
    return r;
  }
  size_t nonzeros() const {
    size_t c = 0;
    for (const auto& v : a_)
      if (!v.is_zero()) ++c;
    return c;
  }
  std::string str() const { return to_matrix().str(); }

 private:
  int rows_ = 0, cols_ = 0;
  const CycField* f_ = nullptr;
  std::vector<CycInt> a_;
};

inline std::ostream& operator<<(std::ostream& os, const IMat& m) { return os << m.str(); }

// m on the slot pair (k, k+1) of a tensor power, m acting on V (x) V with dim V = d
inline IMat on_slots(const IMat& m, int d, int power, int k) {
  const CycField* f = m.field();
  long long left = 1, right = 1;
  for (int i = 0; i < k; ++i) left *= d;
  for (int i = k + 2; i < power; ++i) right *= d;
  return IMat::identity(static_cast<int>(left), f).kron(m).kron(IMat::identity(static_cast<int>(right), f));
}

}  // namespace taftknot
