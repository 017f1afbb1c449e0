#pragma once

// Square matrices over an exact domain (Integer, QuadInt, GaussInt).

#include <cassert>
#include <string>
#include <vector>

namespace polyred {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, T(0)) {}
  DenseMatrix(int n, std::vector<T> entries) : n_(n), e_(std::move(entries)) {
    assert(e_.size() == static_cast<std::size_t>(n) * n);
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int dim() const { return n_; }
  T& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
  const T& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }
  const std::vector<T>& entries() const { return e_; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    assert(x.n_ == y.n_);
    DenseMatrix out(x.n_);
    for (int i = 0; i < x.n_; ++i) {
      for (int k = 0; k < x.n_; ++k) {
        if (x(i, k) == T(0)) continue;
        for (int j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  DenseMatrix transpose() const {
    DenseMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  DenseMatrix pow(unsigned k) const {
    DenseMatrix result = identity(n_), base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      base = base * base;
      k >>= 1u;
    }
    return result;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (int j = 0; j < n_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  int n_ = 0;
  std::vector<T> e_;
};

}  // namespace polyred
