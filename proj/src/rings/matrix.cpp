#include "polyred/rings/matrix.hpp"

#include "polyred/error.hpp"

namespace polyred {

Matrix identity(const Ring& ring, int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix multiply(const Ring& ring, const Matrix& x, const Matrix& y) {
  const int n = x.n;
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Ring::Elem a = x(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) out(i, j) = ring.add(out(i, j), ring.mul(a, y(k, j)));
    }
  }
  return out;
}

Matrix transpose(const Matrix& x) {
  Matrix t(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) t(j, i) = x(i, j);
  return t;
}

Matrix scale(const Ring& ring, Ring::Elem s, const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.e) v = ring.mul(s, v);
  return out;
}

Matrix power(const Ring& ring, const Matrix& x, unsigned long long k) {
  Matrix result = identity(ring, x.n), base = x;
  while (k > 0) {
    if (k & 1ull) result = multiply(ring, result, base);
    base = multiply(ring, base, base);
    k >>= 1ull;
  }
  return result;
}

bool is_identity(const Ring& ring, const Matrix& x) {
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      if (x(i, j) != (i == j ? ring.one() : 0)) return false;
  return true;
}

std::optional<Ring::Elem> scalar_value(const Matrix& x) {
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      if (i != j && x(i, j) != 0) return std::nullopt;
  for (int i = 1; i < x.n; ++i)
    if (x(i, i) != x(0, 0)) return std::nullopt;
  return x.n > 0 ? std::optional<Ring::Elem>(x(0, 0)) : std::nullopt;
}

Vec apply(const Ring& ring, const Matrix& x, const Vec& v) {
  Vec out(static_cast<std::size_t>(x.n), 0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) out[i] = ring.add(out[i], ring.mul(x(i, j), v[j]));
  return out;
}

Vec apply_row(const Ring& ring, const Vec& v, const Matrix& x) {
  Vec out(static_cast<std::size_t>(x.n), 0);
  for (int j = 0; j < x.n; ++j)
    for (int i = 0; i < x.n; ++i) out[j] = ring.add(out[j], ring.mul(v[i], x(i, j)));
  return out;
}

namespace {

Ring::Elem det_rec(const Ring& ring, const Matrix& x, std::vector<int>& cols, int row) {
  const int n = x.n;
  if (row == n) return ring.one();
  Ring::Elem acc = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    Ring::Elem a = x(row, c);
    if (a != 0) {
      cols.erase(cols.begin() + static_cast<long>(k));
      Ring::Elem minor = det_rec(ring, x, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(k), c);
      Ring::Elem term = ring.mul(a, minor);
      acc = sign > 0 ? ring.add(acc, term) : ring.sub(acc, term);
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Ring::Elem determinant(const Ring& ring, const Matrix& x) {
  if (x.n > 8) throw Error(ErrorKind::Unsupported, "determinant limited to n <= 8");
  std::vector<int> cols(static_cast<std::size_t>(x.n));
  for (int i = 0; i < x.n; ++i) cols[i] = i;
  return det_rec(ring, x, cols, 0);
}

std::optional<Matrix> inverse_field(const Ring& ring, const Matrix& x) {
  const int n = x.n;
  Matrix a = x, inv = identity(ring, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    auto pinv = ring.inverse(a(col, col));
    if (!pinv) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      a(col, j) = ring.mul(a(col, j), *pinv);
      inv(col, j) = ring.mul(inv(col, j), *pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Ring::Elem f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = ring.sub(a(r, j), ring.mul(f, a(col, j)));
        inv(r, j) = ring.sub(inv(r, j), ring.mul(f, inv(col, j)));
      }
    }
  }
  return inv;
}

NullSpace null_space(const Ring& field, const Matrix& x) {
  const int n = x.n;
  Matrix a = x;
  NullSpace out;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r) {
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
    auto inv = field.inverse(a(row, col));
    if (!inv) throw Error(ErrorKind::NotApplicable, "null space needs a field");
    for (int j = 0; j < n; ++j) a(row, j) = field.mul(a(row, j), *inv);
    for (int r = 0; r < n; ++r) {
      if (r == row || a(r, col) == 0) continue;
      Ring::Elem f = a(r, col);
      for (int j = 0; j < n; ++j) a(r, j) = field.sub(a(r, j), field.mul(f, a(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : out.pivots) is_pivot[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(static_cast<std::size_t>(n), 0);
    v[f] = field.one();
    for (std::size_t k = 0; k < out.pivots.size(); ++k) v[out.pivots[k]] = field.neg(a(static_cast<int>(k), f));
    out.basis.push_back(std::move(v));
    out.free.push_back(f);
  }
  return out;
}

Matrix congruent(const Ring& ring, const Matrix& x, const Matrix& b) {
  return multiply(ring, multiply(ring, transpose(x), b), x);
}

std::string format(const Ring& ring, const Matrix& x) {
  std::string s = "[";
  for (int i = 0; i < x.n; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < x.n; ++j) s += (j ? "," : "") + ring.format(x(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace polyred
