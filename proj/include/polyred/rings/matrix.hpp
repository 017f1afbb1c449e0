#pragma once

// Dense square matrices over a finite Ring. Entries are canonical ring
// indices, row-major; matrices act on column vectors.

#include "polyred/rings/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyred {

using Vec = std::vector<Ring::Elem>;

struct Matrix {
  int n = 0;
  std::vector<Ring::Elem> e;

  Matrix() = default;
  explicit Matrix(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim, 0) {}

  Ring::Elem& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * n + c]; }
  Ring::Elem operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * n + c]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(const Ring& ring, int n);
Matrix multiply(const Ring& ring, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
Matrix scale(const Ring& ring, Ring::Elem s, const Matrix& x);
Matrix power(const Ring& ring, const Matrix& x, unsigned long long k);
bool is_identity(const Ring& ring, const Matrix& x);
/// Scalar matrix check; returns the scalar when x = s*I.
std::optional<Ring::Elem> scalar_value(const Matrix& x);

Vec apply(const Ring& ring, const Matrix& x, const Vec& v);       // x * v
Vec apply_row(const Ring& ring, const Vec& v, const Matrix& x);   // v * x

/// Determinant by cofactor expansion (any commutative ring, n <= 8).
Ring::Elem determinant(const Ring& ring, const Matrix& x);
/// Inverse over a field via Gauss-Jordan; nullopt when singular.
std::optional<Matrix> inverse_field(const Ring& ring, const Matrix& x);
struct NullSpace {
  std::vector<Vec> basis;      // basis[k] has 1 at free[k] and 0 at the other free columns
  std::vector<int> free;
  std::vector<int> pivots;     // complement coordinates
};
/// Column null space {v : x v = 0} over a field, from the reduced row
/// echelon form.
NullSpace null_space(const Ring& field, const Matrix& x);

/// x^T * b * x
Matrix congruent(const Ring& ring, const Matrix& x, const Matrix& b);

std::string format(const Ring& ring, const Matrix& x);

}  // namespace polyred
