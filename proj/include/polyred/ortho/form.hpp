#pragma once

// Symmetric bilinear forms over finite fields of odd characteristic.

#include "polyred/rings/matrix.hpp"
#include "polyred/rings/ring.hpp"

#include <json.hpp>

#include <optional>

namespace polyred {

enum class DiscClass { Square, Nonsquare, Zero };

const char* to_string(DiscClass c);

struct FormAnalysis {
  int n = 0;
  int rank = 0;
  NullSpace radical;
  DiscClass disc_class = DiscClass::Zero;
  /// Discriminant class of the nonsingular quotient V/rad.
  DiscClass quotient_disc_class = DiscClass::Zero;
  /// 0 in odd rank, +-1 in even rank, unset when singular.
  std::optional<int> epsilon;
  /// Witt index of the nonsingular quotient.
  int witt_index = 0;

  bool singular() const { return rank < n; }
  int corank() const { return n - rank; }
  nlohmann::json to_json(const Ring& field) const;
};

/// Analysis of the form with matrix B2 (twice the Gram matrix). The
/// discriminant is that of B = B2/2. Errors: Char2Unsupported, NotApplicable
/// for non-fields.
FormAnalysis analyze_form(const Matrix& B2, const Ring& field);

/// x^T B2 y / 2.
Ring::Elem form_value(const Ring& field, const Matrix& B2, const Vec& x, const Vec& y);

/// Quadratic character of b.b = b^T B2 b / 2 (+1 square, -1 nonsquare);
/// throws IsotropicRoot when b.b = 0.
int spinor_class(const Vec& b, const Matrix& B2, const Ring& field);

/// Witt index of the restriction of B2 to the span of `basis`, by repeated
/// splitting off hyperbolic planes.
int witt_index(const Ring& field, const Matrix& B2, std::vector<Vec> basis);

/// Principal submatrix on the given coordinates.
Matrix restrict_form(const Matrix& B2, const std::vector<int>& coords);

}  // namespace polyred
