#include "polyred/ortho/form.hpp"

#include "polyred/error.hpp"

#include <algorithm>

namespace polyred {

const char* to_string(DiscClass c) {
  switch (c) {
    case DiscClass::Square: return "square";
    case DiscClass::Nonsquare: return "nonsquare";
    case DiscClass::Zero: return "zero";
  }
  return "?";
}

namespace {

void require_odd_field(const Ring& field) {
  if (field.characteristic() % 2 == 0)
    throw Error(ErrorKind::Char2Unsupported, "form analysis over " + field.description());
  if (!field.is_field()) throw Error(ErrorKind::NotApplicable, field.description() + " is not a field");
}

DiscClass class_of(const Ring& field, Ring::Elem x) {
  int c = field.quadratic_character(x);
  return c == 0 ? DiscClass::Zero : (c > 0 ? DiscClass::Square : DiscClass::Nonsquare);
}

// det(B2) / 2^k
Ring::Elem gram_det(const Ring& field, const Matrix& b2) {
  Ring::Elem half = *field.inverse(field.from_int(2));
  Ring::Elem d = determinant(field, b2);
  for (int i = 0; i < b2.n; ++i) d = field.mul(d, half);
  return d;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Ring::Elem x) { return x == 0; });
}

Vec combo(const Ring& f, const std::vector<Vec>& basis, const std::vector<Ring::Elem>& coeffs) {
  Vec out(basis.front().size(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(coeffs[k], basis[k][j]));
  return out;
}

// Linearly independent subset spanning the same space (row reduction).
std::vector<Vec> independent(const Ring& f, const std::vector<Vec>& vs) {
  std::vector<Vec> echelon, out;
  std::vector<std::size_t> lead;
  for (const auto& v : vs) {
    Vec w = v;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      Ring::Elem c = w[lead[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, echelon[k][j]));
    }
    auto it = std::find_if(w.begin(), w.end(), [](Ring::Elem x) { return x != 0; });
    if (it == w.end()) continue;
    auto pos = static_cast<std::size_t>(it - w.begin());
    Ring::Elem inv = *f.inverse(w[pos]);
    for (auto& x : w) x = f.mul(x, inv);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      Ring::Elem c = echelon[k][pos];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) echelon[k][j] = f.sub(echelon[k][j], f.mul(c, w[j]));
    }
    echelon.push_back(w);
    lead.push_back(pos);
    out.push_back(v);
  }
  return out;
}

// Nonzero isotropic vector in span(basis), when one exists. Any ternary form
// over a finite field is isotropic, so three basis vectors suffice.
std::optional<Vec> find_isotropic(const Ring& f, const Matrix& b2, const std::vector<Vec>& basis) {
  const std::size_t k = std::min<std::size_t>(basis.size(), 3);
  const auto q = static_cast<Ring::Elem>(f.order());
  std::vector<Vec> sub(basis.begin(), basis.begin() + static_cast<long>(k));
  // projective points (..., 1, 0, ..., 0)
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<Ring::Elem> c(k, 0);
    c[lead] = f.one();
    std::size_t free = lead;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t t = code;
      for (std::size_t i = 0; i < free; ++i) {
        c[i] = static_cast<Ring::Elem>(t % q);
        t /= q;
      }
      Vec v = combo(f, sub, c);
      if (!is_zero(v) && form_value(f, b2, v, v) == 0) return v;
    }
  }
  return std::nullopt;
}

}  // namespace

Ring::Elem form_value(const Ring& field, const Matrix& B2, const Vec& x, const Vec& y) {
  Vec by = apply(field, B2, y);
  Ring::Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = field.add(acc, field.mul(x[i], by[i]));
  return field.mul(acc, *field.inverse(field.from_int(2)));
}

int witt_index(const Ring& f, const Matrix& b2, std::vector<Vec> basis) {
  int index = 0;
  while (!basis.empty()) {
    auto v = find_isotropic(f, b2, basis);
    if (!v) break;
    // partner w with v.w = 1, then make it isotropic
    std::optional<Vec> w;
    for (const auto& x : basis) {
      Ring::Elem c = form_value(f, b2, *v, x);
      if (c != 0) {
        Ring::Elem inv = *f.inverse(c);
        w = x;
        for (auto& e : *w) e = f.mul(e, inv);
        break;
      }
    }
    if (!w) break;  // v in the radical of the restriction
    Ring::Elem half_ww = f.mul(form_value(f, b2, *w, *w), *f.inverse(f.from_int(2)));
    for (std::size_t j = 0; j < w->size(); ++j) (*w)[j] = f.sub((*w)[j], f.mul(half_ww, (*v)[j]));
    ++index;
    // project onto the orthogonal complement of span(v, w)
    std::vector<Vec> rest;
    for (const auto& x : basis) {
      Ring::Elem a = form_value(f, b2, x, *w), b = form_value(f, b2, x, *v);
      Vec y = x;
      for (std::size_t j = 0; j < y.size(); ++j)
        y[j] = f.sub(f.sub(y[j], f.mul(a, (*v)[j])), f.mul(b, (*w)[j]));
      if (!is_zero(y)) rest.push_back(std::move(y));
    }
    basis = rest.empty() ? rest : independent(f, rest);
  }
  return index;
}

Matrix restrict_form(const Matrix& B2, const std::vector<int>& coords) {
  Matrix out(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = B2(coords[i], coords[j]);
  return out;
}

FormAnalysis analyze_form(const Matrix& B2, const Ring& field) {
  require_odd_field(field);
  FormAnalysis fa;
  fa.n = B2.n;
  fa.radical = null_space(field, B2);
  fa.rank = fa.n - static_cast<int>(fa.radical.basis.size());
  fa.disc_class = class_of(field, gram_det(field, B2));
  Matrix w = restrict_form(B2, fa.radical.pivots);
  fa.quotient_disc_class = w.n == 0 ? DiscClass::Square : class_of(field, gram_det(field, w));
  if (!fa.singular()) {
    if (fa.n % 2 == 1) {
      fa.epsilon = 0;
    } else {
      Ring::Elem sign = (fa.n / 2) % 2 == 0 ? field.one() : field.from_int(-1);
      Ring::Elem d = field.mul(gram_det(field, B2), sign);
      fa.epsilon = field.quadratic_character(d);
    }
  }
  std::vector<Vec> basis;
  for (int c : fa.radical.pivots) {
    Vec e(static_cast<std::size_t>(fa.n), 0);
    e[c] = field.one();
    basis.push_back(std::move(e));
  }
  fa.witt_index = witt_index(field, B2, std::move(basis));
  return fa;
}

int spinor_class(const Vec& b, const Matrix& B2, const Ring& field) {
  require_odd_field(field);
  Ring::Elem v = form_value(field, B2, b, b);
  if (v == 0) throw Error(ErrorKind::IsotropicRoot, "root has zero norm");
  return field.quadratic_character(v);
}

nlohmann::json FormAnalysis::to_json(const Ring& field) const {
  nlohmann::json j;
  j["rank"] = rank;
  j["radical"] = nlohmann::json::array();
  for (const auto& v : radical.basis) {
    nlohmann::json row = nlohmann::json::array();
    for (auto x : v) row.push_back(field.format(x));
    j["radical"].push_back(row);
  }
  j["disc_class"] = to_string(disc_class);
  j["epsilon"] = epsilon ? nlohmann::json(*epsilon) : nlohmann::json("undefined");
  j["witt_index"] = witt_index;
  return j;
}

}  // namespace polyred
