#pragma once

// JSON layouts.
//
//   scalar       real: [num, den]   complex: [re_num, re_den, im_num, im_den]
//                (integers; decimal strings when they do not fit in 64 bits)
//   matrix       {"rows", "cols", "field", "entries": [[scalar, ...], ...]}
//   algebra      {"name", "ambient", "dim", "field", "form", "gram", "basis": [matrix]}
//   embedding    {"name", "source", "target", "images": [matrix], "coords": [[scalar]]}
//   rep          {"algebra", "name", "dim", "field", "action": [matrix]}
//   decomposition {"field", "module_dim", "components": [{"label", "weight", "charge",
//                 "dim", "multiplicity", "kind", "basis"}]}

#include <string>
#include <vector>

#include <json.hpp>

#include "liekit/decompose.hpp"

namespace liekit {

using json = nlohmann::ordered_json;

namespace detail {
inline json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
}  // namespace detail

inline json to_json(const Rational& r) { return json::array({detail::integer_json(r.get_num()), detail::integer_json(r.get_den())}); }

inline json to_json(const Scalar& s) {
  if (s.is_real()) return to_json(s.re());
  return json::array({detail::integer_json(s.re().get_num()), detail::integer_json(s.re().get_den()),
                      detail::integer_json(s.im().get_num()), detail::integer_json(s.im().get_den())});
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"field", to_string(m.field())}, {"entries", rows}};
}

inline json to_json(const Signature& s) { return json::array({s.plus, s.minus, s.zero}); }

inline json to_json(const DominantWeight& w) { return w.coeffs; }

inline const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::unitary:
      return "unitary";
    case FormKind::orthogonal:
      return "orthogonal";
    case FormKind::none:
      break;
  }
  return "none";
}

inline json to_json(const MatrixLieAlgebra& g) {
  json basis = json::array();
  for (const auto& b : g.basis()) basis.push_back(to_json(b));
  return {{"name", g.name()},
          {"ambient", g.ambient()},
          {"dim", g.dim()},
          {"field", to_string(g.field())},
          {"form", to_string(g.form_kind())},
          {"gram", g.gram() ? to_json(*g.gram()) : json(nullptr)},
          {"basis", basis}};
}

inline json to_json(const Embedding& e) {
  json images = json::array(), coords = json::array();
  for (const auto& m : e.images) images.push_back(to_json(m));
  for (const auto& c : e.coords) coords.push_back(to_json(c));
  return {{"name", e.name}, {"source", e.source->name()}, {"target", e.target->name()}, {"images", images}, {"coords", coords}};
}

inline json to_json(const Representation& r) {
  json action = json::array();
  for (const auto& a : r.action()) action.push_back(to_json(a));
  return {{"algebra", r.algebra()->name()},
          {"name", r.name()},
          {"dim", r.dim()},
          {"field", to_string(r.field())},
          {"action", action}};
}

inline json to_json(const IsotypicComponent& c, bool with_basis = true) {
  json j = {{"label", c.label},
            {"weight", c.weight.labels},
            {"charge", c.weight.charge ? json(*c.weight.charge) : json(nullptr)},
            {"dim", c.dim},
            {"multiplicity", c.multiplicity},
            {"kind", c.kind ? json(to_string(*c.kind)) : json(nullptr)}};
  if (with_basis) {
    json basis = json::array();
    for (const auto& v : c.basis) basis.push_back(to_json(v));
    j["basis"] = basis;
  }
  return j;
}

inline json to_json(const IsotypicDecomposition& d, bool with_basis = true) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(to_json(c, with_basis));
  return {{"field", to_string(d.field)}, {"module_dim", d.module_dim}, {"components", comps}};
}

}  // namespace liekit
