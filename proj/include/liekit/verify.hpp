#pragma once

// Check catalog. Every check recomputes its claims exactly and reports one
// Detail per claim; a check passes when every claim holds.
//
// Report JSON:
//   {"schema_version": 1,
//    "reports": [{"check", "params", "status", "details": [{"claim", "expected",
//                 "computed", "witness", "holds"}], "elapsed_ms"}]}
// elapsed_ms is null unless timings were requested, so default output is
// byte-for-byte reproducible.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "liekit/decompose.hpp"
#include "liekit/serialize.hpp"

namespace liekit::verify {

inline constexpr int kSchemaVersion = 1;

/// Bad check id or parameters; the CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ParamKind { pq, n };

struct CheckInfo {
  std::string id;
  ParamKind kind;
  std::string summary;
};

inline const std::vector<CheckInfo>& catalog() {
  static const std::vector<CheckInfo> c = {
      {"dims-table", ParamKind::n, "Weyl dimensions of the fundamental and adjoint modules of sl(n,C)"},
      {"claim-1", ParamKind::n, "lower bounds on dim W^lambda for the weights near n/2"},
      {"lemma-a1", ParamKind::pq, "irreducible real su(p,q)-modules of dimension <= 2n+1"},
      {"lemma-a2", ParamKind::pq, "invariant bilinear forms on C^{p,q}_R"},
      {"lemma-wedge-so", ParamKind::pq, "wedge2 E = so(E) as so(E)-modules for E = R^{2p,2q}"},
      {"lemma-wedge-cpq", ParamKind::pq, "wedge2 C^{p,q}_R as a u(p,q)-module"},
      {"lemma-phi", ParamKind::pq, "so(2p,2q) restricted to u(p,q) along phi"},
      {"lemma-psi", ParamKind::pq, "so(2p,2q+1) and so(2p+1,2q) restricted to u(p,q) along psi"},
      {"brackets-phi", ParamKind::pq, "bracket relations between the summands of so(2p,2q)"},
      {"brackets-psi", ParamKind::pq, "bracket relations between the summands of so(2p,2q+1)"},
      {"symmetric-pairs", ParamKind::pq, "symmetric pairs built on u(p,q) and so(2p,2q)"},
      {"killing-signature", ParamKind::pq, "Killing form signatures for su(p,q) and su(p,q+1)"},
  };
  return c;
}

inline const CheckInfo& check_info(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw UsageError("unknown check '" + id + "'");
}

struct Params {
  int p = 0, q = 0, n = 0;

  json to_json(ParamKind kind) const {
    if (kind == ParamKind::n) return {{"n", n}};
    return {{"p", p}, {"q", q}};
  }
};

struct CheckSpec {
  std::string id;
  Params params;
};

inline CheckSpec make_spec(const std::string& id, Params params) {
  const auto& info = check_info(id);
  if (info.kind == ParamKind::n) {
    if (params.n < 3) throw UsageError(id + ": needs n >= 3");
    params.p = params.q = 0;
  } else {
    if (params.p < 1 || params.q < 1) throw UsageError(id + ": needs p >= 1 and q >= 1");
    if (params.p + params.q < 3) throw UsageError(id + ": needs p + q >= 3");
    params.n = 0;
  }
  return {id, params};
}

struct Detail {
  std::string claim;
  json expected;
  json computed;
  std::optional<std::string> witness;
  bool holds = false;
};

struct Report {
  std::string check;
  json params;
  std::vector<Detail> details;
  std::optional<double> elapsed_ms;

  bool passed() const {
    if (details.empty()) return false;
    return std::all_of(details.begin(), details.end(), [](const Detail& d) { return d.holds; });
  }
};

/// Algebra source for the checks. Overrides replace an algebra by name
/// ("su(1,2)", "u(2,3)", ...); used to feed perturbed algebras into checks.
class Context {
 public:
  void override_algebra(AlgebraPtr g) {
    const std::string name = g->name();
    overrides_[name] = std::move(g);
  }

  AlgebraPtr unitary(int p, int q, bool traceless) const {
    const std::string name = std::string(traceless ? "su(" : "u(") + std::to_string(p) + "," + std::to_string(q) + ")";
    if (auto it = overrides_.find(name); it != overrides_.end()) return it->second;
    return unitary_algebra(p, q, traceless);
  }

 private:
  std::map<std::string, AlgebraPtr> overrides_;
};

namespace detail {

class Recorder {
 public:
  void expect(std::string claim, json expected, json computed, std::optional<std::string> witness = std::nullopt) {
    const bool ok = expected == computed;
    details_.push_back({std::move(claim), std::move(expected), std::move(computed), std::move(witness), ok});
  }

  /// Claim whose verdict is not plain equality of expected and computed.
  void record(std::string claim, json expected, json computed, bool holds,
              std::optional<std::string> witness = std::nullopt) {
    details_.push_back({std::move(claim), std::move(expected), std::move(computed), std::move(witness), holds});
  }

  void no_defect(std::string claim, const std::optional<std::string>& defect) {
    record(std::move(claim), true, !defect.has_value(), !defect.has_value(), defect);
  }

  std::vector<Detail> take() { return std::move(details_); }

 private:
  std::vector<Detail> details_;
};

inline std::string pq_str(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }
inline std::string cpq_label(int p, int q) { return "C^{" + pq_str(p, q) + "}_R"; }
inline const std::string kWedgeLabel = "(wedge2 C^n)_R";
inline std::string su_label(int p, int q) { return "su(" + pq_str(p, q) + ")"; }

inline void structure_claim(Recorder& rec, const MatrixLieAlgebra& g) {
  rec.no_defect("structure constants of " + g.name() + " reproduce the matrix commutators", structure_defect(g));
}

inline long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// (label, dim, multiplicity) triples, sorted, for order-independent comparison.
inline json components_json(const IsotypicDecomposition& d) {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> rows;
  for (const auto& c : d.components) rows.emplace_back(c.label, c.dim, c.multiplicity);
  std::sort(rows.begin(), rows.end());
  json out = json::array();
  for (const auto& [l, dim, mult] : rows) out.push_back({{"label", l}, {"dim", dim}, {"multiplicity", mult}});
  return out;
}

inline json expected_components(std::vector<std::tuple<std::string, std::size_t, std::size_t>> rows) {
  std::sort(rows.begin(), rows.end());
  json out = json::array();
  for (const auto& [l, dim, mult] : rows) out.push_back({{"label", l}, {"dim", dim}, {"multiplicity", mult}});
  return out;
}

/// Each component of d (a decomposition over u(p,q)) decomposed again over su(p,q).
inline json over_su(const Representation& rep_u, const IsotypicDecomposition& d, const AlgebraPtr& su) {
  const Representation r = restrict(rep_u, inclusion(su, rep_u.algebra()));
  json out = json::object();
  for (const auto& c : d.components) {
    const auto sub = restrict_to_subspace(r, c.basis);
    const auto dd = real_isotypic(sub.rep);
    json parts = json::array();
    for (const auto& cc : dd.components)
      for (std::size_t k = 0; k < cc.multiplicity; ++k) parts.push_back(cc.dim);
    out[c.label] = parts;
  }
  return out;
}

/// Expected irreducible dims over su(p,q) for the summands of a restricted module.
inline json su_parts(const std::vector<std::pair<std::string, std::size_t>>& comps, int p, int q) {
  json out = json::object();
  std::vector<std::pair<std::string, std::size_t>> sorted = comps;
  for (const auto& [l, dim] : sorted) {
    if (l == kWedgeLabel && p == 2 && q == 2)
      out[l] = json::array({dim / 2, dim / 2});
    else
      out[l] = json::array({dim});
  }
  return out;
}

inline json sorted_keys(json j) {
  json out = json::object();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  for (const auto& k : keys) out[k] = j[k];
  return out;
}

inline std::vector<std::size_t> indices(const IsotypicDecomposition& d, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) {
    auto i = d.find(l);
    if (!i) throw std::runtime_error("no component labelled " + l);
    out.push_back(*i);
  }
  return out;
}

/// Bracket claim: [sum of a, sum of b] spans exactly the sum of `image`.
inline void bracket_claim(Recorder& rec, const MatrixLieAlgebra& g, const IsotypicDecomposition& d,
                          const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const std::vector<std::string>& image) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " + ") + x;
    return s.empty() ? std::string("0") : s;
  };
  const auto bi = bracket_component_map(g, d, indices(d, a), indices(d, b));
  std::vector<std::string> hit;
  for (auto h : bi.hits) hit.push_back(d.components[h].label);
  std::sort(hit.begin(), hit.end());
  std::vector<std::string> want = image;
  std::sort(want.begin(), want.end());
  std::size_t want_dim = 0;
  for (const auto& l : want) want_dim += d.components[*d.find(l)].total_dim();
  rec.expect(g.name() + ": [" + join(a) + ", " + join(b) + "] = " + join(image),
             {{"components", want}, {"image_dim", want_dim}}, {{"components", hit}, {"image_dim", bi.image_dim}});
}

// ---- n-indexed checks --------------------------------------------------------------

inline void dims_table(const Params& prm, const Context&, Recorder& rec) {
  const int n = prm.n;
  using DW = DominantWeight;
  rec.expect("dim W^{w1} = n", n, weyl_dim(DW::fundamental(n, 1)));
  rec.expect("dim W^{w_{n-1}} = n", n, weyl_dim(DW::fundamental(n, n - 1)));
  rec.expect("dim W^{w1 + w_{n-1}} = n^2 - 1", n * n - 1,
             weyl_dim(DW::fundamental(n, 1) + DW::fundamental(n, n - 1)));
  json want = json::array(), got = json::array();
  for (int i = 1; i < n; ++i) {
    want.push_back(binomial(n, i));
    got.push_back(weyl_dim(DW::fundamental(n, i)));
  }
  rec.expect("dim W^{w_i} = C(n, i) for 1 <= i <= n-1", want, got);

  json rho_want, rho_got;
  DW sum = DW::zero(n);
  for (int i = 1; i < n; ++i) sum = sum + DW::fundamental(n, i);
  rho_want = to_json(sum);
  {
    // rho as half the sum of positive roots, expressed in fundamental weights
    WeightVector two_rho{n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) two_rho = two_rho + root(n, a, b);
    std::vector<long> c;
    for (int i = 1; i < n; ++i) c.push_back(to_integer(inner(two_rho, root(n, i, i + 1)) / 2));
    if (two_rho != 2 * rho(n)) c.clear();
    rho_got = c;
  }
  rec.expect("rho = w1 + ... + w_{n-1}", rho_want, rho_got);

  bool pairing = true;
  std::optional<std::string> bad;
  for (int i = 1; i < n && pairing; ++i)
    for (int nu = 1; nu <= n && pairing; ++nu)
      for (int mu = nu + 1; mu <= n; ++mu) {
        const Rational v = inner(fundamental_weight(n, i), root(n, nu, mu));
        const Rational want_v = (nu <= i && i < mu) ? 1 : 0;
        if (v != want_v) {
          pairing = false;
          bad = "i=" + std::to_string(i) + " nu=" + std::to_string(nu) + " mu=" + std::to_string(mu);
          break;
        }
      }
  rec.record("(w_i, e_nu - e_mu) = 1 if nu <= i < mu and 0 otherwise", true, pairing, pairing, bad);

  if (n == 4) {
    json w = json::array(), g = json::array();
    for (long k = 0; k <= 5; ++k) {
      w.push_back((k + 1) * (k + 2) * (k + 2) * (k + 3) / 12);
      g.push_back(weyl_dim(static_cast<int>(k) * DW::fundamental(4, 2)));
    }
    rec.expect("dim W^{k w2} = (k+1)(k+2)^2(k+3)/12 for k = 0..5", w, g);
  }
}

inline void claim_1(const Params& prm, const Context&, Recorder& rec) {
  const int n = prm.n;
  using DW = DominantWeight;
  const long adj = weyl_dim(DW::fundamental(n, 1) + DW::fundamental(n, n - 1));
  rec.record("dim W^{lambda_1} = n^2 - 1 > 2n + 1", json::array({n * n - 1, "> " + std::to_string(2 * n + 1)}),
             json::array({adj, adj > 2 * n + 1 ? "> " + std::to_string(2 * n + 1) : "<= " + std::to_string(2 * n + 1)}),
             adj == n * n - 1 && adj > 2 * n + 1);
  if (n == 4) {
    // the first part of the claim excludes n = 4; check the weaker statement
    json dims = json::array();
    bool ok = true;
    for (int k = 2; k <= 5; ++k) {
      const long d = weyl_dim(k * DW::fundamental(4, 2));
      dims.push_back(d);
      ok = ok && d > 2 * n + 1;
    }
    rec.record("n = 4 is excluded from dim W^{lambda_i} >= dim W^{lambda_1}; instead dim W^{k w2} > 2n + 1 for k = 2..5",
               "all > 9", dims, ok);
    rec.expect("n = 4: dim W^{w2} = 6", 6, weyl_dim(DW::fundamental(4, 2)));
    return;
  }
  json want = json::array(), got = json::array();
  bool ok = true;
  for (int i = 1; 2 * i < n; ++i) {
    const long d = weyl_dim(DW::fundamental(n, i) + DW::fundamental(n, n - i));
    got.push_back(d);
    want.push_back(">= " + std::to_string(adj));
    ok = ok && d >= adj;
  }
  rec.record("dim W^{lambda_i} >= dim W^{lambda_1} for lambda_i = w_i + w_{n-i}, 2i < n", want, got, ok);
  if (n % 2 == 0) {
    const long d = weyl_dim(DW::fundamental(n, n / 2));
    rec.record("dim W^{w_{n/2}} > 2n + 1", "> " + std::to_string(2 * n + 1), d, d > 2 * n + 1);
  }
}

// ---- (p,q)-indexed checks ------------------------------------------------------------

inline void lemma_a1(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto su = ctx.unitary(p, q, true);
  structure_claim(rec, *su);
  json want = json::array();
  if (p == 2 && q == 2)
    want = json::array({{{"label", kWedgeLabel}, {"dim", 6}, {"kind", "real"}},
                        {{"label", cpq_label(p, q)}, {"dim", 8}, {"kind", "complex"}}});
  else
    want = json::array({{{"label", cpq_label(p, q)}, {"dim", 2 * n}, {"kind", "complex"}}});
  json got = json::array();
  for (const auto& m : lowest_dim_real_modules(p, q))
    got.push_back({{"label", m.label}, {"dim", m.real_dim}, {"kind", to_string(m.kind)}});
  rec.expect("non-trivial irreducible real modules of dimension <= " + std::to_string(2 * n + 1), want, got);

  if (n == 4) {
    const auto w = wedge2_rep(defining_rep(su));
    const auto v = real_type(w);
    const bool split = p == 2;
    rec.expect("real type of W^{w2} for " + su->name(),
               {{"kind", split ? "real" : "quaternionic"}, {"real_dim", split ? 6 : 12}},
               {{"kind", to_string(v.kind)}, {"real_dim", v.real_dim}},
               v.norm_form ? std::optional<std::string>("norm form on the trace-free commutant " + v.norm_form->str())
                           : std::nullopt);
    if (split && v.kind == RealKind::real && !v.real_form.empty()) {
      // the 6-dim real form carries an invariant form of signature (2,4) up to sign,
      // and su(2,2) acts faithfully on it, filling so(2,4)
      const auto real6 = restrict_to_subspace(realify(w), v.real_form).rep;
      const auto forms = invariant_bilinear_forms(real6);
      json sig = nullptr;
      if (forms.symmetric.size() == 1) {
        auto s = forms.signatures.front();
        if (s.plus < s.minus) std::swap(s.plus, s.minus);
        sig = to_json(s);
      }
      Subspace image(36);
      for (const auto& a : real6.action()) image.insert(vec(a));
      rec.expect("su(2,2) = so(2,4): invariant symmetric form on the 6-dim real module and faithful action",
                 {{"symmetric_forms", 1}, {"signature_up_to_sign", json::array({4, 2, 0})}, {"image_dim", 15}},
                 {{"symmetric_forms", forms.symmetric.size()}, {"signature_up_to_sign", sig}, {"image_dim", image.dim()}},
                 v.witness);
    }
  }
}

inline void lemma_a2(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto su = ctx.unitary(p, q, true);
  structure_claim(rec, *su);
  const auto r = realify(defining_rep(su));
  rec.no_defect("C^{p,q}_R is a representation", bracket_defect(r));
  const auto f = invariant_bilinear_forms(r);
  rec.expect("invariant bilinear forms: total, symmetric, antisymmetric",
             json::array({2, 1, 1}), json::array({f.all.size(), f.symmetric.size(), f.antisymmetric.size()}));
  if (f.symmetric.size() != 1 || f.antisymmetric.size() != 1) return;
  const Matrix eta = ipq(p, q);
  Matrix g0(2 * n, 2 * n), w0(2 * n, 2 * n);
  g0.set_block(0, 0, eta);
  g0.set_block(n, n, eta);
  w0.set_block(0, n, -eta);
  w0.set_block(n, 0, eta);
  Scalar c;
  const bool sym = proportional(f.symmetric.front(), g0, &c);
  rec.record("symmetric invariant form is a multiple of Re<z,w>", "proportional", sym ? "proportional" : "not proportional",
             sym, sym ? std::optional<std::string>("factor " + c.str()) : std::nullopt);
  const bool anti = proportional(f.antisymmetric.front(), w0, &c);
  rec.record("antisymmetric invariant form is a multiple of Im<z,w>", "proportional",
             anti ? "proportional" : "not proportional", anti,
             anti ? std::optional<std::string>("factor " + c.str()) : std::nullopt);
  rec.expect("signature of Re<z,w>", json::array({2 * p, 2 * q, 0}), to_json(signature(g0)));
  rec.no_defect("Re<z,w> and Im<z,w> are invariant", form_invariance_defect(r, {g0, w0}));
  rec.expect("commutant of C^{p,q}_R is C", 2, commutant(r).size());
}

inline void lemma_wedge_so(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q;
  structure_claim(rec, *ctx.unitary(p, q, true));
  const auto w = wedge_so_isomorphism(realified_gram(p, q), "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
  structure_claim(rec, *w.so);
  const std::size_t m = 2 * static_cast<std::size_t>(p + q);
  rec.expect("dim wedge2 E = dim so(E)", m * (m - 1) / 2, w.so->dim());
  rec.record("e_a ^ e_b -> (E_ba - E_ab) G is bijective onto so(E)", true, w.bijective, w.bijective, w.witness);
  rec.record("e_a ^ e_b -> (E_ba - E_ab) G is so(E)-equivariant", true, w.equivariant, w.equivariant, w.witness);
}

inline void lemma_wedge_cpq(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto u = ctx.unitary(p, q, false);
  const auto su = ctx.unitary(p, q, true);
  structure_claim(rec, *u);
  structure_claim(rec, *su);
  const auto wedge = wedge2_rep(realify(defining_rep(u)));
  const auto d = real_isotypic(wedge);
  const std::size_t nn = static_cast<std::size_t>(n);
  rec.expect("wedge2 C^{p,q}_R = su(p,q) + R + (wedge2 C^n)_R over u(p,q)",
             expected_components({{su_label(p, q), nn * nn - 1, 1}, {"R", 1, 1}, {kWedgeLabel, nn * (nn - 1), 1}}),
             components_json(d));
  rec.no_defect("decomposition is a direct sum of invariant subspaces", decomposition_defect(wedge, d));

  // the wedge/so map intertwines wedge2 C^{p,q}_R with so(2p,2q) restricted along phi
  const auto e = embed_phi(p, q, false);
  const auto ws = wedge_so_isomorphism(realified_gram(p, q), e.target->name());
  const Matrix phi = Matrix::from_columns(ws.coords, ws.so->dim());
  std::optional<std::string> bad;
  for (std::size_t k = 0; k < u->dim() && !bad; ++k) {
    Matrix adk(ws.so->dim(), ws.so->dim());
    for (std::size_t j = 0; j < e.coords[k].size(); ++j)
      if (!e.coords[k][j].is_zero()) adk.add_scaled(e.coords[k][j], ws.so->ad(j));
    if (phi * wedge.action(k) != adk * phi) bad = "fails for X" + std::to_string(k) + " of " + u->name();
  }
  rec.no_defect("wedge2 C^{p,q}_R = so(2p,2q) as u(p,q)-modules", bad);
}

inline void phi_constraints(Recorder& rec, const Embedding& e, int p, int q) {
  const int n = p + q;
  const Matrix eta = ipq(p, q);
  std::optional<std::string> bad;
  for (std::size_t k = 0; k < e.images.size() && !bad; ++k) {
    const Matrix& x = e.images[k];
    const Matrix a = x.block(0, 0, n, n);
    const Matrix b = x.block(n, 0, n, n);
    const bool shape = x.block(0, n, n, n) == -b && x.block(n, n, n, n) == a;
    const bool ca = (a.transpose() * eta + eta * a).is_zero();
    const bool cb = (b.transpose() * eta - eta * b).is_zero();
    if (!shape || !ca || !cb) bad = "image of X" + std::to_string(k);
  }
  rec.no_defect("phi(A + iB) = [[A, -B], [B, A]] with A^T I + I A = 0 and B^T I - I B = 0", bad);
  // i Id -> [[0, -Id], [Id, 0]]
  const auto u = e.source;
  Matrix iid = Matrix::identity(n, Field::complex);
  iid = Scalar::i() * iid;
  const auto c = u->coordinates(iid);
  Matrix j(2 * n, 2 * n);
  j.set_block(0, n, -Matrix::identity(n));
  j.set_block(n, 0, Matrix::identity(n));
  const bool centre = c && e.target->element(e.map(*c)) == j;
  rec.record("phi(i Id) = [[0, -Id], [Id, 0]]", true, centre, centre);
}

inline void lemma_phi(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto u = ctx.unitary(p, q, false);
  const auto su = ctx.unitary(p, q, true);
  structure_claim(rec, *u);
  structure_claim(rec, *su);
  const auto e = embed_phi(p, q, false);
  structure_claim(rec, *e.target);
  phi_constraints(rec, e, p, q);
  const auto rep = restrict(adjoint_rep(e.target), e);
  const auto d = real_isotypic(rep);
  const std::size_t nn = static_cast<std::size_t>(n);
  rec.expect("so(2p,2q) = su(p,q) + R + (wedge2 C^n)_R over u(p,q)",
             expected_components({{su_label(p, q), nn * nn - 1, 1}, {"R", 1, 1}, {kWedgeLabel, nn * (nn - 1), 1}}),
             components_json(d));
  rec.no_defect("decomposition is a direct sum of invariant subspaces", decomposition_defect(rep, d));
  rec.expect(p == 2 && q == 2 ? "summands over su(2,2); (wedge2 C^n)_R splits into two 6-dim modules"
                              : "summands stay irreducible over su(p,q)",
             sorted_keys(su_parts({{su_label(p, q), nn * nn - 1}, {"R", 1}, {kWedgeLabel, nn * (nn - 1)}}, p, q)),
             sorted_keys(over_su(rep, d, su)));
}

inline void lemma_psi(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto u = ctx.unitary(p, q, false);
  const auto su = ctx.unitary(p, q, true);
  structure_claim(rec, *u);
  structure_claim(rec, *su);
  const std::size_t nn = static_cast<std::size_t>(n);
  const auto phi = embed_phi(p, q, false);
  for (int variant : {1, 2}) {
    const auto e = embed_psi(p, q, variant, false);
    const std::string g = e.target->name();
    structure_claim(rec, *e.target);
    const std::size_t offset = variant == 1 ? 0 : 1;
    const auto composed = compose(phi, block_inclusion(phi.target, e.target, offset));
    rec.record(e.name + " = block inclusion after phi", true, composed.images == e.images, composed.images == e.images);
    const std::size_t m = 2 * nn;
    bool border = true;
    for (const auto& x : e.images)
      for (std::size_t k = 0; k <= m; ++k) {
        const std::size_t edge = variant == 1 ? m : 0;
        border = border && x(edge, k).is_zero() && x(k, edge).is_zero();
      }
    rec.record(e.name + ": the " + std::string(variant == 1 ? "last" : "first") + " row and column vanish", true, border,
               border);
    const auto rep = restrict(adjoint_rep(e.target), e);
    const auto d = real_isotypic(rep);
    rec.expect(g + " = su(p,q) + R + (wedge2 C^n)_R + C^{p,q}_R over u(p,q)",
               expected_components({{su_label(p, q), nn * nn - 1, 1},
                                    {"R", 1, 1},
                                    {kWedgeLabel, nn * (nn - 1), 1},
                                    {cpq_label(p, q), 2 * nn, 1}}),
               components_json(d));
    rec.no_defect(g + ": decomposition is a direct sum of invariant subspaces", decomposition_defect(rep, d));
    rec.expect(g + (p == 2 && q == 2 ? ": summands over su(2,2); (wedge2 C^n)_R splits into two 6-dim modules"
                                     : ": summands stay irreducible over su(p,q)"),
               sorted_keys(su_parts(
                   {{su_label(p, q), nn * nn - 1}, {"R", 1}, {kWedgeLabel, nn * (nn - 1)}, {cpq_label(p, q), 2 * nn}}, p, q)),
               sorted_keys(over_su(rep, d, su)));
  }
}

inline void brackets_phi(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q;
  const auto u = ctx.unitary(p, q, false);
  structure_claim(rec, *u);
  const auto e = embed_phi(p, q, false);
  const auto d = real_isotypic(restrict(adjoint_rep(e.target), e));
  const std::string su = su_label(p, q);
  bracket_claim(rec, *e.target, d, {su, "R"}, {kWedgeLabel}, {kWedgeLabel});
  bracket_claim(rec, *e.target, d, {kWedgeLabel}, {kWedgeLabel}, {su, "R"});
  bracket_claim(rec, *e.target, d, {"R"}, {kWedgeLabel}, {kWedgeLabel});
}

inline void brackets_psi(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q;
  const auto u = ctx.unitary(p, q, false);
  structure_claim(rec, *u);
  const std::string su = su_label(p, q), c = cpq_label(p, q);
  for (int variant : {1, 2}) {
    const auto e = embed_psi(p, q, variant, false);
    const auto d = real_isotypic(restrict(adjoint_rep(e.target), e));
    bracket_claim(rec, *e.target, d, {su, "R", kWedgeLabel}, {c}, {c});
    bracket_claim(rec, *e.target, d, {c}, {c}, {su, "R", kWedgeLabel});
    bracket_claim(rec, *e.target, d, {"R"}, {c}, {c});
  }
}

inline void pair_claims(Recorder& rec, const Embedding& e, const std::string& m_label, std::size_t m_dim,
                        const std::optional<Representation>& m_model, std::pair<std::size_t, std::size_t> m_sig) {
  const auto r = symmetric_pair_check(e);
  const std::string pair = "(" + r.g_name + ", " + r.h_name + ")";
  rec.record(pair + ": [h, m] in m", true, r.h_m_in_m, r.h_m_in_m, r.witness);
  rec.record(pair + ": [m, m] in h", true, r.m_m_in_h, r.m_m_in_h, r.witness);
  rec.expect(pair + ": dim m", m_dim, r.m_basis.size());
  Signature s = r.killing_on_m;
  const bool up_to_sign = (s.plus == m_sig.first && s.minus == m_sig.second && s.zero == 0) ||
                          (s.plus == m_sig.second && s.minus == m_sig.first && s.zero == 0);
  rec.record(pair + ": Killing form on m has signature (" + std::to_string(m_sig.first) + "," +
                 std::to_string(m_sig.second) + ") up to sign",
             json::array({m_sig.first, m_sig.second, 0}), to_json(s), up_to_sign);
  if (!r.h_m_in_m) return;
  if (m_model) {
    const bool iso = isomorphic(r.m_module.rep, *m_model);
    rec.record(pair + ": m = " + m_label + " as h-modules", m_label, iso ? m_label : "not isomorphic", iso);
  } else {
    const auto d = real_isotypic(r.m_module.rep);
    rec.expect(pair + ": m = " + m_label + " as h-modules", expected_components({{m_label, m_dim, 1}}),
               components_json(d));
  }
}

inline void symmetric_pairs(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const std::size_t nn = static_cast<std::size_t>(n);
  structure_claim(rec, *ctx.unitary(p, q, false));
  for (auto slot : {ExtraSlot::last, ExtraSlot::first}) {
    const auto e = embed_unitary_in_special(p, q, slot);
    structure_claim(rec, *e.target);
    pair_claims(rec, e, cpq_label(p, q), 2 * nn, std::nullopt,
                {2 * static_cast<std::size_t>(p), 2 * static_cast<std::size_t>(q)});
  }
  {
    const auto e = embed_phi(p, q, false);
    const auto r = symmetric_pair_check(e);
    const std::string pair = "(" + r.g_name + ", " + r.h_name + ")";
    rec.record(pair + ": [h, m] in m", true, r.h_m_in_m, r.h_m_in_m, r.witness);
    rec.record(pair + ": [m, m] in h", true, r.m_m_in_h, r.m_m_in_h, r.witness);
    rec.expect(pair + ": dim m", nn * (nn - 1), r.m_basis.size());
    if (r.h_m_in_m)
      rec.expect(pair + ": m = (wedge2 C^n)_R as h-modules", expected_components({{kWedgeLabel, nn * (nn - 1), 1}}),
                 components_json(real_isotypic(r.m_module.rep)));
  }
  const auto so = so_realified(p, q);
  for (int variant : {1, 2}) {
    const auto big = so_extended(p, q, variant);
    const auto e = block_inclusion(so, big, variant == 1 ? 0 : 1);
    pair_claims(rec, e, "R^{" + std::to_string(2 * p) + "," + std::to_string(2 * q) + "}", 2 * nn,
                defining_rep(so), {2 * static_cast<std::size_t>(p), 2 * static_cast<std::size_t>(q)});
  }
}

inline void killing_signature(const Params& prm, const Context& ctx, Recorder& rec) {
  const int p = prm.p, q = prm.q, n = p + q;
  const auto su = ctx.unitary(p, q, true);
  const auto u = ctx.unitary(p, q, false);
  structure_claim(rec, *su);
  structure_claim(rec, *u);
  rec.no_defect("Jacobi identity on " + su->name(), jacobi_defect(*su));
  const Matrix bsu = killing_form(*su);
  rec.expect("signature of the Killing form of " + su->name(), json::array({2 * p * q, p * p + q * q - 1, 0}),
             to_json(signature(bsu)));
  rec.no_defect("Killing form of " + su->name() + " is ad-invariant", killing_invariance_defect(*su, bsu));

  const Matrix bu = killing_form(*u);
  const auto radical = kernel(bu);
  const auto z = center(*u);
  Subspace rs(u->dim()), zs(u->dim());
  for (const auto& v : radical) rs.insert(v);
  for (const auto& v : z) zs.insert(v);
  rec.expect("radical of the Killing form of " + u->name() + " is its centre",
             {{"radical_dim", 1}, {"centre_dim", 1}, {"equal", true}},
             {{"radical_dim", rs.dim()}, {"centre_dim", zs.dim()}, {"equal", rs.basis() == zs.basis()}});

  // su(p,q+1) = su(p,q) + L + m with L the image of the centre of u(p,q)
  const auto e = embed_unitary_in_special(p, q, ExtraSlot::last);
  const auto& g = *e.target;
  structure_claim(rec, g);
  const Matrix b = killing_form(g);
  std::vector<Vector> su_part, l_part;
  for (const auto& x : su->basis()) su_part.push_back(e.map(*u->coordinates(x)));
  Matrix iid = Scalar::i() * Matrix::identity(n, Field::complex);
  l_part.push_back(e.map(*u->coordinates(iid)));
  const auto pr = symmetric_pair_check(e);
  const std::vector<std::vector<Vector>> parts = {su_part, l_part, pr.m_basis};
  const Matrix ncols_all = [&] {
    std::vector<Vector> all;
    for (const auto& pt : parts) all.insert(all.end(), pt.begin(), pt.end());
    return Matrix::from_columns(all, g.dim());
  }();
  rec.expect("su(p,q+1) = su(p,q) + L + m as vector spaces", g.dim(), rank(ncols_all));
  bool orth = true;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t c = a + 1; c < parts.size(); ++c) {
      const Matrix x = Matrix::from_columns(parts[a], g.dim()).transpose() * b * Matrix::from_columns(parts[c], g.dim());
      orth = orth && x.is_zero();
    }
  rec.record("su(p,q), L and m are Killing-orthogonal in " + g.name(), true, orth, orth);
  json sigs = json::array();
  for (const auto& pt : parts) {
    const Matrix x = Matrix::from_columns(pt, g.dim());
    sigs.push_back(to_json(signature(x.transpose() * b * x)));
  }
  // on su(p,q) the Killing form of su(p,q+1) is a positive multiple of that of su(p,q)
  const long nq = n;
  rec.expect("Killing signatures of " + g.name() + " on su(p,q), L, m",
             json::array({json::array({2 * p * q, p * p + q * q - 1, 0}), json::array({0, 1, 0}),
                          json::array({2 * p, 2 * q, 0})}),
             sigs);
  Scalar factor;
  const Matrix sucols = Matrix::from_columns(su_part, g.dim());
  const bool prop = proportional(sucols.transpose() * b * sucols, bsu, &factor);
  rec.expect("Killing form of " + g.name() + " restricts to (n+1)/n times that of " + su->name(),
             to_json(Scalar(Rational(nq + 1, nq))), prop ? to_json(factor) : json(nullptr));
}

using CheckFn = void (*)(const Params&, const Context&, Recorder&);

inline CheckFn check_fn(const std::string& id) {
  static const std::map<std::string, CheckFn> fns = {
      {"dims-table", dims_table},     {"claim-1", claim_1},
      {"lemma-a1", lemma_a1},         {"lemma-a2", lemma_a2},
      {"lemma-wedge-so", lemma_wedge_so}, {"lemma-wedge-cpq", lemma_wedge_cpq},
      {"lemma-phi", lemma_phi},       {"lemma-psi", lemma_psi},
      {"brackets-phi", brackets_phi}, {"brackets-psi", brackets_psi},
      {"symmetric-pairs", symmetric_pairs}, {"killing-signature", killing_signature},
  };
  auto it = fns.find(id);
  if (it == fns.end()) throw UsageError("unknown check '" + id + "'");
  return it->second;
}

}  // namespace detail

inline Report run_check(const CheckSpec& spec, const Context& ctx = {}, bool timings = false) {
  const auto& info = check_info(spec.id);
  Report rep;
  rep.check = spec.id;
  rep.params = spec.params.to_json(info.kind);
  detail::Recorder rec;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    detail::check_fn(spec.id)(spec.params, ctx, rec);
  } catch (const std::exception& e) {
    rec.record("check ran to completion", true, false, false, std::string(e.what()));
  }
  rep.details = rec.take();
  if (timings)
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Default parameter sweep: n = 3..max_n for n-checks and all p <= q with
/// 3 <= p + q <= max_n for the others.
inline std::vector<CheckSpec> default_specs(int max_n = 8) {
  if (max_n < 3) throw UsageError("max-n must be at least 3");
  std::vector<CheckSpec> out;
  for (const auto& c : catalog()) {
    if (c.kind == ParamKind::n) {
      for (int n = 3; n <= max_n; ++n) out.push_back(make_spec(c.id, {0, 0, n}));
    } else {
      for (int n = 3; n <= max_n; ++n)
        for (int p = 1; 2 * p <= n; ++p) out.push_back(make_spec(c.id, {p, n - p, 0}));
    }
  }
  return out;
}

/// Thread count from LIEKIT_THREADS, default 1.
inline unsigned thread_count() {
  if (const char* s = std::getenv("LIEKIT_THREADS")) {
    try {
      const long v = std::stol(s);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Runs specs in parallel; the result order always matches `specs`.
inline std::vector<Report> run_all(const std::vector<CheckSpec>& specs, const Context& ctx = {}, bool timings = false,
                                   unsigned threads = thread_count()) {
  std::vector<Report> out(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) out[i] = run_check(specs[i], ctx, timings);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(specs.size())));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

inline json report_json(const Report& r) {
  json details = json::array();
  for (const auto& d : r.details)
    details.push_back({{"claim", d.claim},
                       {"expected", d.expected},
                       {"computed", d.computed},
                       {"witness", d.witness ? json(*d.witness) : json(nullptr)},
                       {"holds", d.holds}});
  return {{"check", r.check},
          {"params", r.params},
          {"status", r.passed() ? "pass" : "fail"},
          {"details", details},
          {"elapsed_ms", r.elapsed_ms ? json(*r.elapsed_ms) : json(nullptr)}};
}

inline json reports_json(const std::vector<Report>& reports) {
  json rs = json::array();
  for (const auto& r : reports) rs.push_back(report_json(r));
  return {{"schema_version", kSchemaVersion}, {"reports", rs}};
}

inline std::string params_str(const json& params) {
  std::string s;
  for (auto it = params.begin(); it != params.end(); ++it)
    s += (s.empty() ? "" : " ") + it.key() + "=" + it.value().dump();
  return s;
}

inline std::string reports_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed();
    os << (r.passed() ? "PASS " : "FAIL ") << r.check << " " << params_str(r.params);
    if (r.elapsed_ms) os << " (" << static_cast<long>(*r.elapsed_ms) << " ms)";
    os << "\n";
    for (const auto& d : r.details) {
      os << "  " << (d.holds ? "✓ " : "✗ ") << d.claim << "\n";
      if (!d.holds || d.witness) {
        os << "      expected " << d.expected.dump() << "\n      computed " << d.computed.dump() << "\n";
        if (d.witness) os << "      witness  " << *d.witness << "\n";
      }
    }
  }
  os << reports.size() << " checks, " << passed << " passed, " << reports.size() - passed << " failed\n";
  return os.str();
}

}  // namespace liekit::verify
