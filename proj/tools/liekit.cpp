// liekit command line: dimension tables, decompositions and the check catalog.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "liekit/liekit.hpp"

namespace {

using liekit::json;
namespace verify = liekit::verify;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot open " + out + " for writing");
  f << text;
  if (!f) throw IoError("write to " + out + " failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Options {
  int p = 1, q = 2, n = 3;
  long bound = 0;
  bool as_json = false;
  bool timings = false;
  std::string out;
  int max_n = 8;
  std::string module = "so-phi";
  std::string slot = "last";
  std::string check;
};

int cmd_dims(const Options& o) {
  if (o.n < 2) throw verify::UsageError("dims: needs n >= 2");
  using liekit::DominantWeight;
  json rows = json::array();
  std::ostringstream os;
  os << "weight\tdim\n";
  for (int i = 1; i < o.n; ++i) {
    const auto w = DominantWeight::fundamental(o.n, i);
    rows.push_back({{"weight", w.str()}, {"coeffs", w.coeffs}, {"dim", liekit::weyl_dim(w)}});
    os << w.str() << "\t" << liekit::weyl_dim(w) << "\n";
  }
  const auto adj = DominantWeight::fundamental(o.n, 1) + DominantWeight::fundamental(o.n, o.n - 1);
  rows.push_back({{"weight", adj.str()}, {"coeffs", adj.coeffs}, {"dim", liekit::weyl_dim(adj)}});
  os << adj.str() << "\t" << liekit::weyl_dim(adj) << "\n";
  emit(o.as_json ? dump({{"n", o.n}, {"weights", rows}}) : os.str(), o.out);
  return 0;
}

int cmd_enumerate(const Options& o) {
  if (o.n < 3) throw verify::UsageError("enumerate: needs n >= 3");
  if (o.bound < 1) throw verify::UsageError("enumerate: needs --bound >= 1");
  json rows = json::array();
  std::ostringstream os;
  for (const auto& w : liekit::enumerate_dominant(o.n, o.bound)) {
    rows.push_back({{"weight", w.weight.str()}, {"coeffs", w.weight.coeffs}, {"dim", w.dim}});
    os << w.weight.str() << "\t" << w.dim << "\n";
  }
  emit(o.as_json ? dump({{"n", o.n}, {"bound", o.bound}, {"weights", rows}}) : os.str(), o.out);
  return 0;
}

liekit::Representation named_module(const Options& o) {
  using namespace liekit;
  if (o.p < 1 || o.q < 1 || o.p + o.q < 3) throw verify::UsageError("needs p, q >= 1 and p + q >= 3");
  if (o.module == "so-phi") {
    const auto e = embed_phi(o.p, o.q, false);
    return restrict(adjoint_rep(e.target), e);
  }
  if (o.module == "so-psi1" || o.module == "so-psi2") {
    const auto e = embed_psi(o.p, o.q, o.module == "so-psi1" ? 1 : 2, false);
    return restrict(adjoint_rep(e.target), e);
  }
  if (o.module == "wedge-cpq") return wedge2_rep(realify(defining_rep(o.p, o.q, false)));
  if (o.module == "cpq") return realify(defining_rep(o.p, o.q, true));
  if (o.module == "wedge2") return wedge2_rep(defining_rep(o.p, o.q, true));
  if (o.module == "adjoint") return adjoint_rep(unitary_algebra(o.p, o.q, true));
  throw verify::UsageError("unknown module '" + o.module + "'");
}

int cmd_decompose(const Options& o) {
  const auto r = named_module(o);
  const auto d = r.field() == liekit::Field::complex ? liekit::complex_isotypic(r) : liekit::real_isotypic(r);
  if (o.as_json) {
    json j = liekit::to_json(d, false);
    j["algebra"] = r.algebra()->name();
    j["module"] = o.module;
    emit(dump(j), o.out);
    return 0;
  }
  std::ostringstream os;
  os << o.module << " over " << r.algebra()->name() << ", dim " << r.dim() << "\n";
  for (const auto& c : d.components) {
    os << "  " << c.label << "  weight " << c.weight.str() << "  dim " << c.dim << " x" << c.multiplicity;
    if (c.kind) os << "  " << liekit::to_string(*c.kind);
    os << "\n";
  }
  emit(os.str(), o.out);
  return 0;
}

int cmd_forms(const Options& o) {
  if (o.p < 1 || o.q < 1 || o.p + o.q < 3) throw verify::UsageError("forms: needs p, q >= 1 and p + q >= 3");
  const auto f = liekit::invariant_bilinear_forms(liekit::realify(liekit::defining_rep(o.p, o.q, true)));
  json sym = json::array(), anti = json::array(), sig = json::array();
  for (const auto& m : f.symmetric) sym.push_back(liekit::to_json(m));
  for (const auto& m : f.antisymmetric) anti.push_back(liekit::to_json(m));
  for (const auto& s : f.signatures) sig.push_back(liekit::to_json(s));
  if (o.as_json) {
    emit(dump({{"module", "C^{" + std::to_string(o.p) + "," + std::to_string(o.q) + "}_R"},
               {"dim", f.all.size()},
               {"symmetric", sym},
               {"antisymmetric", anti},
               {"signatures", sig}}),
         o.out);
    return 0;
  }
  std::ostringstream os;
  os << "invariant forms: " << f.all.size() << " (symmetric " << f.symmetric.size() << ", antisymmetric "
     << f.antisymmetric.size() << ")\n";
  for (std::size_t i = 0; i < f.symmetric.size(); ++i)
    os << "symmetric, signature " << f.signatures[i].str() << "\n" << f.symmetric[i].str() << "\n";
  for (const auto& m : f.antisymmetric) os << "antisymmetric\n" << m.str() << "\n";
  emit(os.str(), o.out);
  return 0;
}

int cmd_pair(const Options& o) {
  using namespace liekit;
  if (o.p < 1 || o.q < 1 || o.p + o.q < 3) throw verify::UsageError("pair: needs p, q >= 1 and p + q >= 3");
  std::optional<Embedding> e;
  if (o.slot == "last")
    e = embed_unitary_in_special(o.p, o.q, ExtraSlot::last);
  else if (o.slot == "first")
    e = embed_unitary_in_special(o.p, o.q, ExtraSlot::first);
  else if (o.slot == "phi")
    e = embed_phi(o.p, o.q, false);
  else
    throw verify::UsageError("pair: --slot must be last, first or phi");
  const auto r = symmetric_pair_check(*e);
  const bool ok = r.h_m_in_m && r.m_m_in_h;
  json m = nullptr;
  if (r.h_m_in_m) m = to_json(real_isotypic(r.m_module.rep), false);
  if (o.as_json) {
    emit(dump({{"g", r.g_name},
               {"h", r.h_name},
               {"dim_m", r.m_basis.size()},
               {"h_m_in_m", r.h_m_in_m},
               {"m_m_in_h", r.m_m_in_h},
               {"killing_on_h", to_json(r.killing_on_h)},
               {"killing_on_m", to_json(r.killing_on_m)},
               {"m", m},
               {"witness", r.witness ? json(*r.witness) : json(nullptr)}}),
         o.out);
  } else {
    std::ostringstream os;
    os << "(" << r.g_name << ", " << r.h_name << ")\n";
    os << "  " << (r.h_m_in_m ? "✓" : "✗") << " [h, m] in m\n";
    os << "  " << (r.m_m_in_h ? "✓" : "✗") << " [m, m] in h\n";
    os << "  dim m " << r.m_basis.size() << ", Killing on m " << r.killing_on_m.str() << ", on h "
       << r.killing_on_h.str() << "\n";
    if (r.h_m_in_m)
      for (const auto& c : real_isotypic(r.m_module.rep).components)
        os << "  m contains " << c.label << " (dim " << c.dim << " x" << c.multiplicity << ")\n";
    if (r.witness) os << "  witness: " << *r.witness << "\n";
    emit(os.str(), o.out);
  }
  return ok ? 0 : 1;
}

int emit_reports(const std::vector<verify::Report>& reports, const Options& o) {
  emit(o.as_json ? dump(verify::reports_json(reports)) : verify::reports_text(reports), o.out);
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

int cmd_check(const Options& o) {
  const auto& info = verify::check_info(o.check);
  verify::Params prm;
  if (info.kind == verify::ParamKind::n)
    prm.n = o.n;
  else
    prm = {o.p, o.q, 0};
  const auto spec = verify::make_spec(o.check, prm);
  return emit_reports({verify::run_check(spec, {}, o.timings)}, o);
}

int cmd_all(const Options& o) {
  if (o.max_n > 8) std::cerr << "warning: max-n above 8 can take a long time\n";
  const auto specs = o.max_n < 3 ? std::vector<verify::CheckSpec>{} : verify::default_specs(o.max_n);
  return emit_reports(verify::run_all(specs, {}, o.timings), o);
}

int cmd_list(const Options& o) {
  std::ostringstream os;
  json rows = json::array();
  for (const auto& c : verify::catalog()) {
    const char* kind = c.kind == verify::ParamKind::n ? "n" : "p,q";
    os << c.id << "\t(" << kind << ")\t" << c.summary << "\n";
    rows.push_back({{"id", c.id}, {"params", kind}, {"summary", c.summary}});
  }
  emit(o.as_json ? dump(rows) : os.str(), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie algebra computations and claim checks"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_flag("--json", o.as_json, "JSON output");
    s->add_option("--out", o.out, "write output to PATH instead of stdout");
  };
  auto add_pq = [&](CLI::App* s) {
    s->add_option("--p", o.p, "p of su(p,q)");
    s->add_option("--q", o.q, "q of su(p,q)");
  };

  auto* dims = app.add_subcommand("dims", "Weyl dimensions of the fundamental and adjoint modules");
  dims->add_option("--n", o.n, "rank + 1")->required();
  add_common(dims);

  auto* enumerate = app.add_subcommand("enumerate", "dominant weights with dim W^lambda <= bound");
  enumerate->add_option("--n", o.n, "rank + 1")->required();
  enumerate->add_option("--bound", o.bound, "dimension bound")->required();
  add_common(enumerate);

  auto* decompose = app.add_subcommand("decompose", "isotypic decomposition of a named module");
  decompose->add_option("--module", o.module, "so-phi, so-psi1, so-psi2, wedge-cpq, cpq, wedge2, adjoint");
  add_pq(decompose);
  add_common(decompose);

  auto* forms = app.add_subcommand("forms", "invariant bilinear forms on C^{p,q}_R");
  add_pq(forms);
  add_common(forms);

  auto* pair = app.add_subcommand("pair", "symmetric pair check for u(p,q) inside su(p,q+1), su(p+1,q) or so(2p,2q)");
  add_pq(pair);
  pair->add_option("--slot", o.slot, "last: su(p,q+1), first: su(p+1,q), phi: so(2p,2q)");
  add_common(pair);

  auto* check = app.add_subcommand("check", "run one catalog check");
  check->add_option("id", o.check, "check id (see `list`)")->required();
  add_pq(check);
  check->add_option("--n", o.n, "n for n-indexed checks");
  check->add_flag("--timings", o.timings, "record elapsed_ms");
  add_common(check);

  auto* all = app.add_subcommand("all", "run every catalog check over the default ranges");
  all->add_option("--max-n", o.max_n, "largest n = p + q (default 8)");
  all->add_flag("--timings", o.timings, "record elapsed_ms");
  add_common(all);

  auto* list = app.add_subcommand("list", "list catalog checks");
  add_common(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dims) return cmd_dims(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*decompose) return cmd_decompose(o);
    if (*forms) return cmd_forms(o);
    if (*pair) return cmd_pair(o);
    if (*check) return cmd_check(o);
    if (*all) return cmd_all(o);
    if (*list) return cmd_list(o);
  } catch (const verify::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
