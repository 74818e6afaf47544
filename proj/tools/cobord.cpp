// cobord: command-line front end for the cobordism toolkit.
//
// Exit status: 0 when a result was computed (a "No" verdict included),
// 1 on usage or input errors, 2 when a verdict is Unknown.

#include "cobord/cobord.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cobord::io::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_unknown = 2;

struct Options {
  bool json = false;
  std::string catalog_file;
};

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string yes_no(const std::optional<bool>& b) {
  if (!b) return "unknown";
  return *b ? "yes" : "no";
}

std::string counts_text(const cobord::WitnessRecipe& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.counts.size(); ++i)
    s += (i ? ", " : "") + r.counts[i].summand + ":" + std::to_string(r.counts[i].k);
  return s + "}";
}

void print_recipe(const cobord::WitnessRecipe& r) {
  std::cout << "base χ = " << r.base_chi << ", target " << r.target << ", dim " << r.dim << "\n"
            << "counts " << counts_text(r) << "\n"
            << "resulting χ = " << r.resulting_euler << "\n";
}

cobord::Catalog load_catalog(const Options& opt) {
  if (!opt.catalog_file.empty())
    return cobord::io::catalog_from_json(cobord::io::read_file(opt.catalog_file));
  return cobord::io::catalog_from_environment();
}

int cmd_invariants(const Options& opt, const std::string& text) {
  const auto cat = load_catalog(opt);
  const auto m = cobord::evaluate(text, &cat);
  if (opt.json) {
    std::cout << cobord::io::invariants_to_json(m).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << m.name << "\n"
            << "  dim          " << m.dim << "\n"
            << "  betti Q      " << join(m.betti_q) << "\n"
            << "  betti Z/2    " << join(m.betti_z2) << "\n"
            << "  χ            " << m.euler() << "\n";
  if (m.dim % 2 == 1)
    std::cout << "  χ̂_Q          " << cobord::semi_characteristic(m, cobord::Field::Q) << "\n"
              << "  χ̂_Z2         " << cobord::semi_characteristic(m, cobord::Field::Z2) << "\n";
  if (m.dim % 4 == 0 && m.orientable)
    std::cout << "  σ            " << (m.signature ? std::to_string(*m.signature) : "unknown") << "\n";
  std::cout << "  orientable   " << (m.orientable ? "yes" : "no") << "\n"
            << "  spin         " << (m.spin ? "yes" : "no") << "\n"
            << "  stably par.  " << yes_no(m.stably_parallelizable) << "\n"
            << "  components   " << m.components << "\n";
  return exit_ok;
}

struct DecideArgs {
  std::string left, right;
  bool weak = false;
  bool spin = false;
  std::string spin_cobordant;
};

int cmd_decide(const Options& opt, const DecideArgs& a) {
  const auto cat = load_catalog(opt);
  const auto n1 = cobord::evaluate(a.left, &cat);
  const auto n2 = cobord::evaluate(a.right, &cat);
  std::optional<bool> known;
  if (a.spin_cobordant == "yes") known = true;
  if (a.spin_cobordant == "no") known = false;

  cobord::Verdict v;
  std::string mode;
  if (a.weak) {
    v = cobord::decide_weak(n1, n2, a.spin);
    mode = a.spin ? "weak_spin" : "weak";
  } else if (a.spin) {
    v = cobord::decide_spin_lorentzian(n1, n2, known);
    mode = "spin_lorentzian";
  } else {
    v = cobord::decide_lorentzian(n1, n2);
    mode = "lorentzian";
  }

  if (opt.json) {
    std::cout << cobord::io::verdict_to_json(v, mode, n1.name, n2.name).dump(2) << "\n";
  } else {
    std::cout << cobord::answer_name(v.answer);
    if (v.obstruction)
      std::cout << " — obstruction " << v.obstruction->invariant << ": " << v.obstruction->left
                << " ≠ " << v.obstruction->right;
    if (!v.rule.empty()) std::cout << " — rule " << v.rule;
    std::cout << "\n";
    if (!v.reason.empty()) std::cout << "  " << v.reason << "\n";
    for (const auto& c : v.checks) std::cout << "  check: " << c << "\n";
    if (v.witness) {
      const auto& w = *v.witness;
      std::cout << "  witness: " << w.base_description << " # summands from {";
      for (std::size_t i = 0; i < w.menu.entries.size(); ++i)
        std::cout << (i ? ", " : "") << w.menu.entries[i].manifold.name << " (δ "
                  << w.menu.entries[i].delta << ")";
      std::cout << "}\n";
      if (w.parity_modulus > 1) std::cout << "  base χ must be even\n";
      if (w.instance) std::cout << "  instance: counts " << counts_text(*w.instance) << "\n";
    }
  }
  return v.answer == cobord::Answer::unknown ? exit_unknown : exit_ok;
}

int cmd_witness(const Options& opt, int n, std::int64_t chi, std::int64_t target) {
  const auto menu = cobord::menu_for_dimension(n);
  const auto r = cobord::solve_counts(chi, menu, target);
  if (opt.json) {
    json j = cobord::io::recipe_to_json(r);
    j["schema"] = cobord::io::schema::recipe;
    j["n"] = n;
    j["menu"] = cobord::io::menu_to_json(menu);
    std::cout << j.dump(2) << "\n";
  } else {
    print_recipe(r);
  }
  return exit_ok;
}

struct KinkArgs {
  std::string file;
  std::optional<std::int64_t> claim;
  std::optional<std::int64_t> prescribe;
  bool spin_menu = false;
};

int cmd_kink(const Options& opt, const KinkArgs& a) {
  const auto cat = load_catalog(opt);
  const auto cob = cobord::io::cobordism_from_json(cobord::io::read_file(a.file), &cat);
  if (a.prescribe) {
    const auto r = a.spin_menu ? cobord::prescribed_kink_recipe_spin(cob, *a.prescribe)
                               : cobord::prescribed_kink_recipe(cob, *a.prescribe);
    if (opt.json) {
      json j = cobord::io::recipe_to_json(r);
      j["schema"] = cobord::io::schema::recipe;
      std::cout << j.dump(2) << "\n";
    } else {
      print_recipe(r);
    }
    return exit_ok;
  }
  std::optional<bool> claim_ok;
  if (a.claim) claim_ok = cobord::spin_parity_check(cob, *a.claim);
  const auto report = cobord::kink_of(cob);
  if (opt.json) {
    json j = cobord::io::kink_to_json(report);
    j["claim"] = nullptr;
    if (a.claim) j["claim"] = {{"kink", *a.claim}, {"parity_ok", *claim_ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kink " << report.kink << " (" << cobord::kink_formula_name(report.formula_used) << ")\n";
    if (report.parity_ok) std::cout << "  spin parity " << (*report.parity_ok ? "ok" : "violated") << "\n";
    if (a.claim)
      std::cout << "  claimed kink " << *a.claim << ": parity " << (*claim_ok ? "consistent" : "inconsistent")
                << " with the boundary semi-characteristic\n";
  }
  return exit_ok;
}

int cmd_classify(const Options& opt, const std::string& text) {
  const auto cat = load_catalog(opt);
  const auto m = cobord::evaluate(text, &cat);
  const auto g = cobord::classify(m);
  if (opt.json) {
    std::cout << cobord::io::classification_to_json(g, m.name).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << cobord::io::group_symbol(g.n) << " ≅ " << g.group << ", class (";
  for (std::size_t i = 0; i < g.invariant_tuple.size(); ++i)
    std::cout << (i ? ", " : "") << g.invariant_tuple[i];
  std::cout << ")\n";
  return exit_ok;
}

struct MetricArgs {
  std::string gr, v, g;
};

int cmd_metric(const Options& opt, const MetricArgs& a) {
  using namespace cobord;
  const SymmetricForm g_r(io::matrix_from_json(io::read_file(a.gr), "g_r"));
  json j = {{"schema", io::schema::metric}, {"dim", g_r.dim()}};
  std::optional<LineField> line;
  std::optional<SymmetricForm> g;
  if (!a.v.empty()) {
    line.emplace(io::vector_from_json(io::read_file(a.v), "v"));
    g.emplace(lorentz_from_riemannian(g_r, *line));
    j["mode"] = "construct";
  } else {
    g.emplace(io::matrix_from_json(io::read_file(a.g), "g"));
    line.emplace(extract_timelike_line(*g, g_r));
    j["mode"] = "extract";
  }
  const Eigen::VectorXd ev = eigenvalues(*g);
  const Inertia in = inertia_of(ev);
  const double gvv = (*g)(line->vector(), line->vector());
  const auto complement = orthogonal_complement(g_r, *line);
  const bool spacelike = pullback_is_riemannian(*g, complement);
  j["g"] = io::matrix_to_json(g->matrix());
  j["eigenvalues"] = io::vector_to_json(ev);
  j["signature"] = io::inertia_to_json(in);
  j["line_field"] = io::vector_to_json(line->vector());
  j["g_vv"] = gvv;
  j["timelike"] = gvv < 0;
  j["complement_riemannian"] = spacelike;
  if (opt.json) {
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, " ", "\n", "  [", "]");
  std::cout << "g =\n" << g->matrix().format(fmt) << "\n"
            << "eigenvalues " << ev.transpose().format(Eigen::IOFormat(Eigen::FullPrecision, 0, " ")) << "\n"
            << "signature (" << in.negative << " negative, " << in.zero << " zero, " << in.positive
            << " positive)\n"
            << "line field " << line->vector().transpose().format(Eigen::IOFormat(Eigen::FullPrecision, 0, " "))
            << "\n"
            << "g(V, V) = " << gvv << (gvv < 0 ? " (timelike)" : "") << "\n"
            << "g on the g_r-orthogonal complement of V is "
            << (spacelike ? "positive definite" : "not positive definite") << "\n";
  return exit_ok;
}

int cmd_homology(const Options& opt, const std::string& file) {
  const auto c = cobord::io::chain_complex_from_json(cobord::io::read_file(file));
  const auto h = cobord::homology(c);
  if (opt.json) {
    std::cout << cobord::io::homology_to_json(h, c).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "betti Q    " << join(h.betti_q) << "\n"
            << "betti Z/2  " << join(h.betti_z2) << "\n"
            << "χ          " << cobord::euler_characteristic_of_complex(c) << "\n";
  for (std::size_t k = 0; k < h.torsion.size(); ++k) {
    if (h.torsion[k].empty()) continue;
    std::cout << "torsion H_" << k << ":";
    for (const auto& d : h.torsion[k]) std::cout << " Z/" << d;
    std::cout << "\n";
  }
  return exit_ok;
}

const char* grammar_help =
    "Manifold expressions:\n"
    "  expr := term ('#' term)*      connected sum\n"
    "  term := atom ('x' atom)*      cartesian product\n"
    "  atom := NAME INT? | '(' expr ')'\n"
    "  NAME: S<n> T<n> CP<k> HP<k> RP<k> K3 point, or a name from the user catalog\n"
    "  'x' binds tighter than '#': \"HP1 x S2 # T6\" is (HP1 x S2) # T6.\n"
    "  Quote expressions in the shell.\n\n"
    "User catalog: --catalog FILE or COBORD_CATALOG=FILE (JSON descriptor or list).\n"
    "Exit status: 0 computed (including a No verdict), 1 usage or input error,\n"
    "2 Unknown verdict.";

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, cobordism selection rules, witness recipes and Lorentzian forms."};
  app.footer(grammar_help);
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "Print machine-readable JSON");
  app.add_option("--catalog", opt.catalog_file, "User catalog JSON (overrides COBORD_CATALOG)");

  std::string inv_expr;
  auto* inv = app.add_subcommand("invariants", "Betti numbers, χ, χ̂, σ and flags of EXPR");
  inv->add_option("expr", inv_expr, "Manifold expression")->required();

  DecideArgs dec;
  auto* decide = app.add_subcommand("decide", "Decide a (weak / spin) Lorentzian cobordism between EXPR1 and EXPR2");
  decide->add_option("expr1", dec.left, "Incoming boundary")->required();
  decide->add_option("expr2", dec.right, "Outgoing boundary")->required();
  decide->add_flag("--weak", dec.weak, "Weak Lorentzian cobordism");
  decide->add_flag("--spin", dec.spin, "Require a Spin(1,n)_0 structure");
  decide->add_option("--spin-cobordant", dec.spin_cobordant,
                     "Spin cobordance of the pair when it cannot be resolved internally")
      ->check(CLI::IsMember({"yes", "no"}));

  DecideArgs wk;
  auto* weak = app.add_subcommand("weak", "Same as 'decide --weak'");
  weak->add_option("expr1", wk.left)->required();
  weak->add_option("expr2", wk.right)->required();
  weak->add_flag("--spin", wk.spin, "Require a Spin(1,n)_0 structure");

  int wn = 0;
  std::int64_t wchi = 0, wtarget = 0;
  auto* witness = app.add_subcommand("witness", "Summand counts moving χ of a spin cobordism to a target");
  witness->add_option("--n", wn, "Boundary dimension (odd, >= 3)")->required();
  witness->add_option("--chi", wchi, "χ of the base cobordism")->required();
  witness->add_option("--target", wtarget, "Target χ (default 0)");

  KinkArgs ka;
  auto* kink = app.add_subcommand("kink", "Kink number of a cobordism descriptor file");
  kink->add_option("file", ka.file, "Cobordism JSON")->required()->check(CLI::ExistingFile);
  kink->add_option("--claim", ka.claim, "Check a claimed kink against the spin parity rule");
  kink->add_option("--prescribe", ka.prescribe, "Recipe realizing kink T on top of the file's cobordism");
  kink->add_flag("--spin-menu", ka.spin_menu, "Use spin summands for --prescribe");

  std::string cls_expr;
  auto* classify = app.add_subcommand("classify", "Class of a spin n-manifold, n in 3..7");
  classify->add_option("expr", cls_expr, "Manifold expression")->required();

  MetricArgs ma;
  auto* metric = app.add_subcommand("metric", "Lorentzian form from (g_r, v), or timelike line from (g_r, g)");
  metric->add_option("--gr", ma.gr, "Riemannian form, JSON matrix")->required()->check(CLI::ExistingFile);
  auto* vopt = metric->add_option("--v", ma.v, "Line field, JSON vector")->check(CLI::ExistingFile);
  auto* gopt = metric->add_option("--g", ma.g, "Lorentzian form, JSON matrix")->check(CLI::ExistingFile);
  vopt->excludes(gopt);
  metric->callback([&] {
    if (ma.v.empty() && ma.g.empty()) throw CLI::ValidationError("metric", "one of --v or --g is required");
  });

  std::string hom_file;
  auto* hom = app.add_subcommand("homology", "Homology of a chain-complex JSON file");
  hom->add_option("file", hom_file, "Chain complex JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    if (*inv) return cmd_invariants(opt, inv_expr);
    if (*decide) return cmd_decide(opt, dec);
    if (*weak) {
      wk.weak = true;
      return cmd_decide(opt, wk);
    }
    if (*witness) return cmd_witness(opt, wn, wchi, wtarget);
    if (*kink) return cmd_kink(opt, ka);
    if (*classify) return cmd_classify(opt, cls_expr);
    if (*metric) return cmd_metric(opt, ma);
    if (*hom) return cmd_homology(opt, hom_file);
  } catch (const cobord::Error& e) {
    if (opt.json)
      std::cout << cobord::io::error_to_json(e).dump(2) << "\n";
    else
      std::cerr << "error[" << cobord::errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
