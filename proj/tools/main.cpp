// kahler — exact differential structure for finitely presented algebras.
//
// Exit codes: 0 all checks passed / result printed, 1 a mathematical check
// failed (counterexample reported), 2 usage or syntax error, 3 semantic
// validation error (mismatched shapes, foreign contexts, ...), 4 resource
// cap exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kahler/kahler_module.hpp"
#include "kahler/parse.hpp"
#include "kahler/symmetric.hpp"
#include "kahler/wext.hpp"

using namespace kahler;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitResource = 4;

struct GlobalOptions {
  std::string field = "q";
  std::string order = "degrevlex";
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::uint32_t max_degree = 4;
  bool json = false;
  bool serial = false;

  Field parse_field() const {
    if (field == "q") return Field::rationals();
    if (field.rfind("fp:", 0) == 0) {
      unsigned long long p = 0;
      std::size_t used = 0;
      const std::string digits = field.substr(3);
      p = std::stoull(digits, &used);
      if (used != digits.size())
        throw ValidationError("malformed field spec '" + field + "'");
      return Field::prime(p);
    }
    throw ValidationError("unknown field '" + field + "' (use q or fp:<p>)");
  }

  CheckConfig config() const {
    CheckConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.max_degree = max_degree;
    cfg.parallel = !serial;
    return cfg;
  }
};

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Declarations may be given inline or as a path to a file holding one.
std::string load_decl(const std::string& input) {
  if (input.find('{') != std::string::npos) return input;
  std::ifstream in(input);
  if (!in) throw ValidationError("cannot open file '" + input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraPtr load_algebra(const GlobalOptions& g, const std::string& input) {
  auto pa = parse_algebra_decl(load_decl(input), order_from_string(g.order),
                               g.parse_field());
  return AlgebraPresentation::make(pa.name, pa.ctx, std::move(pa.relations));
}

ModulePtr load_module(const std::string& input, const AlgebraPtr& algebra) {
  auto pm = parse_module_decl(load_decl(input), algebra->context());
  if (pm.over != algebra->name())
    throw ValidationError("module is declared over '" + pm.over +
                          "' but the algebra is named '" + algebra->name() +
                          "'");
  return ModulePresentation::make(algebra, pm.rank, std::move(pm.rows),
                                  pm.name);
}

ordered_json gradient_json(const Poly& p, const std::vector<Poly>& grad) {
  ordered_json out;
  out["input"] = p.to_string();
  ordered_json slots = ordered_json::array();
  for (std::size_t i = 0; i < grad.size(); ++i) {
    ordered_json slot;
    slot["variable"] = p.context()->var(i);
    slot["partial"] = grad[i].to_string();
    slots.push_back(std::move(slot));
  }
  out["gradient"] = std::move(slots);
  return out;
}

int finish_reports(const GlobalOptions& g, std::vector<CheckReport> reports) {
  ordered_json out;
  out["schema"] = 1;
  out["field"] = g.parse_field().to_string();
  out["order"] = g.order;
  out["seed"] = g.seed;
  out["samples"] = g.samples;
  out["suites"] = reports_to_json(reports);
  out["pass"] = all_ok(reports);
  std::cout << out.dump(2) << "\n";
  return all_ok(reports) ? kExitPass : kExitMathFailure;
}

// ===== subcommand bodies ====================================================

int run_diff(const GlobalOptions& g, const std::string& vars_csv,
             const std::string& poly_text) {
  auto ctx = make_context(split_names(vars_csv), order_from_string(g.order),
                          g.parse_field());
  Poly p = parse_poly(poly_text, ctx);
  auto grad = deriving_transform(p);
  if (g.json) {
    std::cout << gradient_json(p, grad).dump(2) << "\n";
  } else {
    std::cout << polyvec_to_string(grad) << "\n";
  }
  return kExitPass;
}

int run_omega(const GlobalOptions& g, const std::string& input) {
  auto algebra = load_algebra(g, input);
  auto k = kahler_of_algebra(algebra);
  if (g.json) {
    ordered_json out;
    out["algebra"] = algebra->name();
    out["module"] = k.module->name();
    out["rank"] = k.module->rank();
    ordered_json rel = ordered_json::array();
    for (const auto& row : k.module->user_rows())
      rel.push_back(polyvec_to_string(row));
    out["relations"] = std::move(rel);
    ordered_json d;
    for (std::size_t i = 0; i < algebra->nvars(); ++i)
      d[algebra->context()->var(i)] = k.universal.images()[i].to_string();
    out["d"] = std::move(d);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << k.module->to_string() << "\n";
    for (std::size_t i = 0; i < algebra->nvars(); ++i)
      std::cout << "d(" << algebra->context()->var(i)
                << ") = " << k.universal.images()[i].to_string() << "\n";
  }
  return kExitPass;
}

int run_axioms(const GlobalOptions& g, const std::string& vars_csv,
               const std::string& suite) {
  auto ctx = make_context(split_names(vars_csv), order_from_string(g.order),
                          g.parse_field());
  CheckConfig cfg = g.config();
  std::vector<CheckReport> reports;
  auto want = [&](const char* name) {
    return suite == "all" || suite == name;
  };
  if (want("codifferential"))
    for (auto& r : check_codifferential_axioms(ctx, cfg))
      reports.push_back(std::move(r));
  if (want("monad"))
    for (auto& r : check_monad_laws(ctx, cfg))
      reports.push_back(std::move(r));
  if (want("naturality")) {
    // a deterministic pseudo-random square matrix and a projection-like
    // rectangular one, both derived from the seed
    Sampler s(cfg.seed);
    const std::size_t n = ctx->nvars();
    std::vector<std::vector<Scalar>> square(
        n, std::vector<Scalar>(n, Scalar::from_int(ctx->field(), 0)));
    for (auto& row : square)
      for (auto& c : row) c = s.scalar(ctx->field());
    auto sq = check_naturality(LinearMap::make(ctx, ctx, square), cfg);
    sq.axiom = "naturality(endo)";
    reports.push_back(std::move(sq));

    auto narrow = make_context({"z1", "z2"}, ctx->order(), ctx->field());
    std::vector<std::vector<Scalar>> rect(
        n, std::vector<Scalar>(2, Scalar::from_int(ctx->field(), 0)));
    for (auto& row : rect)
      for (auto& c : row) c = s.scalar(ctx->field());
    auto rc = check_naturality(LinearMap::make(ctx, narrow, rect), cfg);
    rc.axiom = "naturality(to-plane)";
    reports.push_back(std::move(rc));
  }
  if (want("alt"))
    for (auto& r : check_alt_characterization(ctx, cfg))
      reports.push_back(std::move(r));
  if (reports.empty())
    throw ValidationError("unknown suite '" + suite +
                          "' (codifferential, monad, naturality, alt, all)");
  return finish_reports(g, std::move(reports));
}

int run_check_derivation(const GlobalOptions& g, const std::string& alg_input,
                         const std::string& mod_input,
                         const std::vector<std::string>& image_texts) {
  auto algebra = load_algebra(g, alg_input);
  auto module = load_module(mod_input, algebra);
  if (image_texts.size() != algebra->nvars()) {
    // one --images tuple per generator is a usage matter, not a math one
    std::cerr << "usage error: expected " << algebra->nvars()
              << " image tuples (one per generator), got "
              << image_texts.size() << "\n";
    return kExitUsage;
  }
  std::vector<ModuleElement> images;
  images.reserve(image_texts.size());
  for (const auto& text : image_texts)
    images.push_back(module->element(parse_poly_tuple(text, algebra->context())));

  CheckConfig cfg = g.config();
  CheckReport relations = check_derivation_relations(algebra, module, images);
  std::vector<CheckReport> reports;
  reports.push_back(relations);
  if (relations.ok()) {
    auto d = Derivation::make(algebra, module, images);
    auto cand = DerivationCandidate::of(d, "candidate");
    reports.push_back(check_derivation_linear(cand, cfg));
    reports.push_back(check_leibniz(cand, cfg));
    reports.push_back(check_beck_T_derivation(cand, cfg));
  }
  return finish_reports(g, std::move(reports));
}

int run_wext_eval(const GlobalOptions& g, const std::string& alg_input,
                  const std::string& mod_input,
                  const std::vector<std::string>& pair_texts,
                  const std::string& poly_text) {
  auto algebra = load_algebra(g, alg_input);
  auto module = load_module(mod_input, algebra);
  WAlgebra w(algebra, module);

  std::vector<WElement> args;
  args.reserve(pair_texts.size());
  for (const auto& text : pair_texts) {
    auto bar = text.find('|');
    if (bar == std::string::npos)
      throw ValidationError("pair '" + text +
                            "' must look like \"a | (m1, ...)\"");
    Poly base = parse_poly(text.substr(0, bar), algebra->context());
    PolyVec tangent =
        parse_poly_tuple(text.substr(bar + 1), algebra->context());
    args.push_back(w.element(algebra->nu(base), module->element(tangent)));
  }

  // the polynomial is written in s1..sk, one variable per pair
  std::vector<std::string> formal_names;
  for (std::size_t i = 0; i < args.size(); ++i)
    formal_names.push_back("s" + std::to_string(i + 1));
  auto formal = make_context(formal_names, order_from_string(g.order),
                             g.parse_field());
  Poly p = parse_poly(poly_text, formal);
  WElement result = beta_eval(w, p, args);

  if (g.json) {
    ordered_json out;
    out["input"] = p.to_string();
    out["base"] = result.base.to_string();
    out["tangent"] = result.tangent.to_string();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact deriving transforms, derivations and Kahler differentials "
      "for finitely presented algebras"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GlobalOptions g;
  app.add_option("--field", g.field, "Coefficient field: q or fp:<p>");
  app.add_option("--order", g.order, "Monomial order: degrevlex or lex");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--samples", g.samples, "Samples per randomized suite")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", g.max_degree,
                 "Degree bound for sampled polynomials");
  app.add_flag("--json", g.json, "Emit JSON instead of plain text");
  app.add_flag("--serial", g.serial, "Disable OpenMP sample sweeps");

  // diff
  auto* diff = app.add_subcommand("diff", "Apply the deriving transform");
  std::string diff_vars = "x", diff_poly;
  diff->add_option("--vars", diff_vars, "Comma-separated variables");
  diff->add_option("poly", diff_poly, "Polynomial to differentiate")
      ->required();

  // omega
  auto* omega = app.add_subcommand(
      "omega", "Kahler differentials of a presented algebra");
  std::string omega_input;
  omega
      ->add_option("algebra", omega_input,
                   "Algebra declaration (inline or a file path)")
      ->required();

  // axioms
  auto* axioms = app.add_subcommand(
      "axioms", "Randomized verification of the differential-structure laws");
  std::string ax_vars, ax_suite = "all";
  axioms->add_option("--vars", ax_vars, "Comma-separated variables")
      ->required();
  axioms->add_option("--suite", ax_suite,
                     "codifferential, monad, naturality, alt, or all");

  // check-derivation
  auto* checkd = app.add_subcommand(
      "check-derivation", "Validate candidate generator images against the "
                          "derivation laws");
  std::string cd_alg, cd_mod;
  std::vector<std::string> cd_images;
  checkd->add_option("--algebra", cd_alg, "Algebra declaration or file")
      ->required();
  checkd->add_option("--module", cd_mod, "Module declaration or file")
      ->required();
  checkd
      ->add_option("--images", cd_images,
                   "Image tuple per generator, e.g. \"(y, -x)\"")
      ->required();

  // wext eval
  auto* wext = app.add_subcommand("wext", "Square-zero extension operations");
  wext->require_subcommand(1);
  auto* weval = wext->add_subcommand(
      "eval", "Dual-number evaluation in W(A, M): polynomial in s1..sk");
  std::string we_alg, we_mod, we_poly;
  std::vector<std::string> we_pairs;
  weval->add_option("--algebra", we_alg, "Algebra declaration or file")
      ->required();
  weval->add_option("--module", we_mod, "Module declaration or file")
      ->required();
  weval
      ->add_option("--pair", we_pairs, "Argument \"a | (m1, ...)\" per slot")
      ->required();
  weval->add_option("poly", we_poly, "Polynomial over s1..sk")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*diff) return run_diff(g, diff_vars, diff_poly);
    if (*omega) return run_omega(g, omega_input);
    if (*axioms) return run_axioms(g, ax_vars, ax_suite);
    if (*checkd) return run_check_derivation(g, cd_alg, cd_mod, cd_images);
    if (*weval) return run_wext_eval(g, we_alg, we_mod, we_pairs, we_poly);
  } catch (const ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const RelationViolation& e) {
    // a construction rejected its input on mathematical grounds
    std::cerr << "violation: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
