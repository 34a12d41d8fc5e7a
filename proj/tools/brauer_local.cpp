// brauer-local: local Brauer-group computations through special fibres.
//
// Exit codes: 0 success, 2 domain error, 3 budget exceeded or unsupported input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "brauer/bounds.hpp"
#include "brauer/report.hpp"

namespace {

using namespace brauer;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Unsupported:
    case ErrorKind::UnsupportedCharacter:
    case ErrorKind::UnsupportedChart:
    case ErrorKind::UnsupportedCharacteristic:
      return 3;
    default:
      return 2;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Domain, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer groups and local evaluation maps through special fibres"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--budget", budget, "Maximal number of equation evaluations")->capture_default_str();

  std::string model_path;

  auto* classify = app.add_subcommand("classify", "Singular points, ADE types and Brauer-table row");
  unsigned max_ext = 2;
  std::string table_path;
  classify->add_option("model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  classify->add_option("--max-ext", max_ext, "Largest extension degree searched")->capture_default_str();
  classify->add_option("--table", table_path, "Brauer table file (default: built-in)")->check(CLI::ExistingFile);

  auto* count = app.add_subcommand("count", "Points of the special fibre over F_{p^k}");
  unsigned k = 1;
  bool smooth_only = false;
  std::string cache_path;
  count->add_option("model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  count->add_option("-k,--k", k, "Extension degree")->capture_default_str();
  count->add_flag("--smooth", smooth_only, "Count smooth points only");
  count->add_option("--cache", cache_path, "Point-count cache file");

  auto* evaluate = app.add_subcommand("evaluate", "Evaluation maps of the declared algebras");
  std::string mode = "image";
  std::size_t algebra = 0;
  evaluate->add_option("model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--mode", mode, "image | prolific | zero-cycles | constancy")
      ->check(CLI::IsMember({"image", "prolific", "zero-cycles", "constancy"}))
      ->capture_default_str();
  evaluate->add_option("-k,--k", k, "Extension degree (maximal degree for zero-cycles and constancy)")
      ->capture_default_str();
  evaluate->add_option("--algebra", algebra, "Index of the algebra in the model file")->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Cone surjectivity bound and Hasse-Weil checks");
  std::int64_t g = 0, N = 1;
  std::vector<std::string> qs;
  std::string quartic_p;
  auto* g_opt = bound->add_option("-g,--genus", g, "Genus of the base curve");
  bound->add_option("-N,--br-order", N, "Bound on |Br X / Br K|")->capture_default_str();
  bound->add_option("--q", qs, "Field sizes to test")->delimiter(',');
  auto* qp_opt = bound->add_option("--quartic-p", quartic_p, "Compare p with the diagonal-quartic threshold");
  g_opt->excludes(qp_opt);

  auto* verdict = app.add_subcommand("verdict", "Check the cone criterion for a family");
  VerdictRequest req;
  std::vector<std::string> coeffs;
  std::uint64_t prime = 0;
  std::int64_t assume = 0;
  std::string verdict_model;
  verdict->add_option("--family", req.family, "diagonal-quartic | diagonal-cubic | cone-cubic | custom")
      ->required()
      ->check(CLI::IsMember({"diagonal-quartic", "diagonal-cubic", "cone-cubic", "custom"}));
  verdict->add_option("--coeffs", coeffs, "a0,a1,a2,a3 for diagonal families")->delimiter(',');
  verdict->add_option("--prime", prime, "Prime to test (default: chosen from the candidates)");
  verdict->add_option("--f", req.cone_f, "cone-cubic: f(X0,X1,X2)");
  verdict->add_option("--g", req.cone_g, "cone-cubic: g(X0,X1,X2,X3)");
  verdict->add_option("--assume-br-order", assume, "ASSUME |Br X / Br K| <= N instead of the known bound");
  verdict->add_option("--model", verdict_model, "Model file with algebras for direct evaluation")
      ->check(CLI::ExistingFile);
  verdict->add_flag("--trivial-elsewhere", req.trivial_elsewhere,
                    "Certify that the invariants vanish at every other place");

  auto* cache = app.add_subcommand("cache", "Inspect or reset a point-count cache file");
  bool clear = false;
  cache->add_option("file", cache_path, "Cache file")->required();
  cache->add_flag("--clear", clear, "Delete the cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*classify) {
      const ModelFile mf = load_model_file(model_path);
      if (table_path.empty()) {
        r = classify_report(mf, {max_ext, budget});
      } else {
        const BrauerTable table = BrauerTable::parse(read_file(table_path));
        r = classify_report(mf, {max_ext, budget}, table);
      }
    } else if (*count) {
      const ModelFile mf = load_model_file(model_path);
      if (cache_path.empty()) {
        r = count_report(mf, k, smooth_only, budget);
      } else {
        PointCountCache c = PointCountCache::open(cache_path);
        r = count_report(mf, k, smooth_only, budget, &c);
      }
    } else if (*evaluate) {
      const ModelFile mf = load_model_file(model_path);
      EvaluateOptions o;
      o.mode = mode == "prolific"      ? EvalMode::Prolific
               : mode == "zero-cycles" ? EvalMode::ZeroCycles
               : mode == "constancy"   ? EvalMode::Constancy
                                       : EvalMode::Image;
      o.algebra = algebra;
      o.k = k;
      o.budget = budget;
      r = evaluate_report(mf, o);
    } else if (*bound) {
      if (!quartic_p.empty()) {
        r = quartic_threshold_report(BigInt(quartic_p), bound->count("-N") ? N : kQuarticBrOrderBound);
      } else {
        require(g_opt->count() > 0, ErrorKind::Domain, "bound needs --genus or --quartic-p");
        std::vector<BigInt> qv;
        for (const auto& q : qs) qv.emplace_back(q);
        r = bound_report(g, N, qv);
      }
    } else if (*verdict) {
      for (const auto& c : coeffs) req.coefficients.emplace_back(c);
      if (prime != 0) req.prime = prime;
      if (verdict->count("--assume-br-order")) req.assume_br_order = assume;
      if (!verdict_model.empty()) req.model = load_model_file(verdict_model);
      req.budget = budget;
      r = verdict_report(run_verdict(req));
    } else if (*cache) {
      r["command"] = "cache";
      r["file"] = cache_path;
      if (clear) {
        r["removed"] = std::filesystem::remove(cache_path);
      } else {
        bool reset = false;
        const PointCountCache c = PointCountCache::open_or_reset(cache_path, &reset);
        r["entries"] = c.size();
        r["reset_malformed"] = reset;
      }
    }
    std::cout << (json ? render_json(r) : render_text(r));
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    // Malformed numeric input from the command line.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
