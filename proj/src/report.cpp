#include "brauer/report.hpp"

#include <sstream>

#include "brauer/bounds.hpp"
#include "brauer/eval.hpp"
#include "brauer/sing.hpp"

namespace brauer {

namespace {

bool is_scalar_array(const Report& r) {
  for (const auto& x : r) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar(const Report& r) {
  if (r.is_string()) return r.get<std::string>();
  return r.dump();
}

void render(std::ostream& os, const Report& r, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : r.items()) {
    os << pad << key << ":";
    if (value.is_object()) {
      os << "\n";
      render(os, value, indent + 2);
    } else if (value.is_array() && is_scalar_array(value)) {
      os << " [";
      bool first = true;
      for (const auto& x : value) {
        os << (first ? "" : ", ") << scalar(x);
        first = false;
      }
      os << "]\n";
    } else if (value.is_array()) {
      os << "\n";
      for (const auto& x : value) {
        os << pad << "  -";
        if (x.is_object()) {
          std::ostringstream inner;
          render(inner, x, indent + 4);
          std::string s = inner.str();
          os << s.substr(static_cast<std::size_t>(indent) + 3);
        } else {
          os << " " << scalar(x) << "\n";
        }
      }
    } else {
      os << " " << scalar(value) << "\n";
    }
  }
}

Report model_summary(const ModelSpec& m) {
  Report r;
  r["label"] = m.label;
  r["ambient"] = m.ambient.label();
  Report eqs = Report::array();
  for (const auto& f : m.equations) eqs.push_back(to_string(f));
  r["equations"] = eqs;
  r["p"] = m.p;
  return r;
}

Report class_list(const std::vector<QZClass>& cs) {
  Report a = Report::array();
  for (const auto& c : cs) a.push_back(c.str());
  return a;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

std::string render_json(const Report& report) { return report.dump(2) + "\n"; }

Report classify_report(const ModelFile& file, const ClassifyOptions& options, const BrauerTable& table) {
  const ModelSpec& m = file.model;
  const SingularityType st = singularity_type(m, options.max_extension, options.budget);
  Report r;
  r["command"] = "classify";
  r["model"] = model_summary(m);
  r["max_extension"] = options.max_extension;
  Report pts = Report::array();
  for (const auto& cp : st.points) {
    Report p;
    p["point"] = cp.point.str();
    p["field"] = cp.point.field_of_definition;
    p["type"] = cp.type.label();
    p["milnor"] = cp.milnor;
    p["regular"] = regularity_check(m, cp.point);
    pts.push_back(p);
  }
  r["singular_points"] = pts;
  r["search_complete"] = st.complete;
  r["type"] = st.is_smooth() ? "smooth" : st.label();
  if (file.dp_degree) r["dp_degree"] = *file.dp_degree;

  std::string summary;
  if (st.is_smooth()) {
    summary = "smooth; tables N/A";
  } else if (!file.dp_degree) {
    summary = st.label() + "; tables N/A (no del Pezzo degree given)";
  } else {
    try {
      const BrauerTableEntry& e = table.lookup(*file.dp_degree, st.label());
      r["table_row"] = e.type;
      r["br_bar"] = e.br_bar.str();
      r["h1"] = e.h1.str();
      r["br_nr"] = e.br_nr ? e.br_nr->str() : "unresolved";
      summary = st.label() + "; Br_bar=" + e.br_bar.str() + "; H1=" + e.h1.str() +
                "; Br_nr=" + (e.br_nr ? e.br_nr->str() : "?");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TableMiss) throw;
      r["table_row"] = "miss";
      r["table_note"] = e.what();
      summary = st.label() + "; tables: no row";
    }
  }
  r["summary"] = summary;
  return r;
}

Report count_report(const ModelFile& file, unsigned k, bool smooth_only, std::uint64_t budget,
                    PointCountCache* cache) {
  const ModelSpec& m = file.model;
  Report r;
  r["command"] = "count";
  r["model"] = model_summary(m);
  r["q"] = FiniteField::get(m.p, k).order();
  r["k"] = k;
  r["smooth_only"] = smooth_only;
  if (cache) {
    bool hit = false;
    r["points"] = cache->get_or_compute(m, k, smooth_only, budget, &hit);
    r["cache"] = hit ? "hit" : "miss";
    return r;
  }
  EnumerationStats stats;
  r["points"] = count_points(m, k, smooth_only, budget, &stats);
  if (!smooth_only) r["singular"] = stats.singular;
  if (stats.off_chart_present) r["off_chart_orbits_skipped"] = stats.off_chart;
  return r;
}

Report evaluate_report(const ModelFile& file, const EvaluateOptions& o) {
  const ModelSpec& m = file.model;
  require(!file.algebras.empty(), ErrorKind::Domain, "the model file declares no [algebra]");
  require(o.algebra < file.algebras.size(), ErrorKind::Domain, "algebra index out of range");
  const SymbolAlgebra& A = file.algebras[o.algebra];
  Report r;
  r["command"] = "evaluate";
  r["model"] = model_summary(m);
  switch (o.mode) {
    case EvalMode::Image: {
      const KummerTorsor T = residue(A, m);
      const EvalReport e = evaluation_image(A, m, o.k, o.budget);
      const TwistCount tc = count_twist_points(T, o.k, o.budget);
      r["mode"] = "image";
      r["algebra"] = A.str();
      r["residue"] = T.str();
      r["k"] = o.k;
      r["q"] = FiniteField::get(m.p, o.k).order();
      r["determinate_points"] = e.determinate;
      r["indeterminate_points"] = e.indeterminate;
      Report cls = Report::array();
      for (const auto& [c, s] : e.classes) {
        Report x;
        x["class"] = c.str();
        x["points"] = s.count;
        x["first"] = s.first.str();
        cls.push_back(x);
      }
      r["classes"] = cls;
      r["image"] = class_list(e.image());
      r["constant"] = e.constant();
      r["torsor_points"] = tc.torsor_points;
      break;
    }
    case EvalMode::Prolific: {
      r["mode"] = "prolific";
      Report algs = Report::array();
      for (const auto& B : file.algebras) algs.push_back(B.str());
      r["algebras"] = algs;
      r["k"] = o.k;
      r["q"] = FiniteField::get(m.p, o.k).order();
      const auto image = joint_image(file.algebras, m, o.k, o.budget);
      std::uint64_t full = 1;
      for (const auto& B : file.algebras) full *= B.n;
      r["joint_image_size"] = image.size();
      r["group_order"] = full;
      r["prolific"] = prolific_check(file.algebras, m, o.k, o.budget);
      break;
    }
    case EvalMode::ZeroCycles: {
      r["mode"] = "zero-cycles";
      r["algebra"] = A.str();
      r["max_degree"] = o.k;
      const auto img = zero_cycle_image(A, m, o.k, o.budget);
      r["image"] = class_list({img.begin(), img.end()});
      break;
    }
    case EvalMode::Constancy: {
      r["mode"] = "constancy";
      r["algebra"] = A.str();
      r["max_degree"] = o.k;
      const ConstancyReport c = is_constant_with_trivial_tau(A, m, o.k, o.budget);
      r["verdict"] = to_string(c.verdict);
      if (c.witness.nonconstant) {
        r["witness_degree"] = c.witness.degree;
        r["witness"] = {c.witness.first.str() + " -> " + c.witness.first_class.str(),
                        c.witness.second.str() + " -> " + c.witness.second_class.str()};
      }
      break;
    }
  }
  return r;
}

Report bound_report(std::int64_t g, std::int64_t N, const std::vector<BigInt>& qs) {
  const BoundReport b = size_bound(g, N);
  Report r;
  r["command"] = "bound";
  r["g"] = g;
  r["N"] = N;
  r["g_prime"] = b.g_prime;
  r["vacuous"] = b.vacuous;
  r["threshold"] = b.threshold.str();
  r["threshold_decimal"] = b.threshold.decimal(6);
  r["integer_threshold"] = b.integer_threshold.str();
  Report checks = Report::array();
  for (const auto& q : qs) {
    Report c;
    c["q"] = q.str();
    c["above_bound"] = b.satisfied_by(q);
    c["hasse_weil_point_genus_g"] = hasse_weil_has_point(q, g);
    checks.push_back(c);
  }
  if (!qs.empty()) r["checks"] = checks;
  return r;
}

Report quartic_threshold_report(const BigInt& p, std::int64_t br_order_bound) {
  const QuarticThresholdReport q = quartic_threshold_check(p, br_order_bound);
  Report r;
  r["command"] = "bound";
  r["quartic_p"] = q.p.str();
  r["br_order_bound"] = q.br_order_bound;
  r["g_prime"] = q.computed.g_prime;
  r["computed_threshold"] = q.computed.threshold.str();
  r["computed_threshold_decimal"] = q.computed.threshold.decimal(6);
  r["computed_integer_threshold"] = q.computed.integer_threshold.str();
  r["published_threshold"] = q.published_threshold.str();
  r["difference_ceiling"] = q.difference_ceiling.str();
  r["passes_published"] = q.passes;
  r["passes_computed"] = q.passes_computed;
  return r;
}

Report verdict_report(const VerdictReport& v) {
  Report r;
  r["command"] = "verdict";
  r["family"] = v.family;
  if (!v.candidate_primes.empty()) r["candidate_primes"] = v.candidate_primes;
  if (v.prime) r["prime"] = *v.prime;
  if (v.assumed_br_order) r["ASSUMED_br_order_bound"] = *v.assumed_br_order;
  Report cs = Report::array();
  for (const auto& c : v.conditions) {
    Report x;
    x["condition"] = c.name;
    x["holds"] = c.holds;
    x["basis"] = c.basis;
    if (!c.note.empty()) x["note"] = c.note;
    cs.push_back(x);
  }
  r["conditions"] = cs;
  if (v.direct_evaluation) r["direct_evaluation"] = *v.direct_evaluation;
  r["verdict"] = to_string(v.verdict);
  if (!v.notes.empty()) r["notes"] = v.notes;
  return r;
}

}  // namespace brauer
