#pragma once

// Structured reports for the command-line tool. Keys keep insertion order, so
// both renderings are deterministic and suitable for golden files.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/cache.hpp"
#include "brauer/model_file.hpp"
#include "brauer/sing.hpp"
#include "brauer/verdict.hpp"

namespace brauer {

using Report = nlohmann::ordered_json;

/// Indented "key: value" text.
std::string render_text(const Report& report);
std::string render_json(const Report& report);

struct ClassifyOptions {
  unsigned max_extension = 2;
  std::uint64_t budget = kDefaultBudget;
};

/// Singular points, their ADE types, regularity of the total space there and
/// the Brauer-table row for the singularity type.
Report classify_report(const ModelFile& file, const ClassifyOptions& options = {},
                       const BrauerTable& table = BrauerTable::builtin());

Report count_report(const ModelFile& file, unsigned k, bool smooth_only, std::uint64_t budget = kDefaultBudget,
                    PointCountCache* cache = nullptr);

enum class EvalMode { Image, Prolific, ZeroCycles, Constancy };

struct EvaluateOptions {
  EvalMode mode = EvalMode::Image;
  std::size_t algebra = 0;  // image / zero-cycles / constancy use one algebra
  unsigned k = 1;           // field degree, or the maximal degree for zero-cycles and constancy
  std::uint64_t budget = kDefaultBudget;
};

Report evaluate_report(const ModelFile& file, const EvaluateOptions& options);

Report bound_report(std::int64_t g, std::int64_t N, const std::vector<BigInt>& qs);
Report quartic_threshold_report(const BigInt& p, std::int64_t br_order_bound);

Report verdict_report(const VerdictReport& verdict);

}  // namespace brauer
