#pragma once

// INI-style model files:
//
//   [model]     label = ..., dp_degree = 1
//   [ambient]   vars = x, y, z, w      weights = 1, 1, 2, 3
//   [equation]  expr = w^2 - z^3 - ...       (repeatable)
//   [arith]     p = 11
//   [algebra]   n = 2, a = 17, f_num = ..., f_den = X0^2, alt = X0/X1   (repeatable)

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "brauer/model.hpp"
#include "brauer/torsor.hpp"

namespace brauer {

struct ModelFile {
  ModelSpec model;
  std::optional<int> dp_degree;
  std::vector<SymbolAlgebra> algebras;
};

ModelFile parse_model_file(const std::string& text);
ModelFile load_model_file(const std::filesystem::path& path);

/// "num/den" or "num" split at the top-level '/', each side parsed as a polynomial.
std::pair<IntPoly, IntPoly> parse_ratio(const std::string& text, const std::vector<Variable>& vars);
/// "a" or "a/b" as integers.
std::pair<BigInt, BigInt> parse_rational(const std::string& text);

}  // namespace brauer
