#pragma once

#include <string>
#include <vector>

#include "brauer/model_file.hpp"

namespace brauer::test {

inline std::string source_path(const std::string& rel) { return std::string(BRAUER_SOURCE_DIR) + "/" + rel; }

inline ModelFile load_model(const std::string& name) { return load_model_file(source_path("models/" + name + ".model")); }

inline std::vector<FqElem> elems(const FiniteField& F, std::initializer_list<std::int64_t> xs) {
  std::vector<FqElem> out;
  for (auto x : xs) out.push_back(FqElem::from_int(F, x));
  return out;
}

/// All abelian groups of order n as invariant-factor lists d1 | d2 | ... .
inline void abelian_groups(std::int64_t n, std::vector<std::int64_t>& prefix,
                           std::vector<std::vector<std::int64_t>>& out) {
  if (n == 1) {
    out.push_back(prefix);
    return;
  }
  const std::int64_t step = prefix.empty() ? 1 : prefix.back();
  for (std::int64_t d = step; d <= n; d += step) {
    if (d == 1 || n % d != 0) continue;
    const std::int64_t rest = n / d;
    if (rest != 1 && rest % d != 0) continue;
    prefix.push_back(d);
    abelian_groups(rest, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> abelian_groups(std::int64_t n) {
  std::vector<std::int64_t> prefix;
  std::vector<std::vector<std::int64_t>> out;
  abelian_groups(n, prefix, out);
  return out;
}

}  // namespace brauer::test
