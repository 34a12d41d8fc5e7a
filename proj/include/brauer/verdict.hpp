#pragma once

// Checks the hypotheses of the cone criterion (a prime of bad reduction where
// the model is regular, the special fibre is a cone over a smooth curve, p does
// not divide |Br X / Br K| and the residue field is large enough) for several
// families of surfaces, and reports whether the Brauer–Manin obstruction
// vanishes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/model_file.hpp"

namespace brauer {

enum class Verdict { NoObstructionViaProlific, LocalObstructionWitness, Inconclusive };
std::string to_string(Verdict v);

struct ConditionCheck {
  std::string name;
  bool holds = false;
  std::string basis;  // "computed", "family rule", "assumed", "literature bound"
  std::string note;
};

struct VerdictRequest {
  std::string family;                 // diagonal-quartic | diagonal-cubic | cone-cubic | custom
  std::vector<BigInt> coefficients;   // diagonal families: a0..a3
  std::string cone_f, cone_g;         // cone-cubic: f(X0,X1,X2) and g(X0,X1,X2,X3)
  std::optional<std::uint64_t> prime;
  std::optional<std::int64_t> assume_br_order;
  std::optional<ModelFile> model;     // enables the direct evaluation path
  bool trivial_elsewhere = false;     // caller certifies zero invariants at every other place
  std::uint64_t budget = kDefaultBudget;
};

struct VerdictReport {
  std::string family;
  std::optional<std::uint64_t> prime;
  std::vector<std::uint64_t> candidate_primes;
  std::vector<ConditionCheck> conditions;
  std::optional<std::string> direct_evaluation;
  std::optional<std::int64_t> assumed_br_order;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

VerdictReport run_verdict(const VerdictRequest& request);

}  // namespace brauer
