#pragma once

// Local invariants of symbol algebras at p-adic points, computed through the
// special fibre, together with image, constancy and surjectivity reports.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "brauer/torsor.hpp"

namespace brauer {

/// Legendre symbol (a/p) in {-1, 0, 1} by Euler's criterion.
int legendre_symbol(const BigInt& a, std::uint64_t p);

/// Quadratic Hilbert symbol (a, b)_p for nonzero rationals a = a_num/a_den,
/// b = b_num/b_den and an odd prime p.
int hilbert_symbol(const BigInt& a_num, const BigInt& a_den, const BigInt& b_num, const BigInt& b_den,
                   std::uint64_t p);
inline int hilbert_symbol(const BigInt& a, const BigInt& b, std::uint64_t p) { return hilbert_symbol(a, 1, b, 1, p); }

/// A Z_p-point of the model: primitive integer coordinates satisfying the
/// equations exactly (precision 0) or modulo p^precision (precision >= 2) with
/// smooth reduction, which certifies a genuine p-adic point nearby by Hensel's lemma.
struct PadicPoint {
  std::vector<BigInt> coords;
  unsigned precision = 0;

  static PadicPoint exact(const ModelSpec& model, std::vector<BigInt> coords);
  static PadicPoint approximate(const ModelSpec& model, std::vector<BigInt> coords, unsigned precision);

  /// The reduction mod p, normalised.
  FibrePoint reduction(const ModelSpec& model) const;
};

/// Lifts a smooth F_p-point of a hypersurface fibre to precision m by Newton
/// iteration, starting from the given integer lift (default: the residues).
PadicPoint hensel_lift(const ModelSpec& model, const FibrePoint& point, unsigned precision,
                       std::optional<std::vector<BigInt>> start = std::nullopt);

/// inv_p A(P), read off the residue torsor at the reduction of P.
QZClass evaluate_algebra(const SymbolAlgebra& algebra, const PadicPoint& point, const ModelSpec& model);

struct ClassSample {
  std::uint64_t count = 0;
  FibrePoint first;
};

struct EvalReport {
  unsigned k = 1;
  std::map<QZClass, ClassSample> classes;  // fibre class -> points with that class
  std::uint64_t determinate = 0;
  std::uint64_t indeterminate = 0;
  std::optional<FibrePoint> normalization_point;  // first determinate point in enumeration order
  QZClass normalization_class;
  bool stopped_early = false;

  std::vector<QZClass> image() const;
  bool constant() const { return classes.size() == 1; }
};

/// Fibre classes over all smooth F_{p^k}-points; this is the image of the
/// evaluation map on points with F_{p^k}-smooth reduction.
EvalReport evaluation_image(const SymbolAlgebra& algebra, const ModelSpec& model, unsigned k,
                            std::uint64_t budget = kDefaultBudget);

enum class Constancy { ConstantCertified, NonconstantWitness, Unknown };
std::string to_string(Constancy c);

struct ConstancyReport {
  Constancy verdict = Constancy::Unknown;
  NonconstancyWitness witness;
};

ConstancyReport is_constant_with_trivial_tau(const SymbolAlgebra& algebra, const ModelSpec& model,
                                             unsigned max_degree, std::uint64_t budget = kDefaultBudget);

using ClassTuple = std::vector<QZClass>;

/// Invariant tuples over smooth F_{p^k}-points determinate for every algebra.
/// Stops once the whole product group has been seen.
std::set<ClassTuple> joint_image(const std::vector<SymbolAlgebra>& algebras, const ModelSpec& model, unsigned k,
                                 std::uint64_t budget = kDefaultBudget);

/// Whether the difference tuples (inv A_i(P) - inv A_i(P0))_i exhaust prod (1/n_i)Z/Z.
bool prolific_check(const std::vector<SymbolAlgebra>& algebras, const ModelSpec& model, unsigned k,
                    std::uint64_t budget = kDefaultBudget);

/// Invariants of degree-0 zero-cycles supported on closed points of degree <= max_degree.
std::set<QZClass> zero_cycle_image(const SymbolAlgebra& algebra, const ModelSpec& model, unsigned max_degree,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace brauer
