#pragma once

// Symbol algebras on the generic fibre, their residues as Kummer torsors
// t^n = g over the smooth locus of the special fibre, and fibre classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/model.hpp"
#include "brauer/poly.hpp"

namespace brauer {

/// The cyclic algebra (a, f) of order n, f = f_num / f_den a ratio of forms of
/// equal weighted degree. `alternatives` lists multipliers h = h_num / h_den
/// (forms of equal degree); the residue may also be represented by g * h^n,
/// which is how points in the indeterminacy locus of g are handled.
struct SymbolAlgebra {
  std::uint64_t n = 2;
  BigInt a_num = 1, a_den = 1;
  IntPoly f_num, f_den;
  std::vector<std::pair<IntPoly, IntPoly>> alternatives;

  static SymbolAlgebra make(std::uint64_t n, BigInt a_num, BigInt a_den, IntPoly f_num, IntPoly f_den,
                            std::vector<std::pair<IntPoly, IntPoly>> alternatives = {});
  std::string str() const;
};

/// A representative c * num / den of the residue function, over F_p.
struct ResidueRepresentative {
  FqPoly num, den;
};

class KummerTorsor {
 public:
  KummerTorsor(std::uint64_t n, ModelSpec base, FqElem constant, std::vector<ResidueRepresentative> reps,
               QZClass twist = {});

  std::uint64_t n() const { return n_; }
  const ModelSpec& base() const { return base_; }
  /// Constant factor c in F_p^x.
  const FqElem& constant() const { return constant_; }
  /// Primary representative first, then the registered alternatives.
  const std::vector<ResidueRepresentative>& representatives() const { return reps_; }
  const QZClass& twist_class() const { return twist_; }
  /// True when g is a constant function (num = den = 1).
  bool is_constant() const;

  /// "T^2 = (3*X0^2 + 16*X1^2 + 9*X2^2)/X0^2", with the twist appended when nonzero.
  std::string str() const;

 private:
  std::uint64_t n_;
  ModelSpec base_;
  FqElem constant_;
  std::vector<ResidueRepresentative> reps_;
  QZClass twist_;
};

/// Residue of a symbol algebra along the special fibre (tame symbol):
/// g = (-1)^{v(a)v(f)} a^{v(f)} / f^{v(a)} reduced mod p, with exponents
/// normalised into [0, n) using n-th powers: g = c * (f_num/f_den)^e with
/// e = -v(a) mod n. Requires n | p - 1.
KummerTorsor residue(const SymbolAlgebra& algebra, const ModelSpec& model);

/// Adds a constant class (order dividing n) to the twist.
KummerTorsor twist(const KummerTorsor& torsor, const QZClass& c);

/// Evaluates fibre classes of one torsor at points over a fixed F_{p^k}.
class FibreClassifier {
 public:
  FibreClassifier(const KummerTorsor& torsor, unsigned k);

  /// Class at the point, or nullopt when every representative is indeterminate there.
  std::optional<QZClass> try_classify(const std::vector<FqElem>& coords) const;
  /// Throws IndeterminateAtPoint.
  QZClass classify(const FibrePoint& point) const;

 private:
  struct Compiled {
    CompiledPoly num, den;
  };
  const KummerTorsor* torsor_;
  const FiniteField* field_;
  unsigned k_;
  std::uint64_t constant_;
  std::vector<Compiled> reps_;
  mutable std::vector<std::uint64_t> buf_;
};

/// Character of g at a smooth point of degree k, plus k times the twist.
QZClass fibre_class(const KummerTorsor& torsor, const FibrePoint& point);

struct TwistCount {
  std::uint64_t torsor_points = 0;       // n * zero_class_points
  std::uint64_t zero_class_points = 0;   // smooth determinate base points with class 0
  std::uint64_t determinate_points = 0;  // smooth base points where some representative is determinate
  std::uint64_t indeterminate_points = 0;
};

/// F_{p^k}-points of the torsor over determinate smooth points of the fibre.
TwistCount count_twist_points(const KummerTorsor& torsor, unsigned k, std::uint64_t budget = kDefaultBudget);

struct NonconstancyWitness {
  bool nonconstant = false;
  unsigned degree = 0;
  FibrePoint first, second;
  QZClass first_class, second_class;
};

/// Looks for two smooth points of the same degree k <= max_degree with
/// different fibre classes. `nonconstant == false` means inconclusive.
NonconstancyWitness nonconstancy_witness(const KummerTorsor& torsor, unsigned max_degree,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace brauer
