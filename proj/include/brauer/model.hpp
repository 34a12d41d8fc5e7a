#pragma once

// Arithmetic models over Z_p: ambient (weighted) projective spaces, integer
// defining equations, and the special fibre's points over F_{p^k}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brauer/arith.hpp"
#include "brauer/poly.hpp"

namespace brauer {

/// P^n (all weights 1) or P(1,1,2,3).
class AmbientSpace {
 public:
  AmbientSpace() = default;
  AmbientSpace(std::vector<std::string> names, std::vector<int> weights);
  static AmbientSpace projective(std::vector<std::string> names);

  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  int dimension() const { return static_cast<int>(vars_.size()) - 1; }
  bool all_weights_one() const;
  std::vector<std::size_t> weight_one_indices() const;
  std::string label() const;

 private:
  std::vector<Variable> vars_;
};

struct ModelSpec {
  std::string label;
  AmbientSpace ambient;
  std::vector<IntPoly> equations;
  std::uint64_t p = 0;

  /// Validates homogeneity, primality of p, and that each equation is primitive at p.
  static ModelSpec make(std::string label, AmbientSpace ambient, std::vector<IntPoly> equations,
                        std::uint64_t p);

  std::vector<int> degrees() const;
  bool is_hypersurface() const { return equations.size() == 1; }
  int fibre_dimension() const { return ambient.dimension() - static_cast<int>(equations.size()); }
  /// Canonical text used for hashing and reports.
  std::string canonical_text() const;
  /// FNV-1a hash of canonical_text().
  std::uint64_t hash() const;
};

/// A point of the special fibre over F_{p^k}, normalised so the first nonzero
/// weight-1 coordinate is 1.
struct FibrePoint {
  std::vector<FqElem> coords;
  unsigned field_degree = 1;
  unsigned field_of_definition = 1;
  bool smooth = true;
  std::size_t chart = 0;  // index of the coordinate normalised to 1

  std::string str() const;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

struct EnumerationStats {
  std::uint64_t points = 0;        // points visited (after smooth filtering)
  std::uint64_t singular = 0;      // singular points encountered
  std::uint64_t evaluations = 0;   // equation evaluations performed
  std::uint64_t off_chart = 0;     // orbits with all weight-1 coordinates zero (skipped)
  bool off_chart_present = false;
  bool stopped_early = false;
};

/// Visitor returns false to stop the enumeration.
using PointVisitor = std::function<bool(const FibrePoint&)>;

/// Streams the F_{p^k}-points of the special fibre in a deterministic order.
/// Points off every weight-1 chart are counted in the stats and skipped.
EnumerationStats for_each_point(const ModelSpec& model, unsigned k, bool smooth_only,
                                const PointVisitor& visit, std::uint64_t budget = kDefaultBudget);

std::vector<FibrePoint> enumerate_points(const ModelSpec& model, unsigned k, bool smooth_only,
                                         std::uint64_t budget = kDefaultBudget);

/// Exact count of the points on the weight-1 charts; does not materialise points.
std::uint64_t count_points(const ModelSpec& model, unsigned k, bool smooth_only,
                           std::uint64_t budget = kDefaultBudget,
                           EnumerationStats* stats = nullptr);

/// Normalises homogeneous coordinates; throws UnsupportedChart when every
/// weight-1 coordinate vanishes.
FibrePoint normalize_point(const AmbientSpace& ambient, std::vector<FqElem> coords);
bool same_point(const AmbientSpace& ambient, const std::vector<FqElem>& a, const std::vector<FqElem>& b);

/// Whether the (normalised) point satisfies all reduced equations.
bool lies_on_fibre(const ModelSpec& model, const FibrePoint& point);
/// Jacobian criterion on the point's chart.
bool is_smooth_point(const ModelSpec& model, const FibrePoint& point);

struct SingularPointSearch {
  std::vector<FibrePoint> points;                  // one entry per geometric point found
  std::vector<std::uint64_t> count_by_degree;      // singular points over F_{p^k}, k = 1..max
  std::vector<std::uint64_t> milnor_numbers;       // per point, hypersurfaces only
  bool complete = false;                           // stabilisation certificate passed
};

/// All singular points of the special fibre defined over F_{p^k}, k <= max_extension.
/// Throws NonIsolated when the singular locus is visibly positive-dimensional.
SingularPointSearch find_singular_points(const ModelSpec& model, unsigned max_extension,
                                         std::uint64_t budget = kDefaultBudget);

/// Local equation of a hypersurface fibre at a point, in the affine coordinates
/// of the point's chart, shifted so the point is the origin.
FqPoly local_equation(const ModelSpec& model, const FibrePoint& point);

/// Whether the total space is regular at a fibre point: F(lift)/p is nonzero
/// mod p. Hypersurface models only.
bool regularity_check(const ModelSpec& model, const FibrePoint& point);
/// Same test with explicit lifts: one coefficient vector (entries mod p^2) per coordinate.
bool regularity_check_with_lift(const ModelSpec& model, const FibrePoint& point,
                                const std::vector<std::vector<std::uint64_t>>& lift);

/// Variables that occur in no equation mod p (the special fibre is a cone with
/// these as vertex directions).
std::vector<std::size_t> apex_variables(const ModelSpec& model);
/// The model obtained by deleting the apex variables (and the p-divisible terms
/// that mention them): its special fibre is the base of the cone.
ModelSpec cone_base(const ModelSpec& model);

/// Rejects fibres whose smooth locus cannot be certified geometrically
/// connected (ComponentError).
void require_connected_smooth_locus(const ModelSpec& model, std::uint64_t budget = kDefaultBudget);

}  // namespace brauer
