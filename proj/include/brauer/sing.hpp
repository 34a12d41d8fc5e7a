#pragma once

// Du Val (ADE) classification of isolated surface singularities and the
// Brauer-group table for singular del Pezzo reductions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/model.hpp"
#include "brauer/poly.hpp"

namespace brauer {

struct AdeType {
  char family = 'A';  // 'A', 'D' or 'E'
  int index = 1;

  /// Throws DomainError unless the label names A_n (n>=1), D_n (n>=4) or E_6/7/8.
  static AdeType make(char family, int index);
  static AdeType parse(const std::string& label);

  std::string label() const { return std::string(1, family) + std::to_string(index); }
  bool operator==(const AdeType&) const = default;
  auto operator<=>(const AdeType&) const = default;
};

/// Classifies the singularity at the origin of a local equation in three
/// variables over F_q, q = p^k with p >= 7.
AdeType classify_ade(const FqPoly& local_equation);

/// Corank of the Hessian of f at the origin.
std::size_t hessian_corank(const FqPoly& f);

struct ClassifiedPoint {
  FibrePoint point;
  AdeType type;
  std::uint64_t milnor = 0;
};

struct SingularityType {
  std::vector<ClassifiedPoint> points;
  bool complete = false;  // singular-point search certified complete

  bool is_smooth() const { return points.empty(); }
  /// Canonical label, e.g. "2A1+A3"; empty for a smooth fibre.
  std::string label() const;
  /// Canonical label of a multiset of ADE types.
  static std::string label_of(std::vector<AdeType> types);
  /// Canonicalises a user-supplied label such as "A3+2A1" -> "2A1+A3".
  static std::string canonical_label(const std::string& text);
};

/// Finds and classifies every singular point of a surface hypersurface fibre
/// over F_{p^k}, k <= max_extension.
SingularityType singularity_type(const ModelSpec& model, unsigned max_extension = 2,
                                 std::uint64_t budget = kDefaultBudget);

/// A finite abelian group by its invariant factors (each dividing the next);
/// no factors means the trivial group.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  /// Product of cyclic groups of the given orders, brought to invariant-factor form.
  static GroupDescriptor from_cyclic_orders(const std::vector<std::int64_t>& orders);
  /// Parses "1" (trivial) or comma-separated cyclic orders such as "2,2".
  static GroupDescriptor parse(const std::string& text);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const;
  bool is_trivial() const { return factors_.empty(); }
  /// "0", "Z/5", "(Z/5)^2", "Z/2 x Z/4".
  std::string str() const;
  bool operator==(const GroupDescriptor&) const = default;

 private:
  std::vector<std::int64_t> factors_;
};

struct BrauerTableEntry {
  int degree = 0;
  std::string type;  // canonical label or "*"
  GroupDescriptor br_bar;
  GroupDescriptor h1;
  std::optional<GroupDescriptor> br_nr;  // nullopt: extension not resolved
};

/// Rows `degree | type | br_bar | h1 | br_nr` ('#' comments; '*' wildcard type;
/// '?' for an unresolved br_nr).
class BrauerTable {
 public:
  static BrauerTable parse(const std::string& text);
  /// The table compiled into the library.
  static const BrauerTable& builtin();

  /// Exact row, else the wildcard row for the degree (singular fibres only);
  /// throws TableMiss otherwise.
  const BrauerTableEntry& lookup(int degree, const std::string& type_label) const;
  const std::vector<BrauerTableEntry>& rows() const { return rows_; }

 private:
  std::vector<BrauerTableEntry> rows_;
};

}  // namespace brauer
