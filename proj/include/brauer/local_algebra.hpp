#pragma once

#include <cstdint>
#include <optional>

#include "brauer/poly.hpp"

namespace brauer {

/// dim F_q[x]/(J + m^cutoff) for the Jacobian ideal J of a local equation
/// centred at the origin.
std::uint64_t truncated_jacobian_quotient_dim(const FqPoly& f, unsigned cutoff);

struct MilnorResult {
  std::uint64_t mu = 0;
  unsigned cutoff = 0;  // cutoff degree at which the dimension was read off
};

/// Milnor number of an isolated singularity at the origin. The cutoff starts at
/// `start` and doubles up to `cap`; at each cutoff D the dimension is accepted
/// once it agrees at D, D+1 and D+2 (equality at D and D+1 already forces
/// m^D inside J). Returns nullopt when no cutoff up to `cap` stabilises.
std::optional<MilnorResult> milnor_number(const FqPoly& f, unsigned start = 8, unsigned cap = 32);

}  // namespace brauer
