#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scg/sggi.hpp"

namespace scg {

using Edge = std::pair<int, int>;

/// The 2-cycles {a,b} of rho_1 with both points fixed by rho_2 - the 1-edges
/// not adjacent to any 2-edge. Empty when rho_1 is itself a transposition
/// (splitting it would leave an identity generator). Preconditions: rank 3,
/// string property, generates S_n, n >= 5; throws std::invalid_argument.
std::vector<Edge> candidate_edges(const GeneratorTuple& t);

/// Split rho_1 at the candidate edge: (rho_{-1}, rho_0, rho_1*(a,b)^{-1}, rho_2)
/// with rho_{-1} = (a,b) and label offset -1. The string property holds by
/// construction. Throws when the edge is not a candidate.
GeneratorTuple rat_augment(const GeneratorTuple& t, Edge edge);

struct OrbitImprimitivity {
  std::vector<int> orbit;  // a Gamma_{-1}-orbit containing > 1 size-3 Gamma_{-1,2}-orbit
  bool imprimitive = false;
  std::optional<BlockSystem> witness;  // a proper system when imprimitive
};

/// Evaluation of the rank-augmentation hypotheses for one candidate edge.
struct HypothesisReport {
  Edge candidate_edge;
  bool rho1_not_transposition = false;
  bool orbit_bound_ok = false;  // all Gamma_{-1,2}-orbits of size <= 3
  int case_orbit_size = 0;      // size of the Gamma_2-orbit containing the edge; 4/5/6 or 0=none
  std::optional<bool> parity_ok;         // case 5 only: rho_0, rho_1, rho_2 all even
  std::optional<bool> imprimitivity_ok;  // cases 4 and 5; vacuously true with no qualifying orbit
  std::vector<OrbitImprimitivity> orbit_checks;
  bool theorem_applies = false;
};

HypothesisReport check_hypotheses(const GeneratorTuple& t, Edge edge);

struct AugmentResult {
  Edge edge;
  HypothesisReport report;
  GeneratorTuple augmented;
  std::optional<bool> verified;       // intersection property of the augmented tuple
  std::optional<CheckReport> check;   // full report when verified
};

/// One entry per candidate edge. With verify set, the augmented tuple's
/// intersection property is decided regardless of theorem_applies so that the
/// theorem-predicted and actually-valid sets can be compared.
std::vector<AugmentResult> augment_all(const GeneratorTuple& t, bool verify,
                                       std::uint64_t intersection_limit = kDefaultIntersectionLimit,
                                       IpCache* cache = nullptr);

}  // namespace scg
