#pragma once

#include <optional>
#include <string>

#include "scg/sggi.hpp"

namespace scg {

struct RrtApplicability {
  bool applicable = false;
  std::string reason;  // why not, empty when applicable
};

/// Rank reduction preconditions: every pair of adjacent generators fails to
/// commute (order(rho_i rho_{i+1}) > 2 for all i) and order(rho_2 rho_3) is
/// odd. Requires rank >= 4 and the string property (throws otherwise).
RrtApplicability rrt_applicable(const GeneratorTuple& t);

/// (rho_0,...,rho_{r-1}) -> (rho_1, rho_0 rho_2, rho_3, ..., rho_{r-1}).
/// Throws when rrt_applicable fails. The cited theorem guarantees the result
/// is a string C-group of the same group; callers re-verify when asked.
GeneratorTuple rrt_reduce(const GeneratorTuple& t);

struct MergeOutcome {
  GeneratorTuple merged;  // rank 3
  bool via_dual = false;  // first generator was not a transposition, last was
  bool valid = false;     // merged tuple is a string C-group rep of S_degree
  CheckReport check;
};

/// The rank-augmentation inverse: for a rank-4 tuple whose first generator is
/// a transposition, merge to (sigma_1, sigma_0 sigma_2, sigma_3); when only
/// the last generator is a transposition, the dual is merged instead and the
/// outcome marked via_dual. Throws std::invalid_argument when rank != 4, the
/// string property fails, or neither end generator is a transposition.
MergeOutcome inverse_merge(const GeneratorTuple& t,
                           std::uint64_t intersection_limit = kDefaultIntersectionLimit,
                           IpCache* cache = nullptr);

/// True when merging from either transposition end yields a valid rank-3
/// string C-group rep of S_degree. This is the predicate behind the table's
/// rank-augmentation column: a class is counted once no matter which end
/// merges. Returns false (without throwing) when neither end qualifies.
bool merge_validates_either_end(const GeneratorTuple& t,
                                std::uint64_t intersection_limit = kDefaultIntersectionLimit,
                                IpCache* cache = nullptr);

}  // namespace scg
