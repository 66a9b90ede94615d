#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scg/sggi.hpp"

namespace scg {

enum class DedupMode { Iso, IsoDual };

struct EnumConfig {
  int n = 5;
  int rank = 3;  // 3 or 4
  DedupMode dedup = DedupMode::IsoDual;
  int jobs = 1;  // 1 = serial reference driver; > 1 = OpenMP kernel
  std::uint64_t intersection_limit = kDefaultIntersectionLimit;
  bool include_s6_outer = true;  // fold the outer automorphism classes at n = 6

  std::ostream* progress = nullptr;    // progress lines for long runs
  std::ostream* checkpoint = nullptr;  // JSONL records appended as work items finish

  // Test hook: conjugate the class representatives seeding the search. The
  // final database must not depend on this.
  const Permutation* seed_conjugator = nullptr;
};

struct RepInfo {
  GeneratorTuple rep;
  SchlafliType schlafli_type;
  bool self_dual = false;  // the label-reversed graph is isomorphic to the graph
  // Rank-4 classes only. rrt_count counts the orientations of the duality
  // class (1 for self-dual classes, else up to 2) on which the rank-reduction
  // conditions hold and the reduced tuple verifies; the published table's RRT
  // column counts representations with duals listed separately, so a
  // non-self-dual class can contribute twice. merge_ok is per duality class:
  // the inverse merge from some transposition end yields a valid rank-3 rep.
  int rrt_count = 0;
  bool merge_ok = false;
};

/// Deduplicated representations keyed by combined canonical key. Ordered map:
/// iteration and serialization order are independent of the worker schedule.
struct RepDatabase {
  std::map<std::string, RepInfo> reps;
  std::size_t size() const { return reps.size(); }
};

/// All non-identity involutions of S_n in a fixed deterministic order.
std::vector<Permutation> all_involutions(int n);

/// One representative per involution class: k disjoint transpositions
/// (1,2)(3,4)...(2k-1,2k) for 1 <= k <= n/2.
std::vector<Permutation> involution_class_reps(int n);

/// Dedup key of a tuple: canonical CPR-graph key, folded with the
/// label-reversed graph under IsoDual, and with the S_6 outer-automorphism
/// images when requested at degree 6.
std::string combined_key(const GeneratorTuple& t, DedupMode mode, bool include_s6_outer);

/// Image of a degree-6 permutation under one fixed non-inner automorphism of
/// S_6, derived from the coset action on a transitive S_5 subgroup.
Permutation s6_outer_image(const Permutation& p);

std::string key_hex(const std::string& key);

RepDatabase enumerate_rank3(const EnumConfig& cfg);
RepDatabase enumerate_rank4(const EnumConfig& cfg);
RepDatabase enumerate_reps(const EnumConfig& cfg);  // dispatches on cfg.rank

struct Table1Row {
  int n = 0;
  std::uint64_t rank3 = 0;
  std::uint64_t rank4 = 0;
  std::uint64_t rrt = 0;
  std::uint64_t rat = 0;
};

struct Table1Result {
  std::vector<Table1Row> rows;
  std::vector<std::string> notes;  // e.g. which n = 6 dedup convention matched
};

/// Reproduce the published table: counts of rank-3/rank-4 representations up
/// to isomorphism and duality, with the rank-reduction and inverse-merge
/// columns. At n = 6 both dedup conventions (with and without the outer
/// automorphism) are computed and the one matching the published 2/4 row is
/// used; the choice is recorded in notes.
Table1Result table1(int n_from, int n_to, EnumConfig base);

}  // namespace scg
