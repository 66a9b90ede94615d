#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scg/perm.hpp"

namespace scg {

/// An ordered tuple of involutions of S_degree together with the label of the
/// first generator (0 for (rho_0..rho_{r-1}), -1 for augmented tuples).
struct GeneratorTuple {
  int degree = 0;
  int label_offset = 0;
  std::vector<Permutation> gens;

  int rank() const { return static_cast<int>(gens.size()); }
  int label(int i) const { return label_offset + i; }

  bool operator==(const GeneratorTuple&) const = default;
};

/// Witness for a string-property failure: either a bad generator (i == j,
/// not a non-identity involution) or a non-adjacent pair that fails to commute.
struct SpWitness {
  int i = 0;
  int j = 0;
};

struct StringCheck {
  bool ok = false;
  std::optional<SpWitness> witness;
};

/// String property: all generators are non-identity involutions and
/// (rho_i rho_j)^2 = 1 whenever |i - j| >= 2.
StringCheck is_string(const GeneratorTuple& t);

using SchlafliType = std::vector<std::uint64_t>;

/// {p_1,...,p_{r-1}} with p_i = order(rho_{i-1} rho_i). Requires the string
/// property (throws std::invalid_argument otherwise).
SchlafliType schlafli(const GeneratorTuple& t);

/// Generator sequence reversed; the result is 0-based regardless of input offset.
GeneratorTuple dual(const GeneratorTuple& t);

/// Ordered restriction of the generators to `keep` (0-based positions).
GeneratorTuple subtuple(const GeneratorTuple& t, std::span<const int> keep);
GeneratorTuple subtuple(const GeneratorTuple& t, std::initializer_list<int> keep);

/// group order == degree! (the natural action on `degree` points is all of S_n).
bool generates_full_symmetric(const GeneratorTuple& t);

/// Details of an intersection-property failure: the positions (relative to the
/// checked tuple) forming the subtuple whose facet intersection came out wrong,
/// with the two orders. `found` may be a partial count (> expected) when the
/// walk aborted early.
struct IpFailure {
  std::vector<int> sub_indices;
  std::uint64_t found = 0;
  std::uint64_t expected = 0;
};

struct CheckReport {
  bool string_ok = false;
  std::optional<SpWitness> sp_witness;
  bool ip_ok = false;
  std::optional<IpFailure> ip_witness;
  std::uint64_t group_order = 0;
  bool is_full_symmetric = false;
};

/// Memo table for intersection-property results of facet subtuples, keyed by
/// the exact subtuple. Sharded so parallel enumeration workers can share it;
/// inserts are idempotent because the cached value is a pure function of the
/// key. Bounded: past max_entries new results are recomputed instead of stored.
class IpCache {
 public:
  struct Entry {
    bool ok = false;
    IpFailure failure;  // meaningful when !ok
  };

  explicit IpCache(std::size_t max_entries = 2'000'000)
      : shard_cap_(max_entries / kShards + 1) {}

  std::optional<Entry> lookup(const std::string& key) const;
  void store(const std::string& key, const Entry& e);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, Entry> map;
  };
  std::size_t shard_cap_;
  mutable std::array<Shard, kShards> shards_;
};

/// Full string C-group check: string property, then the intersection property
/// by the facet recursion (both facets recursively, plus
/// |G_0 cap G_{r-1}| = |G_{0,r-1}| with the walk abort target set to that order).
/// Rank <= 2 bases: rank 2 needs two distinct involutions, rank <= 1 is
/// trivially fine once the string check passed.
/// Throws limit_error when an intersection walk would exceed `limit` - the
/// answer is unknown, never guessed.
CheckReport is_string_c_group(const GeneratorTuple& t,
                              std::uint64_t intersection_limit = kDefaultIntersectionLimit,
                              IpCache* cache = nullptr);

/// The intersection property alone, assuming the string property already
/// holds. Lean entry point for enumeration loops that have checked everything
/// else themselves.
bool intersection_property(std::span<const Permutation> gens, int degree,
                           std::uint64_t intersection_limit = kDefaultIntersectionLimit,
                           IpCache* cache = nullptr);

/// Multiply tau onto generator k only. tau must be an involution commuting
/// with every generator and must not lie in <gens> (membership-tested);
/// violations throw std::invalid_argument. Degrees may differ: both sides are
/// extended to the larger point set.
GeneratorTuple sesqui_extension(const GeneratorTuple& t, int k, const Permutation& tau);

/// Stable byte key of a tuple (degree, rank and raw images) used for memo tables.
std::string tuple_key(std::span<const Permutation> gens, int degree);

}  // namespace scg
