#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scg {

// Hard cap on the number of points. The library targets the degrees of
// symmetric-group representations it was built for (n <= 13) plus headroom
// for extended-support constructions; permutations are fixed-size PODs so
// that group closures, chains and memo keys stay allocation-free.
inline constexpr int kMaxDegree = 16;

/// Thrown when a computation would exceed a caller-supplied resource limit.
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A permutation of {1..n}. Points are 1-based throughout.
///
/// Composition is left-to-right everywhere in this library:
/// compose(p, q) maps x to q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity on {1..degree}.
  explicit Permutation(int degree);

  /// Build from a 1-based image table; validates that it is a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  /// Build from disjoint cycles, e.g. from_cycles(9, {{2,3},{6,9},{7,8}}).
  static Permutation from_cycles(int degree,
                                 std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return degree_; }

  /// Image of a point (1-based).
  int operator()(int point) const { return img_[point - 1]; }

  Permutation inverse() const;

  bool is_identity() const;
  /// True iff p*p = id (the identity counts; callers test non-identity separately).
  bool is_involution() const;
  /// True iff the permutation is a single 2-cycle.
  bool is_transposition() const;

  /// Smallest moved point, or 0 if the permutation is the identity.
  int smallest_moved_point() const;

  /// Copy acting on a larger point set, fixing the new points.
  Permutation extended(int new_degree) const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;

  /// "(2,3)(6,9)(7,8)", or "()" for the identity.
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::uint8_t degree_ = 0;
  // img_[i] = image of point i+1; slots past degree_ hold identity padding so
  // that comparison and hashing can look at the whole array.
  std::array<std::uint8_t, kMaxDegree> img_{};
};

/// Left-to-right product: result maps x to q(p(x)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Least m >= 1 with p^m = id (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };
Parity parity(const Permutation& p);

/// pq = qp, tested pointwise without allocating.
bool commute(const Permutation& p, const Permutation& q);

/// x^s = s^{-1} x s: maps s(a) to s(x(a)).
Permutation conjugate(const Permutation& x, const Permutation& s);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::uint64_t factorial(int n);

/// Orbits of <gens> on {1..degree}, sorted internally and by smallest element.
/// Empty generating set yields singletons.
std::vector<std::vector<int>> orbits(std::span<const Permutation> gens, int degree);

/// The single orbit containing `point`, sorted.
std::vector<int> orbit_of(std::span<const Permutation> gens, int degree, int point);

/// Base-and-transversal structure for a permutation group (Schreier-Sims).
/// Bases are chosen deterministically: each new base point is the smallest
/// point moved by the generator that created its level.
class StabilizerChain {
 public:
  static StabilizerChain build(std::span<const Permutation> gens, int degree);

  int degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  const std::vector<int>& base() const { return base_; }

  /// Visit every group element exactly once, in a deterministic order.
  /// Return false from the visitor to stop; returns false iff stopped early.
  template <typename F>
  bool for_each_element(F&& f) const {
    if (levels_.empty()) return f(Permutation(degree_));
    return walk(static_cast<int>(levels_.size()) - 1, Permutation(degree_), f);
  }

 private:
  struct PendingPair {
    std::uint8_t orbit_idx;  // position in this level's orbit
    std::uint8_t gen_level;  // level whose gens list holds the generator
    std::uint16_t gen_idx;
  };

  struct Level {
    int base = 0;
    // Residues dropped exactly here. The generator set acting at level i is
    // the union over levels j >= i (those all fix the earlier base points).
    std::vector<Permutation> gens;
    std::vector<int> orbit;                          // discovery order
    std::vector<Permutation> transversal;            // parallel to orbit
    std::array<std::int8_t, kMaxDegree + 1> slot{};  // point -> orbit index, -1 if absent
    std::vector<PendingPair> pending;                // Schreier pairs not yet examined
  };

  template <typename F>
  bool walk(int level, const Permutation& acc, F&& f) const {
    if (level < 0) return f(acc);
    const Level& lv = levels_[level];
    for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
      if (!walk(level - 1, compose(acc, lv.transversal[oi]), f)) return false;
    }
    return true;
  }

  void insert_generator(const Permutation& g);
  void create_level(int base);
  void add_gen(std::size_t level, const Permutation& h);
  void add_point(std::size_t level, int point, const Permutation& rep);
  void process_pending();
  // Returns the residue after sifting from `from_level` and the level index
  // where sifting stopped (levels_.size() if it ran through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level) const;

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

std::uint64_t group_order(std::span<const Permutation> gens, int degree);

inline constexpr std::uint64_t kDefaultIntersectionLimit = 10'000'000;

/// Exact |<a> cap <b>|, computed by walking every element of the smaller group
/// through its transversal decomposition and membership-testing it in the
/// larger group's chain. Refuses (limit_error) when even the smaller group
/// exceeds `limit`. If `abort_above` is given, the walk stops as soon as the
/// count exceeds it and the partial count (> *abort_above) is returned.
std::uint64_t intersection_order(std::span<const Permutation> a,
                                 std::span<const Permutation> b, int degree,
                                 std::uint64_t limit = kDefaultIntersectionLimit,
                                 std::optional<std::uint64_t> abort_above = std::nullopt);

/// A complete block system of an orbit under some generators.
struct BlockSystem {
  std::vector<int> orbit;                 // sorted
  std::vector<std::vector<int>> blocks;   // each sorted, ordered by smallest element
  bool nontrivial() const {
    return blocks.size() > 1 && !blocks.empty() && blocks.front().size() > 1;
  }
};

/// Smallest block of imprimitivity containing {a, b} for <gens> acting
/// transitively on `orbit` (Atkinson's refinement). Returns the whole orbit
/// when {a, b} generates the trivial system.
std::vector<int> minimal_block(std::span<const Permutation> gens, std::span<const int> orbit,
                               int a, int b);

/// Spread a block to the full system it generates on `orbit`.
BlockSystem block_system_from(std::span<const Permutation> gens, std::span<const int> orbit,
                              std::span<const int> block);

struct PrimitivityResult {
  bool primitive = false;
  std::optional<BlockSystem> witness;  // a proper system when imprimitive
};

/// Primitivity of the (transitive) action of <gens> on `orbit`.
/// Throws std::invalid_argument when the action is not transitive.
PrimitivityResult is_primitive_on(std::span<const Permutation> gens, std::span<const int> orbit);

}  // namespace scg
