#include "scg/perm.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace scg {

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("degree must be in [0, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(degree));
}

}  // namespace

Permutation::Permutation(int degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < kMaxDegree; ++i) img_[i] = static_cast<std::uint8_t>(i + 1);
}

Permutation Permutation::from_images(std::span<const int> images) {
  check_degree(static_cast<int>(images.size()));
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxDegree + 1> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > p.degree() || seen[v])
      throw std::invalid_argument("image table is not a bijection of {1.." +
                                  std::to_string(p.degree()) + "}");
    seen[v] = true;
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  check_degree(degree);
  Permutation p(degree);
  std::array<bool, kMaxDegree + 1> used{};
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree || b < 1 || b > degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("cycles are not disjoint");
      used[a] = true;
      p.img_[a - 1] = static_cast<std::uint8_t>(b);
    }
  }
  return p;
}

Permutation Permutation::from_cycles(
    int degree, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> c;
  for (const auto& cyc : cycles) c.emplace_back(cyc);
  return from_cycles(degree, c);
}

Permutation Permutation::inverse() const {
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[img_[i] - 1] != i + 1) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < degree_; ++i)
    if (img_[i] != i + 1) ++moved;
  return moved == 2 && is_involution();
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[i] != i + 1) return i + 1;
  return 0;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree_) throw std::invalid_argument("extended: smaller degree");
  check_degree(new_degree);
  Permutation r(new_degree);
  for (int i = 0; i < degree_; ++i) r.img_[i] = img_[i];
  return r;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree + 1> seen{};
  for (int s = 1; s <= degree_; ++s) {
    if (seen[s] || img_[s - 1] == s) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = img_[x - 1]) {
      seen[x] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cs) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i] - 1];
  return r;
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t m = 1;
  for (const auto& cyc : p.cycles()) m = std::lcm<std::uint64_t>(m, cyc.size());
  return m;
}

Parity parity(const Permutation& p) {
  int odd_cycles = 0;
  for (const auto& cyc : p.cycles())
    if (cyc.size() % 2 == 0) ++odd_cycles;
  return (odd_cycles % 2) ? Parity::Odd : Parity::Even;
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) return false;
  for (int x = 1; x <= p.degree(); ++x)
    if (q(p(x)) != p(q(x))) return false;
  return true;
}

Permutation conjugate(const Permutation& x, const Permutation& s) {
  return compose(compose(s.inverse(), x), s);
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image bytes plus degree.
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint8_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) mix(static_cast<std::uint8_t>(p(x)));
  return h;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> gens, int degree) {
  check_degree(degree);
  std::array<int, kMaxDegree + 1> parent;
  for (int i = 0; i <= degree; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("orbits: degree mismatch");
    for (int x = 1; x <= degree; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::array<int, kMaxDegree + 1> index;
  index.fill(-1);
  for (int x = 1; x <= degree; ++x) {
    int r = find(x);
    if (index[r] < 0) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(x);
  }
  return out;  // roots visited in ascending order => sorted by minimum element
}

std::vector<int> orbit_of(std::span<const Permutation> gens, int degree, int point) {
  for (const auto& o : orbits(gens, degree))
    if (std::binary_search(o.begin(), o.end(), point)) return o;
  throw std::invalid_argument("orbit_of: point out of range");
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain StabilizerChain::build(std::span<const Permutation> gens, int degree) {
  check_degree(degree);
  StabilizerChain c;
  c.degree_ = degree;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("chain: degree mismatch");
    if (!g.is_identity()) c.insert_generator(g);
  }
  return c;
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int p = g(lv.base);
    if (lv.slot[p] < 0) return {g, i};
    g = compose(g, lv.transversal[lv.slot[p]].inverse());
  }
  return {g, levels_.size()};
}

void StabilizerChain::create_level(int base) {
  Level lv;
  lv.base = base;
  lv.slot.fill(-1);
  lv.slot[base] = 0;
  lv.orbit.push_back(base);
  lv.transversal.push_back(Permutation(degree_));
  levels_.push_back(std::move(lv));
  base_.push_back(base);
}

void StabilizerChain::add_gen(std::size_t level, const Permutation& h) {
  Level& lv = levels_[level];
  lv.gens.push_back(h);
  auto gi = static_cast<std::uint16_t>(lv.gens.size() - 1);
  // The new generator fixes every base point before `level`, so it acts at
  // every level i <= level: queue it against each existing orbit point there.
  for (std::size_t i = 0; i <= level; ++i)
    for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi)
      levels_[i].pending.push_back({static_cast<std::uint8_t>(oi),
                                    static_cast<std::uint8_t>(level), gi});
}

void StabilizerChain::add_point(std::size_t level, int point, const Permutation& rep) {
  Level& lv = levels_[level];
  lv.slot[point] = static_cast<std::int8_t>(lv.orbit.size());
  lv.orbit.push_back(point);
  lv.transversal.push_back(rep);
  auto oi = static_cast<std::uint8_t>(lv.orbit.size() - 1);
  for (std::size_t j = level; j < levels_.size(); ++j)
    for (std::size_t gi = 0; gi < levels_[j].gens.size(); ++gi)
      lv.pending.push_back({oi, static_cast<std::uint8_t>(j), static_cast<std::uint16_t>(gi)});
}

void StabilizerChain::insert_generator(const Permutation& g) {
  auto [residue, drop] = strip(g, 0);
  if (residue.is_identity()) return;
  if (drop == levels_.size()) create_level(residue.smallest_moved_point());
  add_gen(drop, residue);
  process_pending();
}

void StabilizerChain::process_pending() {
  // Deepest level first: when a pair at level i is examined, every deeper
  // level is already closed, so a residue that fails to sift genuinely
  // enlarges the deeper group and the loop terminates.
  while (true) {
    int i = -1;
    for (int j = static_cast<int>(levels_.size()) - 1; j >= 0; --j)
      if (!levels_[j].pending.empty()) {
        i = j;
        break;
      }
    if (i < 0) return;
    Level& lv = levels_[i];
    PendingPair pp = lv.pending.back();
    lv.pending.pop_back();
    const Permutation& s = levels_[pp.gen_level].gens[pp.gen_idx];
    int p = lv.orbit[pp.orbit_idx];
    int q = s(p);
    if (lv.slot[q] < 0) {
      add_point(i, q, compose(lv.transversal[pp.orbit_idx], s));
      continue;
    }
    Permutation schreier =
        compose(compose(lv.transversal[pp.orbit_idx], s), lv.transversal[lv.slot[q]].inverse());
    if (schreier.is_identity()) continue;
    auto [residue, drop] = strip(std::move(schreier), i + 1);
    if (residue.is_identity()) continue;
    if (drop == levels_.size()) create_level(residue.smallest_moved_point());
    add_gen(drop, residue);
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t o = 1;
  for (const auto& lv : levels_) o *= static_cast<std::uint64_t>(lv.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, drop] = strip(p, 0);
  return drop == levels_.size() && residue.is_identity();
}

std::uint64_t group_order(std::span<const Permutation> gens, int degree) {
  return StabilizerChain::build(gens, degree).order();
}

std::uint64_t intersection_order(std::span<const Permutation> a,
                                 std::span<const Permutation> b, int degree,
                                 std::uint64_t limit,
                                 std::optional<std::uint64_t> abort_above) {
  StabilizerChain ca = StabilizerChain::build(a, degree);
  StabilizerChain cb = StabilizerChain::build(b, degree);
  const StabilizerChain& small = ca.order() <= cb.order() ? ca : cb;
  const StabilizerChain& large = ca.order() <= cb.order() ? cb : ca;
  if (small.order() > limit)
    throw limit_error("intersection_order: smaller group has order " +
                      std::to_string(small.order()) + " > limit " + std::to_string(limit));
  std::uint64_t count = 0;
  small.for_each_element([&](const Permutation& g) {
    if (large.contains(g)) {
      ++count;
      if (abort_above && count > *abort_above) return false;
    }
    return true;
  });
  return count;
}

// ---------------------------------------------------------------------------
// Blocks

namespace {

void check_in_orbit(std::span<const int> orbit, int p, const char* what) {
  if (!std::binary_search(orbit.begin(), orbit.end(), p))
    throw std::invalid_argument(std::string(what) + ": point " + std::to_string(p) +
                                " outside the orbit");
}

}  // namespace

std::vector<int> minimal_block(std::span<const Permutation> gens, std::span<const int> orbit,
                               int a, int b) {
  check_in_orbit(orbit, a, "minimal_block");
  check_in_orbit(orbit, b, "minimal_block");
  if (a == b) throw std::invalid_argument("minimal_block: a == b");

  std::array<int, kMaxDegree + 1> parent;
  for (int i = 0; i < kMaxDegree + 1; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };

  std::vector<std::pair<int, int>> stack;
  unite(a, b);
  stack.emplace_back(a, b);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int gx = find(g(x)), gy = find(g(y));
      if (gx != gy && unite(gx, gy)) stack.emplace_back(gx, gy);
    }
  }

  int root = find(a);
  std::vector<int> block;
  for (int p : orbit)
    if (find(p) == root) block.push_back(p);
  return block;
}

BlockSystem block_system_from(std::span<const Permutation> gens, std::span<const int> orbit,
                              std::span<const int> block) {
  BlockSystem sys;
  sys.orbit.assign(orbit.begin(), orbit.end());
  std::sort(sys.orbit.begin(), sys.orbit.end());

  std::vector<std::vector<int>> blocks;
  std::vector<int> first(block.begin(), block.end());
  std::sort(first.begin(), first.end());
  blocks.push_back(first);
  for (std::size_t head = 0; head < blocks.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<int> img;
      img.reserve(blocks[head].size());
      for (int p : blocks[head]) img.push_back(g(p));
      std::sort(img.begin(), img.end());
      if (std::find(blocks.begin(), blocks.end(), img) == blocks.end())
        blocks.push_back(std::move(img));
    }
  }
  std::sort(blocks.begin(), blocks.end());
  sys.blocks = std::move(blocks);
  return sys;
}

PrimitivityResult is_primitive_on(std::span<const Permutation> gens,
                                  std::span<const int> orbit) {
  std::vector<int> sorted(orbit.begin(), orbit.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("is_primitive_on: empty orbit");
  if (sorted.size() == 1) return PrimitivityResult{true, std::nullopt};
  if (gens.empty() || orbit_of(gens, gens.front().degree(), sorted.front()) != sorted)
    throw std::invalid_argument("is_primitive_on: action is not transitive on the orbit");

  int a = sorted.front();
  for (int b : sorted) {
    if (b == a) continue;
    std::vector<int> block = minimal_block(gens, sorted, a, b);
    if (block.size() < sorted.size()) {
      PrimitivityResult r;
      r.primitive = false;
      r.witness = block_system_from(gens, sorted, block);
      return r;
    }
  }
  return PrimitivityResult{true, std::nullopt};
}

}  // namespace scg
