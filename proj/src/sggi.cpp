#include "scg/sggi.hpp"

#include <algorithm>
#include <cstdlib>

namespace scg {

StringCheck is_string(const GeneratorTuple& t) {
  for (int i = 0; i < t.rank(); ++i) {
    const Permutation& g = t.gens[i];
    if (g.degree() != t.degree || g.is_identity() || !g.is_involution())
      return {false, SpWitness{i, i}};
  }
  for (int i = 0; i < t.rank(); ++i)
    for (int j = i + 2; j < t.rank(); ++j)
      if (!commute(t.gens[i], t.gens[j])) return {false, SpWitness{i, j}};
  return {true, std::nullopt};
}

SchlafliType schlafli(const GeneratorTuple& t) {
  StringCheck sc = is_string(t);
  if (!sc.ok)
    throw std::invalid_argument("schlafli: string property fails at pair (" +
                                std::to_string(sc.witness->i) + "," +
                                std::to_string(sc.witness->j) + ")");
  SchlafliType entries;
  for (int i = 1; i < t.rank(); ++i)
    entries.push_back(element_order(compose(t.gens[i - 1], t.gens[i])));
  return entries;
}

GeneratorTuple dual(const GeneratorTuple& t) {
  GeneratorTuple d;
  d.degree = t.degree;
  d.label_offset = 0;
  d.gens.assign(t.gens.rbegin(), t.gens.rend());
  return d;
}

GeneratorTuple subtuple(const GeneratorTuple& t, std::span<const int> keep) {
  if (keep.empty()) throw std::invalid_argument("subtuple: empty index set");
  GeneratorTuple s;
  s.degree = t.degree;
  s.label_offset = t.label_offset + keep.front();
  for (int i : keep) {
    if (i < 0 || i >= t.rank()) throw std::invalid_argument("subtuple: index out of range");
    s.gens.push_back(t.gens[i]);
  }
  return s;
}

GeneratorTuple subtuple(const GeneratorTuple& t, std::initializer_list<int> keep) {
  return subtuple(t, std::span<const int>(keep.begin(), keep.size()));
}

bool generates_full_symmetric(const GeneratorTuple& t) {
  return group_order(t.gens, t.degree) == factorial(t.degree);
}

std::string tuple_key(std::span<const Permutation> gens, int degree) {
  std::string key;
  key.reserve(2 + gens.size() * static_cast<std::size_t>(degree));
  key.push_back(static_cast<char>(degree));
  key.push_back(static_cast<char>(gens.size()));
  for (const auto& g : gens)
    for (int x = 1; x <= degree; ++x) key.push_back(static_cast<char>(g(x)));
  return key;
}

std::optional<IpCache::Entry> IpCache::lookup(const std::string& key) const {
  Shard& sh = shards_[std::hash<std::string>{}(key) % kShards];
  std::lock_guard<std::mutex> lock(sh.mutex);
  auto it = sh.map.find(key);
  if (it == sh.map.end()) return std::nullopt;
  return it->second;
}

void IpCache::store(const std::string& key, const Entry& e) {
  Shard& sh = shards_[std::hash<std::string>{}(key) % kShards];
  std::lock_guard<std::mutex> lock(sh.mutex);
  if (sh.map.size() < shard_cap_) sh.map.emplace(key, e);
}

std::size_t IpCache::size() const {
  std::size_t n = 0;
  for (const auto& sh : shards_) {
    std::lock_guard<std::mutex> lock(sh.mutex);
    n += sh.map.size();
  }
  return n;
}

namespace {

// Intersection-property recursion (facets plus one intersection per level).
// Assumes the string property, so every generator is a non-identity involution.
// Failure positions are relative to `gens`. Only facet subtuples are memoized
// (`top` distinguishes the outermost call): those repeat across enumeration
// candidates, whole tuples do not.
std::optional<IpFailure> ip_check(const std::vector<Permutation>& gens, int degree,
                                  std::uint64_t limit, IpCache* cache, bool top) {
  const int r = static_cast<int>(gens.size());
  if (r <= 1) return std::nullopt;
  if (r == 2) {
    if (gens[0] != gens[1]) return std::nullopt;
    return IpFailure{{0, 1}, 2, 1};  // <rho_0> cap <rho_1> = <rho_0> but should be trivial
  }

  std::string key;
  const bool use_cache = cache && !top;
  if (use_cache) {
    key = tuple_key(gens, degree);
    if (auto hit = cache->lookup(key))
      return hit->ok ? std::nullopt : std::optional<IpFailure>(hit->failure);
  }

  auto finish = [&](std::optional<IpFailure> result) {
    if (use_cache)
      cache->store(key, result ? IpCache::Entry{false, *result} : IpCache::Entry{true, {}});
    return result;
  };

  std::vector<Permutation> facet_last(gens.begin(), gens.end() - 1);   // G_{r-1}
  std::vector<Permutation> facet_first(gens.begin() + 1, gens.end());  // G_0
  std::vector<Permutation> middle(gens.begin() + 1, gens.end() - 1);   // G_{0,r-1}

  if (auto fail = ip_check(facet_last, degree, limit, cache, false)) return finish(fail);
  if (auto fail = ip_check(facet_first, degree, limit, cache, false)) {
    for (int& i : fail->sub_indices) ++i;
    return finish(fail);
  }

  std::uint64_t expected = group_order(middle, degree);
  std::uint64_t found = intersection_order(facet_first, facet_last, degree, limit, expected);
  if (found == expected) return finish(std::nullopt);

  IpFailure fail;
  fail.sub_indices.resize(r);
  for (int i = 0; i < r; ++i) fail.sub_indices[i] = i;
  fail.found = found;
  fail.expected = expected;
  return finish(fail);
}

}  // namespace

bool intersection_property(std::span<const Permutation> gens, int degree,
                           std::uint64_t intersection_limit, IpCache* cache) {
  std::vector<Permutation> g(gens.begin(), gens.end());
  return !ip_check(g, degree, intersection_limit, cache, true).has_value();
}

CheckReport is_string_c_group(const GeneratorTuple& t, std::uint64_t intersection_limit,
                              IpCache* cache) {
  CheckReport report;
  StringCheck sc = is_string(t);
  report.string_ok = sc.ok;
  report.sp_witness = sc.witness;
  report.group_order = group_order(t.gens, t.degree);
  report.is_full_symmetric = report.group_order == factorial(t.degree);
  if (!report.string_ok) {
    report.ip_ok = false;
    return report;
  }
  auto fail = ip_check(t.gens, t.degree, intersection_limit, cache, true);
  report.ip_ok = !fail.has_value();
  report.ip_witness = std::move(fail);
  return report;
}

GeneratorTuple sesqui_extension(const GeneratorTuple& t, int k, const Permutation& tau) {
  if (k < 0 || k >= t.rank()) throw std::invalid_argument("sesqui_extension: bad index");
  if (tau.is_identity() || !tau.is_involution())
    throw std::invalid_argument("sesqui_extension: tau is not a non-identity involution");

  const int degree = std::max(t.degree, tau.degree());
  GeneratorTuple ext;
  ext.degree = degree;
  ext.label_offset = t.label_offset;
  for (const auto& g : t.gens) ext.gens.push_back(g.extended(degree));
  Permutation tau_ext = tau.extended(degree);

  for (int i = 0; i < ext.rank(); ++i)
    if (!commute(ext.gens[i], tau_ext))
      throw std::invalid_argument("sesqui_extension: tau does not commute with generator " +
                                  std::to_string(i));
  if (StabilizerChain::build(ext.gens, degree).contains(tau_ext))
    throw std::invalid_argument("sesqui_extension: tau lies in the group");

  ext.gens[k] = compose(ext.gens[k], tau_ext);
  return ext;
}

}  // namespace scg
