#include "scg/rrt.hpp"

namespace scg {

RrtApplicability rrt_applicable(const GeneratorTuple& t) {
  if (t.rank() < 4) throw std::invalid_argument("rrt_applicable: rank must be >= 4");
  if (!is_string(t).ok) throw std::invalid_argument("rrt_applicable: not a string tuple");
  for (int i = 0; i + 1 < t.rank(); ++i) {
    if (element_order(compose(t.gens[i], t.gens[i + 1])) <= 2)
      return {false, "adjacent generators " + std::to_string(i) + "," + std::to_string(i + 1) +
                         " commute"};
  }
  std::uint64_t p3 = element_order(compose(t.gens[2], t.gens[3]));
  if (p3 % 2 == 0)
    return {false, "order of rho_2 rho_3 is " + std::to_string(p3) + ", not odd"};
  return {true, ""};
}

GeneratorTuple rrt_reduce(const GeneratorTuple& t) {
  RrtApplicability a = rrt_applicable(t);
  if (!a.applicable) throw std::invalid_argument("rrt_reduce: " + a.reason);
  GeneratorTuple r;
  r.degree = t.degree;
  r.label_offset = 0;
  r.gens.push_back(t.gens[1]);
  r.gens.push_back(compose(t.gens[0], t.gens[2]));
  for (int i = 3; i < t.rank(); ++i) r.gens.push_back(t.gens[i]);
  return r;
}

namespace {

// Merge assuming gens[0] is a transposition: (sigma_1, sigma_0 sigma_2, sigma_3).
GeneratorTuple merge_front(const GeneratorTuple& t) {
  GeneratorTuple r;
  r.degree = t.degree;
  r.label_offset = 0;
  r.gens = {t.gens[1], compose(t.gens[0], t.gens[2]), t.gens[3]};
  return r;
}

bool merged_is_valid(const GeneratorTuple& merged, std::uint64_t limit, IpCache* cache,
                     CheckReport* out) {
  CheckReport report = is_string_c_group(merged, limit, cache);
  bool valid = report.string_ok && report.ip_ok && report.is_full_symmetric;
  if (out) *out = std::move(report);
  return valid;
}

}  // namespace

MergeOutcome inverse_merge(const GeneratorTuple& t, std::uint64_t intersection_limit,
                           IpCache* cache) {
  if (t.rank() != 4) throw std::invalid_argument("inverse_merge: rank must be 4");
  if (!is_string(t).ok) throw std::invalid_argument("inverse_merge: not a string tuple");
  MergeOutcome out;
  if (t.gens.front().is_transposition()) {
    out.merged = merge_front(t);
    out.via_dual = false;
  } else if (t.gens.back().is_transposition()) {
    out.merged = merge_front(dual(t));
    out.via_dual = true;
  } else {
    throw std::invalid_argument("inverse_merge: neither end generator is a transposition");
  }
  out.valid = merged_is_valid(out.merged, intersection_limit, cache, &out.check);
  return out;
}

bool merge_validates_either_end(const GeneratorTuple& t, std::uint64_t intersection_limit,
                                IpCache* cache) {
  if (t.rank() != 4 || !is_string(t).ok) return false;
  if (t.gens.front().is_transposition() &&
      merged_is_valid(merge_front(t), intersection_limit, cache, nullptr))
    return true;
  if (t.gens.back().is_transposition() &&
      merged_is_valid(merge_front(dual(t)), intersection_limit, cache, nullptr))
    return true;
  return false;
}

}  // namespace scg
