#include "scg/rat.hpp"

#include <algorithm>

namespace scg {

namespace {

Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

}  // namespace

std::vector<Edge> candidate_edges(const GeneratorTuple& t) {
  if (t.rank() != 3) throw std::invalid_argument("candidate_edges: rank must be 3");
  if (!is_string(t).ok) throw std::invalid_argument("candidate_edges: not a string tuple");
  if (t.degree < 5) throw std::invalid_argument("candidate_edges: degree must be >= 5");
  if (!generates_full_symmetric(t))
    throw std::invalid_argument("candidate_edges: tuple does not generate the full S_n");

  const Permutation& rho1 = t.gens[1];
  const Permutation& rho2 = t.gens[2];
  auto cyc = rho1.cycles();
  if (cyc.size() < 2) return {};  // splitting a transposition would leave the identity
  std::vector<Edge> out;
  for (const auto& c : cyc)
    if (rho2(c[0]) == c[0] && rho2(c[1]) == c[1]) out.push_back(normalized({c[0], c[1]}));
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorTuple rat_augment(const GeneratorTuple& t, Edge edge) {
  edge = normalized(edge);
  auto cands = candidate_edges(t);
  if (std::find(cands.begin(), cands.end(), edge) == cands.end())
    throw std::invalid_argument("rat_augment: {" + std::to_string(edge.first) + "," +
                                std::to_string(edge.second) + "} is not a candidate edge");
  Permutation split = Permutation::from_cycles(t.degree, {{edge.first, edge.second}});
  GeneratorTuple aug;
  aug.degree = t.degree;
  aug.label_offset = -1;
  aug.gens = {split, t.gens[0], compose(t.gens[1], split), t.gens[2]};
  return aug;
}

HypothesisReport check_hypotheses(const GeneratorTuple& t, Edge edge) {
  GeneratorTuple aug = rat_augment(t, edge);
  edge = normalized(edge);

  HypothesisReport rep;
  rep.candidate_edge = edge;
  rep.rho1_not_transposition = !t.gens[1].is_transposition();

  // Gamma_{-1,2} = <rho_0, rho_1> of the augmented tuple.
  std::vector<Permutation> g_m12 = {aug.gens[1], aug.gens[2]};
  auto m12_orbits = orbits(g_m12, aug.degree);
  rep.orbit_bound_ok = std::all_of(m12_orbits.begin(), m12_orbits.end(),
                                   [](const auto& o) { return o.size() <= 3; });

  // Gamma_2 = <rho_{-1}, rho_0, rho_1>: the case is the size of its orbit
  // containing the split pair.
  std::vector<Permutation> g_2 = {aug.gens[0], aug.gens[1], aug.gens[2]};
  std::size_t case_size = orbit_of(g_2, aug.degree, edge.first).size();
  rep.case_orbit_size = (case_size >= 4 && case_size <= 6) ? static_cast<int>(case_size) : 0;

  if (rep.case_orbit_size == 5) {
    rep.parity_ok = parity(aug.gens[1]) == Parity::Even &&
                    parity(aug.gens[2]) == Parity::Even &&
                    parity(aug.gens[3]) == Parity::Even;
  }

  if (rep.case_orbit_size == 4 || rep.case_orbit_size == 5) {
    // Gamma_{-1} = <rho_0, rho_1, rho_2> must act imprimitively on each of its
    // orbits containing more than one size-3 Gamma_{-1,2}-orbit.
    std::vector<Permutation> g_m1 = {aug.gens[1], aug.gens[2], aug.gens[3]};
    bool all_ok = true;
    for (const auto& orbit : orbits(g_m1, aug.degree)) {
      int triplets = 0;
      for (const auto& sub : m12_orbits)
        if (sub.size() == 3 && std::binary_search(orbit.begin(), orbit.end(), sub.front()))
          ++triplets;
      if (triplets <= 1) continue;
      PrimitivityResult pr = is_primitive_on(g_m1, orbit);
      OrbitImprimitivity oi;
      oi.orbit = orbit;
      oi.imprimitive = !pr.primitive;
      oi.witness = std::move(pr.witness);
      all_ok = all_ok && oi.imprimitive;
      rep.orbit_checks.push_back(std::move(oi));
    }
    rep.imprimitivity_ok = all_ok;  // vacuously true when no orbit qualifies
  }

  bool case_ok = false;
  switch (rep.case_orbit_size) {
    case 4: case_ok = *rep.imprimitivity_ok; break;
    case 5: case_ok = *rep.parity_ok && *rep.imprimitivity_ok; break;
    case 6: case_ok = true; break;
    default: case_ok = false; break;
  }
  rep.theorem_applies = rep.rho1_not_transposition && rep.orbit_bound_ok && case_ok;
  return rep;
}

std::vector<AugmentResult> augment_all(const GeneratorTuple& t, bool verify,
                                       std::uint64_t intersection_limit, IpCache* cache) {
  std::vector<AugmentResult> out;
  for (Edge e : candidate_edges(t)) {
    AugmentResult r;
    r.edge = e;
    r.report = check_hypotheses(t, e);
    r.augmented = rat_augment(t, e);
    if (verify) {
      CheckReport check = is_string_c_group(r.augmented, intersection_limit, cache);
      r.verified = check.string_ok && check.ip_ok;
      r.check = std::move(check);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace scg
