#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scg/perm.hpp"

using namespace scg;

TEST_CASE("composition is left-to-right") {
  Permutation id(3);
  Permutation p = Permutation::from_cycles(3, {{1, 2}});
  Permutation q = Permutation::from_cycles(3, {{2, 3}});
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);
  CHECK(compose(p, p) == id);

  // Pin the convention with the full image table of both candidate orders:
  // left-to-right sends 1 to q(p(1)) = q(2) = 3.
  Permutation lr = compose(p, q);
  CHECK(lr(1) == 3);
  CHECK(lr(3) == 2);
  CHECK(lr(2) == 1);
  for (int x = 1; x <= 3; ++x) {
    CHECK(lr(x) == q(p(x)));    // chosen convention
    Permutation rl = compose(q, p);
    CHECK(rl(x) == p(q(x)));    // the other order, for contrast
  }
}

TEST_CASE("element order and parity") {
  CHECK(element_order(Permutation(5)) == 1);
  CHECK(element_order(Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}})) == 6);
  CHECK(parity(Permutation(4)) == Parity::Even);
  CHECK(parity(Permutation::from_cycles(4, {{1, 2}})) == Parity::Odd);
  // In the augmented degree-10 example neither rho_0 nor rho_1 is even.
  CHECK(parity(fixtures::s10_augmented().gens[1]) == Parity::Odd);
  CHECK(parity(fixtures::s10_augmented().gens[2]) == Parity::Odd);
  // The unsplit middle generator, by contrast, has four 2-cycles.
  CHECK(parity(fixtures::s10().gens[1]) == Parity::Even);
}

TEST_CASE("orbits") {
  CHECK(orbits({}, 3) == std::vector<std::vector<int>>{{1}, {2}, {3}});

  auto t = fixtures::s9();
  std::vector<Permutation> g01 = {t.gens[0], t.gens[1]};
  CHECK(orbits(g01, 9) == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6, 9}, {7, 8}});

  auto a = fixtures::s9_augmented();
  std::vector<Permutation> split01 = {a.gens[1], a.gens[2]};
  CHECK(orbits(split01, 9) == std::vector<std::vector<int>>{{1}, {2, 3, 4}, {5, 6, 9}, {7, 8}});
}

TEST_CASE("stabilizer chain order and membership") {
  std::vector<Permutation> s3 = {Permutation::from_cycles(3, {{1, 2}}),
                                 Permutation::from_cycles(3, {{2, 3}})};
  CHECK(group_order(s3, 3) == 6);

  CHECK(group_order(fixtures::s9().gens, 9) == factorial(9));

  std::vector<Permutation> klein = {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                    Permutation::from_cycles(4, {{1, 3}, {2, 4}})};
  auto chain = StabilizerChain::build(klein, 4);
  CHECK(chain.order() == 4);
  CHECK(chain.contains(Permutation::from_cycles(4, {{1, 4}, {2, 3}})));
  CHECK_FALSE(chain.contains(Permutation::from_cycles(4, {{1, 2}})));

  // Frozen against the closure oracle.
  CHECK(oracle::closure_order(klein, 4) == 4);
}

TEST_CASE("chain traversal enumerates each element once") {
  std::vector<Permutation> s4 = {Permutation::from_cycles(4, {{1, 2}}),
                                 Permutation::from_cycles(4, {{2, 3}}),
                                 Permutation::from_cycles(4, {{3, 4}})};
  auto chain = StabilizerChain::build(s4, 4);
  std::set<Permutation> seen;
  chain.for_each_element([&](const Permutation& g) {
    CHECK(seen.insert(g).second);
    return true;
  });
  CHECK(seen.size() == 24);
  auto cl = oracle::closure(s4, 4);
  CHECK(std::vector<Permutation>(seen.begin(), seen.end()) == cl);
}

TEST_CASE("intersection order") {
  std::vector<Permutation> a = {Permutation::from_cycles(4, {{1, 2}})};
  CHECK(intersection_order(a, a, 4) == 2);
  std::vector<Permutation> b = {Permutation::from_cycles(4, {{3, 4}})};
  CHECK(intersection_order(a, b, 4) == 1);

  // The intersection walk refuses past the limit instead of guessing.
  std::vector<Permutation> s4 = {Permutation::from_cycles(4, {{1, 2}}),
                                 Permutation::from_cycles(4, {{2, 3}}),
                                 Permutation::from_cycles(4, {{3, 4}})};
  CHECK_THROWS_AS(intersection_order(s4, s4, 4, 10), limit_error);
}

TEST_CASE("early abort returns a count above the target") {
  std::vector<Permutation> s4 = {Permutation::from_cycles(4, {{1, 2}}),
                                 Permutation::from_cycles(4, {{2, 3}}),
                                 Permutation::from_cycles(4, {{3, 4}})};
  std::uint64_t count = intersection_order(s4, s4, 4, kDefaultIntersectionLimit, 5);
  CHECK(count > 5);
  CHECK(count <= 24);
}

TEST_CASE("Gamma_{-1} cap Gamma_2 of the augmented degree-10 example") {
  auto a = fixtures::s10_augmented();
  std::vector<Permutation> gm1 = {a.gens[1], a.gens[2], a.gens[3]};
  std::vector<Permutation> g2 = {a.gens[0], a.gens[1], a.gens[2]};
  std::vector<Permutation> gm12 = {a.gens[1], a.gens[2]};

  Permutation t12 = Permutation::from_cycles(10, {{1, 2}});
  CHECK(StabilizerChain::build(gm1, 10).contains(t12));
  CHECK(StabilizerChain::build(g2, 10).contains(t12));
  CHECK_FALSE(StabilizerChain::build(gm12, 10).contains(t12));

  std::uint64_t inter = intersection_order(gm1, g2, 10);
  std::uint64_t middle = group_order(gm12, 10);
  CHECK(inter > middle);

  // Exact value, frozen against the closure oracle (both groups are small
  // enough to materialize: Gamma_2 has order |S_5| x |<(6,7)(8,9),(9,10)...>|).
  auto ca = oracle::closure(g2, 10);
  std::uint64_t brute = 0;
  auto chain_m1 = StabilizerChain::build(gm1, 10);
  for (const auto& x : ca)
    if (chain_m1.contains(x)) ++brute;
  CHECK(inter == brute);
}

TEST_CASE("minimal blocks") {
  std::vector<Permutation> klein = {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                    Permutation::from_cycles(4, {{1, 3}, {2, 4}})};
  std::vector<int> orbit = {1, 2, 3, 4};
  CHECK(minimal_block(klein, orbit, 1, 2) == std::vector<int>{1, 2});
  CHECK(oracle::brute_is_block(oracle::closure(klein, 4), {1, 2}));

  std::vector<Permutation> s3 = {Permutation::from_cycles(3, {{1, 2}}),
                                 Permutation::from_cycles(3, {{2, 3}})};
  std::vector<int> orbit3 = {1, 2, 3};
  CHECK(minimal_block(s3, orbit3, 1, 2) == orbit3);
  CHECK(minimal_block(s3, orbit3, 1, 3) == orbit3);

  auto a = fixtures::s10_augmented();
  std::vector<Permutation> gm1 = {a.gens[1], a.gens[2], a.gens[3]};
  std::vector<int> big = {3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(minimal_block(gm1, big, 3, 10) == std::vector<int>{3, 10});

  CHECK_THROWS_AS(minimal_block(s3, orbit3, 1, 5), std::invalid_argument);
}

TEST_CASE("primitivity of the augmented examples") {
  {
    auto a = fixtures::s9_augmented();
    std::vector<Permutation> gm1 = {a.gens[1], a.gens[2], a.gens[3]};
    std::vector<int> orbit = {2, 3, 4, 5, 6, 7, 8, 9};
    auto r = is_primitive_on(gm1, orbit);
    CHECK(r.primitive);
    CHECK(group_order(gm1, 9) == factorial(8));  // Gamma_{-1} ~= S_8
  }
  {
    auto a = fixtures::s10_augmented();
    std::vector<Permutation> gm1 = {a.gens[1], a.gens[2], a.gens[3]};
    std::vector<int> orbit = {3, 4, 5, 6, 7, 8, 9, 10};
    auto r = is_primitive_on(gm1, orbit);
    REQUIRE_FALSE(r.primitive);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->blocks == std::vector<std::vector<int>>{{3, 10}, {4, 9}, {5, 8}, {6, 7}});
  }
  {
    auto a = fixtures::s13_augmented();
    std::vector<Permutation> gm1 = {a.gens[1], a.gens[2], a.gens[3]};
    std::vector<int> orbit = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    auto r = is_primitive_on(gm1, orbit);
    CHECK(r.primitive);
  }
  std::vector<Permutation> intrans = {Permutation::from_cycles(4, {{1, 2}})};
  std::vector<int> orbit = {1, 2, 3};
  CHECK_THROWS_AS(is_primitive_on(intrans, orbit), std::invalid_argument);
}

TEST_CASE("random permutation properties") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);  // degree <= 12
    auto p = oracle::random_permutation(n, rng);
    auto q = oracle::random_permutation(n, rng);
    CHECK(compose(p, p.inverse()) == Permutation(n));
    bool xorodd = (parity(p) == Parity::Odd) != (parity(q) == Parity::Odd);
    CHECK((parity(compose(p, q)) == Parity::Odd) == xorodd);
  }
}

TEST_CASE("chain order matches brute-force closure on random involution groups") {
  std::mt19937 rng(987654);
  int done = 0;
  while (done < 60) {
    int n = 4 + static_cast<int>(rng() % 5);  // degree <= 8
    int k = 1 + static_cast<int>(rng() % 4);  // <= 4 generators
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) gens.push_back(oracle::random_involution(n, rng));
    std::vector<Permutation> cl;
    try {
      cl = oracle::closure(gens, n, 5000);
    } catch (const std::runtime_error&) {
      continue;  // group too large for the oracle budget
    }
    CHECK(group_order(gens, n) == cl.size());
    ++done;
  }
}

TEST_CASE("intersection_order matches brute force") {
  std::mt19937 rng(424242);
  int done = 0;
  while (done < 40) {
    int n = 4 + static_cast<int>(rng() % 4);  // degree <= 7
    std::vector<Permutation> a = {oracle::random_involution(n, rng),
                                  oracle::random_involution(n, rng)};
    std::vector<Permutation> b = {oracle::random_involution(n, rng),
                                  oracle::random_involution(n, rng)};
    std::vector<Permutation> ca, cb;
    try {
      ca = oracle::closure(a, n, 5000);
      cb = oracle::closure(b, n, 5000);
    } catch (const std::runtime_error&) {
      continue;
    }
    CHECK(intersection_order(a, b, n) == oracle::intersect_sorted(ca, cb).size());
    ++done;
  }
}

TEST_CASE("block systems are generator-stable and minimal blocks are minimal") {
  std::mt19937 rng(13579);
  int done = 0;
  while (done < 60) {
    int n = 4 + static_cast<int>(rng() % 5);  // <= 8
    std::vector<Permutation> gens = {oracle::random_involution(n, rng),
                                     oracle::random_involution(n, rng),
                                     oracle::random_involution(n, rng)};
    for (const auto& orbit : orbits(gens, n)) {
      if (orbit.size() < 2) continue;
      int a = orbit[0];
      for (int b : orbit) {
        if (b == a) continue;
        auto block = minimal_block(gens, orbit, a, b);
        auto sys = block_system_from(gens, orbit, block);
        for (const auto& g : gens)
          for (const auto& blk : sys.blocks) {
            std::vector<int> img;
            for (int p : blk) img.push_back(g(p));
            std::sort(img.begin(), img.end());
            CHECK(std::find(sys.blocks.begin(), sys.blocks.end(), img) != sys.blocks.end());
          }
      }
      // Minimality against brute force over subsets, kept to small orbits so
      // the full element list stays enumerable.
      if (orbit.size() <= 6) {
        std::vector<Permutation> elements;
        try {
          elements = oracle::closure(gens, n, 2000);
        } catch (const std::runtime_error&) {
          continue;
        }
        int b = orbit[1];
        auto block = minimal_block(gens, orbit, a, b);
        for (unsigned mask = 0; mask < (1u << orbit.size()); ++mask) {
          std::vector<int> sub;
          for (std::size_t i = 0; i < orbit.size(); ++i)
            if (mask & (1u << i)) sub.push_back(orbit[i]);
          if (sub.size() >= block.size() || sub.size() < 2) continue;
          if (!std::binary_search(sub.begin(), sub.end(), a) ||
              !std::binary_search(sub.begin(), sub.end(), b))
            continue;
          CHECK_FALSE(oracle::brute_is_block(elements, sub));
        }
      }
    }
    ++done;
  }
}
