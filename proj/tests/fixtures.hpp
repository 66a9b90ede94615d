#pragma once

// The three explicit counterexample representations (degrees 9, 10, 13) and
// their augmented forms, built from disjoint cycles.

#include "scg/sggi.hpp"

namespace fixtures {

using scg::GeneratorTuple;
using scg::Permutation;

inline GeneratorTuple s9() {
  GeneratorTuple t;
  t.degree = 9;
  t.label_offset = 0;
  t.gens = {
      Permutation::from_cycles(9, {{2, 3}, {6, 9}, {7, 8}}),
      Permutation::from_cycles(9, {{1, 2}, {3, 4}, {5, 6}}),
      Permutation::from_cycles(9, {{4, 5}, {6, 7}, {8, 9}}),
  };
  return t;
}

inline GeneratorTuple s9_augmented() {
  GeneratorTuple t;
  t.degree = 9;
  t.label_offset = -1;
  t.gens = {
      Permutation::from_cycles(9, {{1, 2}}),
      Permutation::from_cycles(9, {{2, 3}, {6, 9}, {7, 8}}),
      Permutation::from_cycles(9, {{3, 4}, {5, 6}}),
      Permutation::from_cycles(9, {{4, 5}, {6, 7}, {8, 9}}),
  };
  return t;
}

inline GeneratorTuple s10() {
  GeneratorTuple t;
  t.degree = 10;
  t.label_offset = 0;
  t.gens = {
      Permutation::from_cycles(10, {{1, 2}, {3, 4}, {9, 10}}),
      Permutation::from_cycles(10, {{2, 3}, {4, 5}, {6, 7}, {8, 9}}),
      Permutation::from_cycles(10, {{5, 6}, {7, 8}}),
  };
  return t;
}

inline GeneratorTuple s10_augmented() {
  GeneratorTuple t;
  t.degree = 10;
  t.label_offset = -1;
  t.gens = {
      Permutation::from_cycles(10, {{2, 3}}),
      Permutation::from_cycles(10, {{1, 2}, {3, 4}, {9, 10}}),
      Permutation::from_cycles(10, {{4, 5}, {6, 7}, {8, 9}}),
      Permutation::from_cycles(10, {{5, 6}, {7, 8}}),
  };
  return t;
}

inline GeneratorTuple s13() {
  GeneratorTuple t;
  t.degree = 13;
  t.label_offset = 0;
  t.gens = {
      Permutation::from_cycles(13, {{1, 2}, {3, 4}, {7, 9}, {8, 10}}),
      Permutation::from_cycles(13, {{2, 3}, {4, 5}, {6, 7}, {10, 11}, {12, 13}}),
      Permutation::from_cycles(13, {{5, 6}, {7, 8}, {9, 10}, {11, 12}}),
  };
  return t;
}

inline GeneratorTuple s13_augmented() {
  GeneratorTuple t;
  t.degree = 13;
  t.label_offset = -1;
  t.gens = {
      Permutation::from_cycles(13, {{2, 3}}),
      Permutation::from_cycles(13, {{1, 2}, {3, 4}, {7, 9}, {8, 10}}),
      Permutation::from_cycles(13, {{4, 5}, {6, 7}, {10, 11}, {12, 13}}),
      Permutation::from_cycles(13, {{5, 6}, {7, 8}, {9, 10}, {11, 12}}),
  };
  return t;
}

}  // namespace fixtures
