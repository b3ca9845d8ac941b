#pragma once

#include <vector>

#include "lqshell/ideal.hpp"
#include "lqshell/monomial.hpp"

inline lqshell::Monomial mono(std::vector<lqshell::Exp> e) {
  return lqshell::Monomial(std::move(e));
}

inline lqshell::MonomialIdeal ideal_of(
    int nvars, std::vector<std::vector<lqshell::Exp>> rows) {
  std::vector<lqshell::Monomial> gens;
  gens.reserve(rows.size());
  for (auto& row : rows) gens.push_back(lqshell::Monomial(std::move(row)));
  return lqshell::MonomialIdeal::from_generators(nvars, std::move(gens));
}

// Running example used across the suites: P_{1,2,3}^2 cap P_{1,3,4}^2 in
// K[x1..x4]. Its six minimal generators are componentwise polymatroidal and
// small enough to check every claim by hand.
inline lqshell::MonomialIdeal fatpoint_example() {
  return ideal_of(4, {
                         {2, 0, 0, 0},  // x1^2
                         {1, 0, 1, 0},  // x1*x3
                         {0, 0, 2, 0},  // x3^2
                         {1, 1, 0, 1},  // x1*x2*x4
                         {0, 1, 1, 1},  // x2*x3*x4
                         {0, 2, 0, 2},  // x2^2*x4^2
                     });
}

// The expected linear-quotients order of fatpoint_example under the
// smallest-variable splitting rule.
inline std::vector<lqshell::Monomial> fatpoint_example_order() {
  return {mono({2, 0, 0, 0}), mono({1, 0, 1, 0}), mono({1, 1, 0, 1}),
          mono({0, 0, 2, 0}), mono({0, 1, 1, 1}), mono({0, 2, 0, 2})};
}

// Smallest equigenerated ideal without linear quotients.
inline lqshell::MonomialIdeal two_squares() {
  return ideal_of(2, {{2, 0}, {0, 2}});
}
