// Shared test fixtures: the six-individual worked example and random
// filtration generators.
#pragma once

#include <cmath>
#include <random>
#include <string>

#include "hyperbar/filtration.hpp"

namespace fixtures {

inline double log_ratio(double num, double den) { return std::log(num) - std::log(den); }

// Grades of the six-individual example: meeting counts AB=4, DF=3, CD=2,
// CF=2, AC=1, BC=1, ABC=3, DEF=2 with max count 4.
inline hyperbar::Filtration worked_filtration() {
  using hyperbar::Grade;
  hyperbar::Filtration f({"A", "B", "C", "D", "E", "F"});
  f.set_grade({0, 1}, Grade::at(log_ratio(4, 4)));        // AB
  f.set_grade({3, 5}, Grade::at(log_ratio(4, 3)));        // DF
  f.set_grade({2, 3}, Grade::at(log_ratio(4, 2)));        // CD
  f.set_grade({2, 5}, Grade::at(log_ratio(4, 2)));        // CF
  f.set_grade({0, 2}, Grade::at(log_ratio(4, 1)));        // AC
  f.set_grade({1, 2}, Grade::at(log_ratio(4, 1)));        // BC
  f.set_grade({0, 1, 2}, Grade::at(log_ratio(4, 3)));     // ABC
  f.set_grade({3, 4, 5}, Grade::at(log_ratio(4, 2)));     // DEF
  return f;
}

// One record per drawn edge per tick of the worked example's interaction
// sequence, timestamps at 20-second steps.
inline std::string worked_contact_stream() {
  const char* ticks[9] = {
      "A B,B C,A C,D E,E F,D F",  // t1
      "A B,B C,A C,D F",          // t2
      "A B,C D",                  // t3
      "A C,D F",                  // t4
      "B C,D E,E F,D F",          // t5
      "A B,B C,A C,D F",          // t6
      "A B,C D",                  // t7
      "A B,C F",                  // t8
      "A B,C F",                  // t9
  };
  std::string out = "# six-individual worked example\n";
  for (int k = 0; k < 9; ++k) {
    std::string tick = ticks[k];
    std::size_t start = 0;
    while (start < tick.size()) {
      std::size_t comma = tick.find(',', start);
      std::string pair = tick.substr(start, comma == std::string::npos ? comma : comma - start);
      out += std::to_string(20 * (k + 1)) + ' ' + pair + '\n';
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

// Random hypergraph filtration: |V| <= 6, hyperedges of size <= 3, grades
// from a small pool including infinity. Singletons stay at the default 0
// unless graded_singletons is set.
inline hyperbar::Filtration random_filtration(std::mt19937& rng, bool graded_singletons = false) {
  using hyperbar::Grade;
  using hyperbar::Hyperedge;
  std::uniform_int_distribution<std::size_t> vertex_count(2, 6);
  const std::size_t n = vertex_count(rng);
  std::vector<std::string> roster;
  for (std::size_t v = 0; v < n; ++v) roster.push_back(std::string(1, char('a' + v)));
  hyperbar::Filtration f(std::move(roster));

  std::uniform_int_distribution<int> grade_pool(0, 4);  // 4 plays infinity
  std::bernoulli_distribution keep(0.4);
  auto roll_grade = [&]() -> Grade {
    int g = grade_pool(rng);
    return g == 4 ? Grade::inf() : Grade::at(static_cast<double>(g));
  };
  for (std::size_t size = 2; size <= 3 && size <= n; ++size) {
    const std::size_t total = hyperbar::binomial(n, size);
    for (std::size_t r = 0; r < total; ++r)
      if (keep(rng)) f.set_grade(hyperbar::subset_unrank(r, n, size), roll_grade());
  }
  if (graded_singletons) {
    std::bernoulli_distribution regrade(0.3);
    for (std::uint32_t v = 0; v < n; ++v)
      if (regrade(rng)) f.set_grade(Hyperedge{v}, roll_grade());
  }
  return f;
}

}  // namespace fixtures
