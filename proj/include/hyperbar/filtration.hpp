// Filtration values and the hypergraph filtration: a total map from
// hyperedges to grades in [0, inf], with singletons defaulting to grade 0
// and absent hyperedges to infinity. Includes the canonical text format
// (`hyperedge,grade` CSV) shared by the whole toolchain.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperbar/hypergraph.hpp"

namespace hyperbar {

struct Grade {
  double value = 0.0;
  bool infinite = false;

  static Grade at(double v) { return Grade{v, false}; }
  static Grade inf() { return Grade{0.0, true}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const Grade& a, const Grade& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Grade& a, const Grade& b) {
    if (a.infinite != b.infinite) return !a.infinite;
    return !a.infinite && a.value < b.value;
  }
  friend bool operator<=(const Grade& a, const Grade& b) { return a < b || a == b; }
  friend bool operator>(const Grade& a, const Grade& b) { return b < a; }
  friend bool operator>=(const Grade& a, const Grade& b) { return b <= a; }

  // 9 significant digits, or "inf".
  std::string render() const;
  static Grade parse(const std::string& text);
};

class Filtration {
public:
  Filtration() = default;
  explicit Filtration(std::vector<std::string> roster) : roster_(std::move(roster)) {}

  const std::vector<std::string>& roster() const { return roster_; }

  void set_grade(Hyperedge e, Grade g);

  // Total lookup: stored grade, else 0 for singletons, else infinity.
  Grade grade(const Hyperedge& e) const;

  const std::map<Hyperedge, Grade>& explicit_grades() const { return grades_; }

  // Finite-grade hyperedges with exactly `size` members; singletons include
  // their default grade-0 entries. Lexicographic edge order.
  std::vector<std::pair<Hyperedge, Grade>> finite_edges_of_size(std::size_t size) const;

  // Sorted distinct finite grades over all tracked hyperedges.
  std::vector<Grade> critical_grades() const;

  // True iff every finite hyperedge's faces carry grades no larger than its own.
  bool is_simplicial() const;

  // Largest hyperedge size this filtration can speak for (ingest clique cap,
  // rips dimension cap); unset for generic files.
  std::optional<std::size_t> max_tracked_size;

  // Exact meeting-duration counts, present when built from contact data.
  std::map<Hyperedge, std::int64_t> meeting_counts;

  void write(std::ostream& out) const;
  static Filtration read(std::istream& in);

private:
  std::vector<std::string> roster_;
  std::map<Hyperedge, Grade> grades_;
};

// Errors from the text-format parsers, carrying a 1-based line number.
struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace hyperbar
