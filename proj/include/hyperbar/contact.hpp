// Raw timestamped contact records to a hypergraph filtration: tumbling
// windows, per-window maximal-clique group meetings, meeting-duration
// tallies under the maximal-group rule, and grades M - log(T_e).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "hyperbar/filtration.hpp"

namespace hyperbar {

struct ContactRecord {
  std::int64_t t = 0;  // seconds
  std::string i, j;    // vertex id tokens, i != j
};

// One record per data line `<t> <i> <j>` (extra trailing fields ignored);
// empty lines and lines starting with '#' are skipped. Throws ParseError
// with the offending line number.
std::vector<ContactRecord> parse_contacts(std::istream& in);

struct WindowGraph {
  std::size_t index = 0;
  // Sorted unique vertex-index pairs (a < b).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

struct ContactData {
  std::vector<std::string> roster;  // all ids seen, lexicographic
  std::vector<WindowGraph> windows;
};

// Window index = floor((t - t0) / window_len) with t0 the smallest timestamp;
// an edge is present iff some record for the pair falls in the window.
// Windows with no records are dropped.
ContactData window_graphs(const std::vector<ContactRecord>& records,
                          std::int64_t window_len = 20);

struct CliqueSet {
  std::vector<Hyperedge> cliques;
  bool truncated = false;  // some maximal clique exceeded the size cap
};

// Inclusion-maximal cliques of size >= 2. Cliques larger than size_cap are
// replaced by all their size_cap subsets (the maximal groups the cap can
// express) and the result is flagged as truncated.
CliqueSet maximal_cliques(const WindowGraph& g, std::size_t size_cap);

struct MeetingTally {
  std::vector<std::string> roster;
  std::map<Hyperedge, std::int64_t> counts;  // T_e >= 1, |e| >= 2
  std::int64_t max_count = 0;
  std::size_t size_cap = 0;
  bool truncated = false;
};

// Each window contributes +1 to every maximal clique it contains; subgroups
// of a meeting receive nothing from that window. Parallel across windows
// (HYPERBAR_THREADS caps the worker count); the merge is deterministic.
MeetingTally tally_meetings(const ContactData& data, std::size_t size_cap = 5);

// grade(e) = log(max T) - log(T_e), taken in the given base; singletons at
// grade 0; everything else infinite. The base only rescales grades (it can
// never reorder them), so barcode structure is base-invariant. Throws on an
// empty tally.
Filtration build_filtration(const MeetingTally& tally, double log_base = std::numbers::e);

// Worker-count cap from the HYPERBAR_THREADS environment variable, else the
// hardware concurrency.
std::size_t thread_cap();

}  // namespace hyperbar
