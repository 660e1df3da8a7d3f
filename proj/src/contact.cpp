#include "hyperbar/contact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <istream>
#include <set>
#include <sstream>
#include <thread>

namespace hyperbar {

std::vector<ContactRecord> parse_contacts(std::istream& in) {
  std::vector<ContactRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string t_str, i_str, j_str;
    if (!(fields >> t_str)) continue;  // blank line
    if (t_str[0] == '#') continue;
    if (!(fields >> i_str >> j_str))
      throw ParseError(lineno, "expected '<t> <i> <j>'");
    ContactRecord rec;
    try {
      std::size_t pos = 0;
      rec.t = std::stoll(t_str, &pos);
      if (pos != t_str.size()) throw std::invalid_argument(t_str);
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad timestamp '" + t_str + "'");
    }
    if (rec.t < 0) throw ParseError(lineno, "negative timestamp");
    if (i_str == j_str) throw ParseError(lineno, "self-contact '" + i_str + "'");
    for (const std::string& id : {i_str, j_str})
      if (id.find('|') != std::string::npos || id.find(',') != std::string::npos)
        throw ParseError(lineno, "id '" + id + "' contains a reserved character");
    rec.i = std::move(i_str);
    rec.j = std::move(j_str);
    records.push_back(std::move(rec));
  }
  return records;
}

ContactData window_graphs(const std::vector<ContactRecord>& records,
                          std::int64_t window_len) {
  if (window_len <= 0) throw std::invalid_argument("window length must be positive");
  ContactData data;
  if (records.empty()) return data;

  std::set<std::string> ids;
  std::int64_t t0 = records.front().t;
  for (const ContactRecord& r : records) {
    ids.insert(r.i);
    ids.insert(r.j);
    t0 = std::min(t0, r.t);
  }
  data.roster.assign(ids.begin(), ids.end());
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < data.roster.size(); ++i) index[data.roster[i]] = i;

  std::map<std::size_t, std::set<std::pair<std::uint32_t, std::uint32_t>>> buckets;
  for (const ContactRecord& r : records) {
    std::uint32_t a = index.at(r.i);
    std::uint32_t b = index.at(r.j);
    if (a > b) std::swap(a, b);
    buckets[static_cast<std::size_t>((r.t - t0) / window_len)].insert({a, b});
  }
  for (auto& [w, edges] : buckets) {
    WindowGraph g;
    g.index = w;
    g.edges.assign(edges.begin(), edges.end());
    data.windows.push_back(std::move(g));
  }
  return data;
}

namespace {

struct AdjacencyView {
  std::vector<std::uint32_t> vertices;              // participating, ascending
  std::map<std::uint32_t, std::set<std::uint32_t>> neighbors;
};

AdjacencyView adjacency(const WindowGraph& g) {
  AdjacencyView v;
  std::set<std::uint32_t> verts;
  for (auto [a, b] : g.edges) {
    verts.insert(a);
    verts.insert(b);
    v.neighbors[a].insert(b);
    v.neighbors[b].insert(a);
  }
  v.vertices.assign(verts.begin(), verts.end());
  return v;
}

void bron_kerbosch(const AdjacencyView& adj, std::vector<std::uint32_t>& current,
                   std::set<std::uint32_t> candidates, std::set<std::uint32_t> excluded,
                   std::vector<Hyperedge>& out) {
  if (candidates.empty() && excluded.empty()) {
    if (current.size() >= 2) {
      std::vector<std::uint32_t> members = current;
      std::sort(members.begin(), members.end());
      out.push_back(Hyperedge(std::move(members)));
    }
    return;
  }
  // Pivot on the vertex covering the most candidates.
  std::uint32_t pivot = 0;
  std::size_t best = static_cast<std::size_t>(-1);
  for (const auto* pool : {&candidates, &excluded}) {
    for (std::uint32_t u : *pool) {
      const auto& nu = adj.neighbors.at(u);
      std::size_t missed = 0;
      for (std::uint32_t c : candidates)
        if (!nu.count(c)) ++missed;
      if (missed < best) {
        best = missed;
        pivot = u;
      }
    }
  }
  std::vector<std::uint32_t> branch;
  const auto& np = adj.neighbors.at(pivot);
  for (std::uint32_t v : candidates)
    if (!np.count(v)) branch.push_back(v);
  for (std::uint32_t v : branch) {
    const auto& nv = adj.neighbors.at(v);
    std::set<std::uint32_t> next_candidates, next_excluded;
    for (std::uint32_t c : candidates)
      if (nv.count(c)) next_candidates.insert(c);
    for (std::uint32_t x : excluded)
      if (nv.count(x)) next_excluded.insert(x);
    current.push_back(v);
    bron_kerbosch(adj, current, std::move(next_candidates), std::move(next_excluded), out);
    current.pop_back();
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

CliqueSet maximal_cliques(const WindowGraph& g, std::size_t size_cap) {
  if (size_cap < 2) throw std::invalid_argument("size cap must be >= 2");
  AdjacencyView adj = adjacency(g);
  std::vector<Hyperedge> maximal;
  std::vector<std::uint32_t> current;
  bron_kerbosch(adj, current,
                std::set<std::uint32_t>(adj.vertices.begin(), adj.vertices.end()), {},
                maximal);

  CliqueSet out;
  std::set<Hyperedge> dedup;
  for (Hyperedge& clique : maximal) {
    if (clique.size() <= size_cap) {
      dedup.insert(std::move(clique));
      continue;
    }
    out.truncated = true;
    // Every size_cap subset is a largest group the cap can express.
    std::vector<std::uint32_t> chosen;
    auto emit = [&](auto&& self, std::size_t start) -> void {
      if (chosen.size() == size_cap) {
        dedup.insert(Hyperedge(chosen));
        return;
      }
      for (std::size_t i = start; i < clique.size(); ++i) {
        chosen.push_back(clique.members[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    emit(emit, 0);
  }
  out.cliques.assign(dedup.begin(), dedup.end());
  return out;
}

std::size_t thread_cap() {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("HYPERBAR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) cap = std::min<std::size_t>(cap, v);
  }
  return cap;
}

MeetingTally tally_meetings(const ContactData& data, std::size_t size_cap) {
  MeetingTally tally;
  tally.roster = data.roster;
  tally.size_cap = size_cap;

  const std::size_t workers =
      std::min<std::size_t>(std::max<std::size_t>(thread_cap(), 1), std::max<std::size_t>(data.windows.size(), 1));
  std::vector<CliqueSet> per_window(data.windows.size());
  if (workers <= 1 || data.windows.size() < 2) {
    for (std::size_t w = 0; w < data.windows.size(); ++w)
      per_window[w] = maximal_cliques(data.windows[w], size_cap);
  } else {
    std::vector<std::future<void>> jobs;
    std::size_t chunk = (data.windows.size() + workers - 1) / workers;
    for (std::size_t start = 0; start < data.windows.size(); start += chunk) {
      std::size_t stop = std::min(start + chunk, data.windows.size());
      jobs.push_back(std::async(std::launch::async, [&, start, stop] {
        for (std::size_t w = start; w < stop; ++w)
          per_window[w] = maximal_cliques(data.windows[w], size_cap);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  for (CliqueSet& cs : per_window) {
    tally.truncated = tally.truncated || cs.truncated;
    for (Hyperedge& e : cs.cliques) tally.counts[std::move(e)]++;
  }
  for (const auto& [e, c] : tally.counts) tally.max_count = std::max(tally.max_count, c);
  return tally;
}

Filtration build_filtration(const MeetingTally& tally, double log_base) {
  if (tally.counts.empty()) throw std::invalid_argument("empty meeting tally");
  if (!(log_base > 1.0)) throw std::invalid_argument("log base must exceed 1");
  Filtration f(tally.roster);
  const double scale = log_base == std::numbers::e ? 1.0 : std::log(log_base);
  const double log_max = std::log(static_cast<double>(tally.max_count));
  for (const auto& [e, count] : tally.counts)
    f.set_grade(e, Grade::at((log_max - std::log(static_cast<double>(count))) / scale));
  f.max_tracked_size = tally.size_cap;
  f.meeting_counts = tally.counts;
  return f;
}

}  // namespace hyperbar
