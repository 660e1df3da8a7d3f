// hyperbar: persistent barcodes for hypergraph filtrations built from
// contact data or point clouds.
//
//   hyperbar ingest <contacts> -o <filtration>
//   hyperbar compute <filtration> --max-dim K --mode filtered|literal -o <csv>
//   hyperbar stats <csv> --dim D [--grade G]
//   hyperbar plot <csv> -o <svg>
//   hyperbar rips <points> --rmax R --max-dim K -o <filtration>
//   hyperbar oracle-check <filtration> --max-dim K

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperbar/contact.hpp"
#include "hyperbar/engine.hpp"
#include "hyperbar/oracle.hpp"
#include "hyperbar/report.hpp"
#include "hyperbar/rips.hpp"

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent hypergraph barcodes"};
  app.require_subcommand(1);

  std::string in_path, out_path, mode = "filtered";
  int max_dim = 1, stats_dim = 1;
  std::int64_t window_len = 20;
  std::size_t size_cap = 5;
  double r_max = 1.0;
  std::string grade_query;

  auto* ingest = app.add_subcommand("ingest", "contact records to a filtration file");
  ingest->add_option("contacts", in_path, "contact record file")->required();
  ingest->add_option("-o,--output", out_path, "filtration file")->required();
  ingest->add_option("--window", window_len, "window length in seconds (default 20)");
  ingest->add_option("--size-cap", size_cap, "largest tracked meeting size (default 5)");

  auto* compute = app.add_subcommand("compute", "barcodes from a filtration file");
  compute->add_option("filtration", in_path, "filtration file")->required();
  compute->add_option("-o,--output", out_path, "barcode CSV")->required();
  compute->add_option("--max-dim", max_dim, "largest bar dimension (default 1)");
  compute->add_option("--mode", mode, "filtered (default) or literal")
      ->check(CLI::IsMember({"filtered", "literal"}));

  auto* stats_cmd = app.add_subcommand("stats", "summary statistics from a barcode CSV");
  stats_cmd->add_option("barcodes", in_path, "barcode CSV")->required();
  stats_cmd->add_option("--dim", stats_dim, "dimension to summarize (default 1)");
  stats_cmd->add_option("--grade", grade_query, "also report bars alive at this grade");

  auto* plot = app.add_subcommand("plot", "SVG plot from a barcode CSV");
  plot->add_option("barcodes", in_path, "barcode CSV")->required();
  plot->add_option("-o,--output", out_path, "SVG file")->required();

  auto* rips = app.add_subcommand("rips", "Rips filtration from a point file");
  rips->add_option("points", in_path, "point coordinates file")->required();
  rips->add_option("-o,--output", out_path, "filtration file")->required();
  rips->add_option("--rmax", r_max, "radius cutoff")->required();
  rips->add_option("--max-dim", max_dim, "largest simplex dimension (default 1)");

  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "engine vs brute-force oracle on a filtration");
  oracle_cmd->add_option("filtration", in_path, "filtration file")->required();
  oracle_cmd->add_option("--max-dim", max_dim, "largest bar dimension (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ingest) {
      auto in = open_input(in_path);
      auto records = hyperbar::parse_contacts(in);
      auto data = hyperbar::window_graphs(records, window_len);
      auto tally = hyperbar::tally_meetings(data, size_cap);
      if (tally.truncated)
        std::cerr << "note: meetings larger than " << size_cap
                  << " were truncated to their size-" << size_cap << " subgroups\n";
      auto filtration = hyperbar::build_filtration(tally);
      auto out = open_output(out_path);
      filtration.write(out);
    } else if (*compute) {
      auto in = open_input(in_path);
      auto filtration = hyperbar::Filtration::read(in);
      auto bars = hyperbar::compute_barcodes(
          filtration, max_dim,
          mode == "literal" ? hyperbar::BarMode::literal : hyperbar::BarMode::filtered);
      auto out = open_output(out_path);
      hyperbar::write_barcode_csv(out, bars);
    } else if (*stats_cmd) {
      auto in = open_input(in_path);
      auto bars = hyperbar::read_barcode_csv(in);
      auto summary = hyperbar::stats(bars, stats_dim);
      std::optional<hyperbar::Grade> at;
      if (!grade_query.empty()) at = hyperbar::Grade::parse(grade_query);
      std::cout << hyperbar::stats_json(summary, bars, at);
    } else if (*plot) {
      auto in = open_input(in_path);
      auto bars = hyperbar::read_barcode_csv(in);
      auto out = open_output(out_path);
      out << hyperbar::render_svg(bars);
    } else if (*rips) {
      auto in = open_input(in_path);
      auto cloud = hyperbar::parse_points(in);
      auto filtration = hyperbar::rips_filtration(cloud, r_max, max_dim);
      auto out = open_output(out_path);
      filtration.write(out);
    } else if (*oracle_cmd) {
      auto in = open_input(in_path);
      auto filtration = hyperbar::Filtration::read(in);
      auto engine_bars = hyperbar::compute_barcodes(filtration, max_dim);
      auto oracle_bars = hyperbar::oracle_barcodes(filtration, max_dim);
      auto diff = hyperbar::compare(engine_bars, oracle_bars);
      if (!diff.empty()) {
        std::cout << diff.describe();
        std::cout << "MISMATCH: " << diff.entries.size() << " bar(s) differ\n";
        return 1;
      }
      std::cout << "engine and oracle agree: " << engine_bars.size() << " bar(s), dimensions 0.."
                << max_dim << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
