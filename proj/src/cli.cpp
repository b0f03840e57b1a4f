#include "mixorient/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mixorient/cycles.hpp"
#include "mixorient/driver.hpp"
#include "mixorient/errors.hpp"
#include "mixorient/generators.hpp"
#include "mixorient/graph_io.hpp"
#include "mixorient/metrics.hpp"
#include "mixorient/oracle.hpp"
#include "mixorient/report.hpp"

namespace mixorient {
namespace {

/// Usage-level failure (unreadable file, malformed graph): exit code 2.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Io& io) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(io.in), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageFailure("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageFailure("cannot write " + path);
  f << text;
}

MixedMultigraph load_graph(const std::string& path, Io& io, std::string* bytes = nullptr) {
  std::string text = read_input(path, io);
  try {
    MixedMultigraph g = parse_graph(text);
    if (bytes) *bytes = std::move(text);
    return g;
  } catch (const ParseError& e) {
    throw UsageFailure((path.empty() ? std::string("-") : path) + ": " + e.what());
  }
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

int cmd_check(const std::string& file, Io& io) {
  std::string bytes;
  const MixedMultigraph g = load_graph(file, io, &bytes);
  ReportDocument doc;
  doc.add("command", "check");
  doc.add("input_sha256", sha256_hex(bytes));
  doc.add("vertices", g.vertex_count());
  doc.add("edges", g.edge_count());
  doc.add("undirected_edges", g.undirected_count());
  const bool strong = is_strongly_connected(g);
  const std::vector<EdgeId> br = bridges(g);
  const bool orientable = strong && br.empty();
  doc.add("strongly_connected", strong);
  doc.add("bridges", static_cast<int>(br.size()));
  doc.add("bridge_ids", join(br));
  doc.add("strongly_orientable", orientable);
  if (strong && g.vertex_count() > 0) {
    const RadiusCenter rc = radius_center(g);
    doc.add("radius", rc.radius);
    doc.add("centers", join(rc.centers));
    doc.add("diameter", diameter(g));
  }
  if (orientable && g.edge_count() > 0) doc.add("eta", eta(g));
  io.out << doc.render();
  return orientable ? kExitOk : kExitDomain;
}

int cmd_orient(const std::string& file, const std::string& algorithm, const std::string& out_path,
               const std::string& report_path, Io& io) {
  std::string bytes;
  const MixedMultigraph g = load_graph(file, io, &bytes);
  const OrientationResult res =
      algorithm == "eta" ? strong_orientation_eta(g) : strong_orientation(g);
  const OrientationReport& rep = res.report;
  const VerificationReport ver = verify_orientation(g, res.orientation);

  ReportDocument doc;
  doc.add("command", "orient");
  doc.add("algorithm", algorithm);
  doc.add("input_sha256", sha256_hex(bytes));
  doc.add("vertices", g.vertex_count());
  doc.add("edges", g.edge_count());
  doc.add("undirected_edges", g.undirected_count());
  doc.add("radius_before", rep.radius_before);
  doc.add("center", rep.center);
  if (rep.eta_used) doc.add("eta", *rep.eta_used);
  doc.add("bound", rep.bound);
  doc.add("radius_after", rep.radius_after);
  doc.add("diameter_before", ver.source_diameter);
  doc.add("diameter_after", ver.diameter);
  doc.add("strongly_connected", ver.strongly_connected);
  doc.add("within_bound", rep.radius_after <= rep.bound);
  doc.add("phases", static_cast<int>(rep.phases.size()));
  for (std::size_t k = 0; k < rep.phases.size(); ++k) {
    const PhaseReport& p = rep.phases[k];
    const std::string prefix = "phase." + std::to_string(k + 1) + ".";
    doc.add(prefix + "index", p.phase_index);
    doc.add(prefix + "mode", p.mode == PhaseMode::Out ? "out" : "in");
    doc.add(prefix + "center", p.center);
    doc.add(prefix + "captured", p.captured_count);
    doc.add(prefix + "e_out", p.e_out);
    doc.add(prefix + "e_in", p.e_in);
  }

  const bool graph_to_stdout = out_path == "-";
  if (!out_path.empty()) write_output(out_path, emit_graph(res.orientation.apply()), io);
  if (!report_path.empty()) {
    write_output(report_path, doc.render(), io);
  } else if (graph_to_stdout) {
    io.err << doc.render();
  } else {
    io.out << doc.render();
  }
  return kExitOk;
}

int cmd_gen(const std::string& family, int r, int n, double frac, std::uint64_t seed,
            const std::string& out_path, Io& io) {
  MixedMultigraph g;
  std::ostringstream header;
  if (family == "lower-bound") {
    if (r < 1) throw UsageFailure("--r must be at least 1 for the lower-bound family");
    g = gen_lower_bound(r).graph;
    header << "c lower-bound family r=" << r << "\n";
  } else {
    if (n < 1) throw UsageFailure("--n must be at least 1 for the random family");
    g = gen_random_strongly_orientable(n, frac, seed);
    header << "c random n=" << n << " frac=" << frac << " seed=" << seed << "\n";
  }
  write_output(out_path, header.str() + emit_graph(g), io);
  return kExitOk;
}

int cmd_oracle(const std::string& file, int max_free, const std::string& report_path, Io& io) {
  std::string bytes;
  const MixedMultigraph g = load_graph(file, io, &bytes);
  const OracleResult res = oriented_radius_exact(g, max_free);
  ReportDocument doc;
  doc.add("command", "oracle");
  doc.add("input_sha256", sha256_hex(bytes));
  doc.add("vertices", g.vertex_count());
  doc.add("edges", g.edge_count());
  doc.add("oriented_radius", res.oriented_radius);
  doc.add("forced_count", res.forced_count);
  doc.add("free_edges", res.free_edges);
  doc.add("explored", static_cast<long long>(res.explored));
  write_output(report_path, doc.render(), io);
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& orientation_file,
               const std::string& report_path, Io& io) {
  std::string bytes;
  const MixedMultigraph g = load_graph(graph_file, io, &bytes);
  const MixedMultigraph d = load_graph(orientation_file, io);
  const Orientation o = orientation_from_digraph(g, d);
  const VerificationReport v = verify_orientation(g, o);
  ReportDocument doc;
  doc.add("command", "verify");
  doc.add("input_sha256", sha256_hex(bytes));
  doc.add("total", v.total);
  doc.add("strongly_connected", v.strongly_connected);
  if (v.strongly_connected) {
    doc.add("radius", v.radius);
    doc.add("diameter", v.diameter);
    doc.add("source_radius", v.source_radius);
    doc.add("source_diameter", v.source_diameter);
    doc.add("within_radius_bound", v.within_radius_bound);
    doc.add("within_diameter_bound", v.within_diameter_bound);
  }
  doc.add("valid", v.valid());
  write_output(report_path, doc.render(), io);
  return v.valid() ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Strong orientations of mixed multigraphs with bounded radius", "mixorient"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string algorithm = "strong";
  std::string out_path;
  std::string report_path;
  std::string family;
  int r = 0;
  int n = 0;
  double frac = 0.5;
  std::uint64_t seed = 1;
  int max_free = kDefaultMaxFree;
  std::string orientation_file;

  auto* check = app.add_subcommand("check", "Report connectivity, bridges, radius and eta");
  check->add_option("file", file, "Graph file, '-' for stdin");

  auto* orient = app.add_subcommand("orient", "Orient all undirected edges");
  orient->add_option("file", file, "Graph file, '-' for stdin");
  orient->add_option("--algorithm", algorithm)->check(CLI::IsMember({"strong", "eta"}));
  orient->add_option("--out", out_path, "Oriented graph file, '-' for stdout");
  orient->add_option("--report", report_path, "Report file");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", family)->required()->check(CLI::IsMember({"lower-bound", "random"}));
  gen->add_option("--r", r);
  gen->add_option("--n", n);
  gen->add_option("--frac", frac)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "Exact oriented radius by enumeration");
  oracle->add_option("file", file, "Graph file, '-' for stdin");
  oracle->add_option("--max-free", max_free)->check(CLI::Range(0, 62));
  oracle->add_option("--report", report_path);

  auto* verify = app.add_subcommand("verify", "Check an oriented graph against its source");
  verify->add_option("graph", file)->required();
  verify->add_option("orientation", orientation_file)->required();
  verify->add_option("--report", report_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(file, io);
    if (*orient) return cmd_orient(file, algorithm, out_path, report_path, io);
    if (*gen) return cmd_gen(family, r, n, frac, seed, out_path, io);
    if (*oracle) return cmd_oracle(file, max_free, report_path, io);
    if (*verify) return cmd_verify(file, orientation_file, report_path, io);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace mixorient
