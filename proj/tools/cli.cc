#include "cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "ramsey/certificate.h"
#include "ramsey/clique_engine.h"
#include "ramsey/coloring.h"
#include "ramsey/oracle.h"
#include "ramsey/proof_replay.h"
#include "ramsey/search.h"

namespace ramsey::cli {

namespace {

// Usage-level failure: bad arguments or unreadable input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ColoringSpec load_spec(const std::string& path) {
  return read_certificate_file(path).spec;
}

// A preset name or a certificate path.
ColoringSpec resolve_start(const std::string& start) {
  try {
    return preset(start);
  } catch (const std::invalid_argument&) {
    return load_spec(start);
  }
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed vertex '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

void check_k(const Coloring& c, int k) {
  if (k < 2 || k > c.active_count()) {
    throw UsageError("--k must be in [2, " + std::to_string(c.active_count()) + "]");
  }
}

int run_build(const std::string& name, const std::string& out_path,
              std::ostream& out) {
  ColoringSpec spec;
  try {
    spec = preset(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Certificate cert = certify(spec);
  if (out_path.empty()) {
    out << encode_certificate(cert);
  } else {
    write_certificate_file(out_path, cert);
  }
  return kExitOk;
}

int run_verify(const std::string& path, bool use_oracle, std::ostream& out) {
  const Certificate cert = read_certificate_file(path);
  const auto results =
      verify_claims(cert, use_oracle ? CountMethod::Oracle : CountMethod::Engine);
  bool ok = true;
  for (const ClaimResult& r : results) {
    out << "claim mono-k" << r.claim.k << ' ' << color_name(r.claim.color) << ' '
        << r.claim.count << ": ";
    if (!r.error.empty()) {
      out << "error " << r.error << '\n';
      ok = false;
    } else {
      out << (r.holds ? "ok" : "FAILED") << " actual=" << r.actual << '\n';
      ok = ok && r.holds;
    }
  }
  out << "method=" << (use_oracle ? "oracle" : "engine")
      << " claims=" << results.size() << " result=" << (ok ? "pass" : "fail")
      << '\n';
  return ok ? kExitOk : kExitClaimFailed;
}

int run_count(const std::string& path, const std::string& color, int k,
              std::ostream& out) {
  const Coloring c = build(load_spec(path));
  check_k(c, k);
  out << count_mono(c, parse_color(color), k) << '\n';
  return kExitOk;
}

int run_enumerate(const std::string& path, const std::string& color, int k,
                  std::ostream& out) {
  const Coloring c = build(load_spec(path));
  check_k(c, k);
  for (const Clique& q : enumerate_mono(c, parse_color(color), k)) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
      out << (i ? " " : "") << q.vertices[i];
    }
    out << '\n';
  }
  return kExitOk;
}

int run_lemmas(const std::string& path, std::ostream& out) {
  const auto reports = run_lemma_suite(load_spec(path));
  bool ok = true;
  for (const CheckReport& r : reports) {
    out << status_name(r.status) << "  " << r.name;
    if (!r.summary.empty()) out << "  [" << r.summary << "]";
    out << '\n';
    for (const std::string& f : r.failures) out << "    " << f << '\n';
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int run_diagram(const std::string& path, const std::string& color,
                const std::string& vertices, std::ostream& out) {
  const Coloring c = build(load_spec(path));
  const auto rows = parse_vertex_list(vertices);
  for (Vertex v : rows) {
    if (v < 0 || v >= c.order()) {
      throw UsageError("vertex " + std::to_string(v) + " out of range");
    }
  }
  out << render_diagram(c, parse_color(color), rows);
  return kExitOk;
}

struct SearchArgs {
  std::string start;
  std::int64_t budget = 10000;
  std::uint64_t seed = 0;
  std::string policy = "greedy";
  bool red_to_blue_only = false;
  int tabu_length = 50;
  std::string log_path;
  std::string best_out;
};

int run_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions opt;
  try {
    opt.policy = parse_policy(a.policy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.budget < 1) throw UsageError("--budget must be at least 1");
  opt.budget = a.budget;
  opt.seed = a.seed;
  opt.red_to_blue_only = a.red_to_blue_only;
  opt.tabu_length = a.tabu_length;
  const SearchState s = local_search(resolve_start(a.start), opt);
  const std::string log = format_search_log(s);
  if (a.log_path.empty()) {
    out << log;
  } else {
    std::ofstream f(a.log_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.log_path);
    f << log;
  }
  if (!a.best_out.empty()) write_certificate_file(a.best_out, certify(s.best.spec()));
  out << "result policy=" << policy_name(opt.policy) << " seed=" << s.seed
      << " evaluations=" << s.evaluations << " moves=" << s.trace.size()
      << " restarts=" << s.restarts << " red=" << s.red << " blue=" << s.blue
      << " objective=" << s.objective << " best=" << s.best_objective << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Ramsey coloring builder, verifier and multiplicity search",
               "ramsey"};
  app.require_subcommand(1);

  std::string file, color, vertices, preset_name_arg, out_path;
  int k = 5;
  bool use_oracle = false;
  SearchArgs search;

  auto* build_cmd = app.add_subcommand("build", "Emit a certificate for a preset");
  build_cmd->add_option("preset", preset_name_arg, "Cyc43 | Exoo42 | VariantA | VariantB")
      ->required();
  build_cmd->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Recompute every claim");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_flag("--oracle", use_oracle, "Use the naive subset scanner");

  auto* count_cmd = app.add_subcommand("count", "Count monochromatic k-cliques");
  count_cmd->add_option("file", file)->required();
  count_cmd->add_option("--color", color)->required();
  count_cmd->add_option("--k", k)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List monochromatic k-cliques");
  enum_cmd->add_option("file", file)->required();
  enum_cmd->add_option("--color", color)->required();
  enum_cmd->add_option("--k", k)->required();

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Run the structural checks");
  lemmas_cmd->add_option("file", file)->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "Render a neighborhood diagram");
  diagram_cmd->add_option("file", file)->required();
  diagram_cmd->add_option("--color", color)->required();
  diagram_cmd->add_option("--vertices", vertices, "Comma-separated row vertices")
      ->required();

  auto* search_cmd = app.add_subcommand("search", "Flip-based local search");
  search_cmd->add_option("--start", search.start, "Preset name or certificate")
      ->required();
  search_cmd->add_option("--budget", search.budget, "Flip evaluations")->required();
  search_cmd->add_option("--seed", search.seed)->required();
  search_cmd->add_option("--policy", search.policy, "greedy | tabu | restart")
      ->required();
  search_cmd->add_flag("--red-to-blue-only", search.red_to_blue_only);
  search_cmd->add_option("--tabu-length", search.tabu_length);
  search_cmd->add_option("--log", search.log_path, "Write the move log to FILE");
  search_cmd->add_option("--best-out", search.best_out,
                         "Write the best coloring as a certificate");

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("ramsey");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*build_cmd) return run_build(preset_name_arg, out_path, out);
    if (*verify_cmd) return run_verify(file, use_oracle, out);
    if (*count_cmd) return run_count(file, color, k, out);
    if (*enum_cmd) return run_enumerate(file, color, k, out);
    if (*lemmas_cmd) return run_lemmas(file, out);
    if (*diagram_cmd) return run_diagram(file, color, vertices, out);
    if (*search_cmd) return run_search(search, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramsey::cli
