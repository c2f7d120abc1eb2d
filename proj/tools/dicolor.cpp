// dicolor: command-line front end for the digraph coloring library.
//
// Exit status: 0 success, 1 verification or bound failure, 2 precondition
// violation or bad usage, 3 unreadable or unparseable input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicolor/dicolor.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace dicolor;

constexpr int kOk = 0, kFailed = 1, kPrecondition = 2, kParse = 3;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::length_mismatch:
      return kParse;
    case ErrorCode::iteration_cap:
    case ErrorCode::fallback_exhausted:
      return kFailed;
    default:
      return kPrecondition;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << text;
}

json exact_half(HalfInt x) { return {{"numerator", x.twice()}, {"denominator", 2}}; }

json vertex_list(const auto& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

std::string brace_list(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

// ---- stats ---------------------------------------------------------------

struct StatsArgs {
  std::string input;
  bool json = false;
};

int run_stats(const StatsArgs& a) {
  Digraph d = parse_edge_list(read_file(a.input));
  DegreeStats st = degree_stats(d);
  bool oriented = is_oriented(d);
  std::size_t components = weak_components(d).size();
  bool af = avoids_F(d), ag = avoids_G(d);
  double geom = st.max_geom();
  if (a.json) {
    json j = {{"n", d.order()},
              {"edges", d.size()},
              {"deltabar", exact_half(st.max_avg)},
              {"deltatilde_squared", st.max_geom_sq},
              {"deltatilde", geom},
              {"oriented", oriented},
              {"components", components},
              {"avoidsF", af},
              {"avoidsG", ag}};
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  char geom_text[32];
  std::snprintf(geom_text, sizeof geom_text, "%.6f", geom);
  std::cout << "n=" << d.order() << " m=" << d.size() << " deltabar=" << st.max_avg.to_string()
            << " oriented=" << std::boolalpha << oriented << " components=" << components
            << " avoidsF=" << af << " avoidsG=" << ag << '\n'
            << "deltatilde^2=" << st.max_geom_sq << " deltatilde=" << geom_text << '\n';
  return kOk;
}

// ---- color ---------------------------------------------------------------

struct ColorArgs {
  std::string input, out, algo = "greedy";
  std::size_t m = 1;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_color(const ColorArgs& a) {
  Digraph d = parse_edge_list(read_file(a.input));
  HalfInt delta_bar = max_avg_degree(d);
  Coloring coloring;
  std::int64_t bound = 0;

  if (a.algo == "greedy") {
    coloring = greedy_coloring(d, a.m);
    bound = greedy_bound(delta_bar, a.m);
  } else if (a.algo == "fracdelta") {
    auto r = fracdelta_coloring(d, a.m);
    coloring = std::move(r.coloring);
    bound = r.plan.bound;
  } else if (a.algo == "improved") {
    if (a.m != 1)
      throw Error(ErrorCode::invalid_argument, "algo improved colors with acyclic sets; use --m 1");
    auto r = improved_acyclic_coloring(d);
    coloring = std::move(r.coloring);
    bound = r.plan.bound;
  } else if (a.algo.rfind("bounded:", 0) == 0) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoull(a.algo.substr(8), &used);
      if (used != a.algo.size() - 8) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "bad algorithm '" + a.algo + "'");
    }
    coloring = bounded_coloring(d, a.m, k);
    bound = static_cast<std::int64_t>(k);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown algorithm '" + a.algo + "'");
  }

  ColoringCheck check = verify_coloring(d, coloring, a.m);
  bool within = static_cast<std::int64_t>(coloring.num_colors) <= bound;
  std::string file = emit_coloring(coloring, {{"m", std::to_string(a.m)},
                                              {"algo", a.algo},
                                              {"bound", std::to_string(bound)},
                                              {"seed", std::to_string(a.seed)},
                                              {"colors", std::to_string(coloring.num_colors)}});
  if (!a.out.empty()) write_output(a.out, file);

  std::ostream& report = a.out.empty() && !a.json ? std::cerr : std::cout;
  if (a.json) {
    json j = {{"algo", a.algo},
              {"m", a.m},
              {"seed", a.seed},
              {"deltabar", exact_half(delta_bar)},
              {"colors", coloring.num_colors},
              {"bound", bound},
              {"verified", check.valid},
              {"within_bound", within},
              {"coloring", coloring.assignment}};
    std::cout << j.dump(2) << '\n';
  } else {
    if (a.out.empty()) std::cout << file;
    report << "algo=" << a.algo << " m=" << a.m << " colors=" << coloring.num_colors
           << " bound=" << bound << " verified=" << std::boolalpha << check.valid << '\n';
  }
  if (!check.valid) {
    std::cerr << "verification failed: class " << check.failed_class << " core "
              << brace_list(check.witness_core) << '\n';
    return kFailed;
  }
  if (!within) {
    std::cerr << "bound exceeded: " << coloring.num_colors << " > " << bound << '\n';
    return kFailed;
  }
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string input, coloring;
  std::size_t m = 0;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  Digraph d = parse_edge_list(read_file(a.input));
  ColoringFile file = parse_coloring(read_file(a.coloring));
  std::size_t m = a.m;
  if (m == 0) {
    auto it = file.meta.find("m");
    if (it == file.meta.end())
      throw Error(ErrorCode::invalid_argument, "no --m given and the coloring header has no m");
    try {
      m = std::stoull(it->second);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "bad m in coloring header: '" + it->second + "'");
    }
  }
  ColoringCheck check = verify_coloring(d, file.coloring, m);
  if (a.json) {
    json j = {{"valid", check.valid}, {"m", m}, {"colors", file.coloring.num_colors}};
    if (!check.valid) {
      j["failed_class"] = check.failed_class;
      j["witness_core"] = vertex_list(check.witness_core);
    }
    std::cout << j.dump(2) << '\n';
  } else if (check.valid) {
    std::cout << "valid m=" << m << " colors=" << file.coloring.num_colors << '\n';
  } else {
    std::cout << "invalid m=" << m << " class=" << check.failed_class
              << " core=" << brace_list(check.witness_core) << '\n';
  }
  return check.valid ? kOk : kFailed;
}

// ---- exact ---------------------------------------------------------------

struct ExactArgs {
  std::string input, out;
  std::size_t m = 1, max_n = kDefaultExactCap;
  bool json = false;
};

int run_exact(const ExactArgs& a) {
  Digraph d = parse_edge_list(read_file(a.input));
  ExactResult r = exact_chi_m(d, a.m, a.max_n);
  if (!a.out.empty())
    write_output(a.out, emit_coloring(r.witness, {{"m", std::to_string(a.m)},
                                                  {"algo", "exact"},
                                                  {"bound", std::to_string(r.chi)},
                                                  {"seed", "0"},
                                                  {"colors", std::to_string(r.chi)}}));
  if (a.json) {
    json j = {{"m", a.m},
              {"chi", r.chi},
              {"certificate_checked", r.certificate_checked},
              {"coloring", r.witness.assignment}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "chi_" << a.m << " = " << r.chi << '\n';
  }
  return r.certificate_checked ? kOk : kFailed;
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family, out;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
};

std::size_t size_param(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::invalid_argument, "expected a non-negative integer, got '" + text + "'");
  return std::stoull(text);
}

int run_gen(const GenArgs& a) {
  auto expect = [&](std::size_t count, const char* usage) {
    if (a.params.size() != count)
      throw Error(ErrorCode::invalid_argument, std::string("usage: gen ") + usage);
  };
  Digraph d;
  if (a.family == "cycle") {
    expect(1, "cycle N");
    d = directed_cycle(size_param(a.params[0]));
  } else if (a.family == "tournament") {
    expect(1, "tournament N");
    d = rotational_tournament(size_param(a.params[0]));
  } else if (a.family == "oriented") {
    expect(2, "oriented N MAXAVG");
    HalfInt max_avg;
    try {
      max_avg = HalfInt::parse(a.params[1]);
    } catch (const Error&) {
      throw Error(ErrorCode::invalid_argument, "bad MAXAVG '" + a.params[1] + "'");
    }
    d = random_oriented(size_param(a.params[0]), max_avg, a.seed);
  } else if (a.family == "functional") {
    expect(1, "functional N");
    d = random_functional(size_param(a.params[0]), a.seed);
  } else if (a.family == "regular") {
    expect(2, "regular N D");
    d = random_regular_digraph(size_param(a.params[0]), size_param(a.params[1]), a.seed);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown family '" + a.family + "'");
  }
  std::string header = "gen " + a.family;
  for (const auto& p : a.params) header += " " + p;
  header += " seed=" + std::to_string(a.seed);
  write_output(a.out, emit_edge_list(d, {header}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate colorings of digraphs"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Degree measures and pattern checks");
  stats_cmd->add_option("input", stats.input, "Edge-list file")->required();
  stats_cmd->add_flag("--json", stats.json, "Print a JSON report");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color with a chosen algorithm and self-verify");
  color_cmd->add_option("input", color.input, "Edge-list file")->required();
  color_cmd->add_option("--m", color.m, "Degeneracy parameter")->check(CLI::PositiveNumber);
  color_cmd->add_option("--algo", color.algo, "greedy | fracdelta | improved | bounded:K");
  color_cmd->add_option("--out", color.out, "Coloring file (stdout when omitted)");
  color_cmd->add_option("--seed", color.seed, "Recorded in the coloring header");
  color_cmd->add_flag("--json", color.json, "Print a JSON report");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file");
  verify_cmd->add_option("input", verify.input, "Edge-list file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  verify_cmd->add_option("--m", verify.m, "Degeneracy parameter (default: from header)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify.json, "Print a JSON report");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact chi_m by exhaustive search");
  exact_cmd->add_option("input", exact.input, "Edge-list file")->required();
  exact_cmd->add_option("--m", exact.m, "Degeneracy parameter")->check(CLI::PositiveNumber);
  exact_cmd->add_option("--max-n", exact.max_n, "Refuse larger inputs")->check(CLI::Range(0, 64));
  exact_cmd->add_option("--out", exact.out, "Write the witness coloring");
  exact_cmd->add_flag("--json", exact.json, "Print a JSON report");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an edge list");
  gen_cmd->add_option("family", gen.family, "cycle | tournament | oriented | functional | regular")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kPrecondition;
  }

  try {
    if (*stats_cmd) return run_stats(stats);
    if (*color_cmd) return run_color(color);
    if (*verify_cmd) return run_verify(verify);
    if (*exact_cmd) return run_exact(exact);
    if (*gen_cmd) return run_gen(gen);
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kPrecondition;
}
