#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "bchrom/errors.hpp"
#include "bchrom/generate.hpp"
#include "bchrom/io.hpp"
#include "bchrom/oracle.hpp"
#include "bchrom/pipeline.hpp"
#include "cli/coloring_file.hpp"

namespace bchrom::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct InputOptions {
  std::string format;  // empty: detect from extension
  std::size_t oracle_limit = OracleOptions{}.vertex_limit;
};

Graph load_graph(const std::string& path, const InputOptions& in) {
  GraphFormat format = in.format.empty() ? format_from_path(path) : parse_format_name(in.format);
  return read_graph_file(path, format);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::vector<Label> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<Label> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::string join(const std::vector<Label>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
  return s.str();
}

struct AnalyzeFlags {
  InputOptions input;
  bool chi_b = false;
  bool oracle = false;
  bool json = false;
  bool trace = false;
  std::string check_set;
};

// One analysis record. Returns the exit code; `text` receives the record.
int analyze_one(const std::string& path, const AnalyzeFlags& flags, std::string& text,
                std::string& diagnostics) {
  Graph g = load_graph(path, flags.input);
  if (g.empty()) throw ArgumentError("graph has no vertices");

  SolveOptions options;
  options.compute_chi_b = flags.chi_b;
  options.oracle.vertex_limit = flags.input.oracle_limit;
  Analysis a = analyze_graph(g, options);

  if (flags.chi_b && flags.oracle && !a.girth.at_least(9) &&
      g.order() > options.oracle.vertex_limit) {
    diagnostics = "refused: " + std::to_string(g.order()) +
                  " vertices exceed the oracle limit of " +
                  std::to_string(options.oracle.vertex_limit) + "\n";
    return kRefused;
  }

  std::optional<std::string> set_verdict;
  if (!flags.check_set.empty()) {
    std::vector<Vertex> members;
    std::stringstream list(flags.check_set);
    std::string item;
    while (std::getline(list, item, ',')) {
      auto v = g.find(std::stoull(item));
      if (!v) throw ArgumentError("--check-set: unknown vertex " + item);
      members.push_back(*v);
    }
    set_verdict = is_good_set(g, members, a.profile).describe(g);
  }

  if (flags.json) {
    json j;
    j["file"] = path;
    j["n"] = g.order();
    j["edges"] = g.size();
    if (a.girth.is_acyclic()) {
      j["girth"] = "acyclic";
    } else {
      j["girth"] = *a.girth.length;
    }
    j["m"] = a.profile.m;
    j["dense_count"] = a.profile.dense.size();
    j["dense"] = labels_of(g, a.profile.dense);
    j["has_good_set"] = a.has_good_set ? json(*a.has_good_set) : json(nullptr);
    j["good_set"] = a.good_set ? json(labels_of(g, a.good_set->members)) : json(nullptr);
    if (a.failure) j["good_set_failure"] = a.failure->describe(g);
    if (set_verdict) j["check_set"] = *set_verdict;
    if (flags.chi_b) {
      j["chi_b"] = a.chi_b ? json(*a.chi_b) : json(nullptr);
      j["chi_b_method"] = method_name(a.method);
      j["chi_b_upper"] = a.profile.m;
    }
    text = j.dump() + "\n";
  } else {
    std::ostringstream s;
    s << "n=" << g.order() << '\n'
      << "edges=" << g.size() << '\n'
      << "girth=" << a.girth.to_string() << '\n'
      << "m=" << a.profile.m << '\n'
      << "dense_count=" << a.profile.dense.size() << '\n'
      << "dense=" << join(labels_of(g, a.profile.dense)) << '\n'
      << "has_good_set=" << (a.has_good_set ? (*a.has_good_set ? "true" : "false") : "unknown")
      << '\n';
    if (a.good_set) s << "good_set=" << join(labels_of(g, a.good_set->members)) << '\n';
    if (a.failure) s << "good_set_failure=" << a.failure->describe(g) << '\n';
    if (set_verdict) s << "check_set=" << *set_verdict << '\n';
    if (flags.chi_b) {
      s << "chi_b=" << (a.chi_b ? std::to_string(*a.chi_b) : "unknown") << '\n'
        << "chi_b_method=" << method_name(a.method) << '\n'
        << "chi_b_upper=" << a.profile.m << '\n';
    }
    text = s.str();
  }
  if (flags.trace && a.result) diagnostics += format_trace(g, a.result->trace);
  return kSuccess;
}

// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ArgumentError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const OracleLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_analyze(const std::string& input, const std::string& batch_dir, const AnalyzeFlags& flags,
                std::ostream& out, std::ostream& err) {
  if (batch_dir.empty()) {
    return guarded(err, [&] {
      std::string text, diagnostics;
      int code = analyze_one(input, flags, text, diagnostics);
      out << text;
      err << diagnostics;
      return code;
    });
  }

  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(batch_dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  if (ec) {
    err << "input error: cannot list " << batch_dir << ": " << ec.message() << '\n';
    return kInputError;
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    int code = kSuccess;
    std::string text;
    std::string diagnostics;
  };
  std::vector<Outcome> outcomes(files.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < files.size(); i = next++) {
        std::ostringstream diag;
        Outcome& o = outcomes[i];
        o.code = guarded(diag, [&] { return analyze_one(files[i], flags, o.text, o.diagnostics); });
        o.diagnostics += diag.str();
      }
    }));
  }
  for (auto& f : pool) f.get();

  int worst = kSuccess;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!flags.json) out << "file=" << files[i] << '\n';
    out << outcomes[i].text;
    if (!flags.json) out << '\n';
    if (!outcomes[i].diagnostics.empty()) err << files[i] << ": " << outcomes[i].diagnostics;
    worst = std::max(worst, outcomes[i].code);
  }
  return worst;
}

int cmd_color(const std::string& input, const std::string& output, const InputOptions& in,
              bool oracle, bool trace, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g = load_graph(input, in);
    if (g.empty()) throw ArgumentError("graph has no vertices");

    SolveOptions options;
    options.oracle_below_girth_9 = oracle;
    options.oracle.vertex_limit = in.oracle_limit;
    Analysis a = analyze_graph(g, options);

    if (!a.result) {
      if (!a.girth.at_least(9) && !oracle) {
        err << "refused: graph has girth " << a.girth.to_string()
            << " < 9; the good-set construction needs girth >= 9 (pass --oracle for exact "
               "search on small graphs)\n";
      } else if (a.method == Method::nogoodset_theorem) {
        err << "refused: no good set, so chi_b = m-1 = " << *a.chi_b
            << ", but " << g.order() << " vertices exceed the oracle limit of "
            << in.oracle_limit << " needed to build the coloring\n";
      } else {
        err << "refused: " << g.order() << " vertices exceed the oracle limit of "
            << in.oracle_limit << '\n';
      }
      return static_cast<int>(kRefused);
    }
    write_output(output, write_coloring(g, *a.result), out);
    if (trace) err << format_trace(g, a.result->trace);
    return static_cast<int>(kSuccess);
  });
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const InputOptions& in, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g = load_graph(graph_path, in);
    ColoringFile file = parse_coloring(g, read_text_file(coloring_path));
    ValidityReport report = check_b_coloring(g, file.coloring, file.k);

    std::vector<std::string> basis_errors;
    for (const auto& [v, c] : file.basis) {
      if (file.coloring[v] != c || !is_b_vertex(g, file.coloring, v, file.k)) {
        basis_errors.push_back(std::to_string(g.label(v)) + ":" + std::to_string(c));
      }
    }
    const bool ok = report.valid() && basis_errors.empty();

    if (as_json) {
      json j;
      j["valid"] = ok;
      j["k"] = file.k;
      j["proper"] = report.proper;
      j["colors_used"] = report.colors_used;
      if (report.basis) j["basis"] = labels_of(g, *report.basis);
      json violations = json::array();
      for (const auto& v : report.violations) {
        violations.push_back({{"kind", kind_name(v.kind)},
                              {"vertices", labels_of(g, v.vertices)},
                              {"color", v.color}});
      }
      for (const auto& b : basis_errors) {
        violations.push_back({{"kind", "basis-mismatch"}, {"entry", b}});
      }
      j["violations"] = violations;
      out << j.dump() << '\n';
    } else if (ok) {
      out << "valid k=" << file.k << " basis=" << join(labels_of(g, *report.basis)) << '\n';
    } else {
      out << "invalid k=" << file.k << '\n' << report.summary(g);
      for (const auto& b : basis_errors) out << "basis-mismatch " << b << '\n';
    }
    return static_cast<int>(ok ? kSuccess : kVerificationFailed);
  });
}

int cmd_generate(std::size_t n, std::size_t min_girth, std::size_t edges, std::uint64_t seed,
                 const std::string& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g = generate_girth_constrained(n, min_girth, edges, seed);
    write_output(output, write_edge_list(g), out);
    return static_cast<int>(kSuccess);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"b-chromatic number of graphs with girth at least 9", "bchrom"};
  app.require_subcommand(1);

  InputOptions input;
  auto add_input_flags = [&](CLI::App* sub) {
    sub->add_option("--format", input.format, "Input format (default: from extension)")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    sub->add_option("--oracle-limit", input.oracle_limit, "Vertex limit of the exact search");
  };

  AnalyzeFlags aflags;
  std::string analyze_input, batch_dir;
  auto* analyze = app.add_subcommand("analyze", "Girth, m(G), good set and optionally chi_b");
  analyze->add_option("graph", analyze_input, "Graph file");
  analyze->add_flag("--chi-b", aflags.chi_b, "Also determine chi_b");
  analyze->add_flag("--oracle", aflags.oracle, "Refuse instead of falling back to bounds");
  analyze->add_flag("--json", aflags.json, "Emit one JSON object per graph");
  analyze->add_flag("--trace", aflags.trace, "Print the construction trace to stderr");
  analyze->add_option("--check-set", aflags.check_set, "Comma-separated labels to test as a good set");
  analyze->add_option("--batch", batch_dir, "Analyze every file in a directory");
  add_input_flags(analyze);

  std::string color_input, color_output;
  bool color_oracle = false, color_trace = false;
  auto* color = app.add_subcommand("color", "Write a b-coloring with chi_b colors");
  color->add_option("graph", color_input, "Graph file")->required();
  color->add_option("output", color_output, "Coloring file, '-' for stdout")->required();
  color->add_flag("--oracle", color_oracle, "Allow exact search below girth 9");
  color->add_flag("--trace", color_trace, "Print the construction trace to stderr");
  add_input_flags(color);

  std::string verify_graph, verify_coloring;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Check a coloring file against a graph");
  verify->add_option("graph", verify_graph, "Graph file")->required();
  verify->add_option("coloring", verify_coloring, "Coloring file")->required();
  verify->add_flag("--json", verify_json, "Emit the report as JSON");
  add_input_flags(verify);

  std::size_t gen_n = 0, gen_girth = 9, gen_edges = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_output = "-";
  bool gen_edges_set = false;
  auto* generate = app.add_subcommand("generate", "Random graph with a girth lower bound");
  generate->add_option("--n", gen_n, "Vertex count")->required();
  generate->add_option("--min-girth", gen_girth, "Minimum girth (>= 3)");
  generate->add_option("--edges", gen_edges, "Edge budget (default: n)")
      ->each([&](const std::string&) { gen_edges_set = true; });
  generate->add_option("--seed", gen_seed, "Random seed");
  generate->add_option("output", gen_output, "Output file, '-' for stdout");

  std::vector<const char*> argv{"bchrom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, err_out;
    app.exit(e, help_out, err_out);
    out << help_out.str();
    err << err_out.str();
    return e.get_exit_code() == 0 ? kSuccess : kInputError;
  }

  if (analyze->parsed()) {
    if (analyze_input.empty() == batch_dir.empty()) {
      err << "input error: analyze takes either a graph file or --batch DIR\n";
      return kInputError;
    }
    aflags.input = input;
    return cmd_analyze(analyze_input, batch_dir, aflags, out, err);
  }
  if (color->parsed()) {
    return cmd_color(color_input, color_output, input, color_oracle, color_trace, out, err);
  }
  if (verify->parsed()) {
    return cmd_verify(verify_graph, verify_coloring, input, verify_json, out, err);
  }
  return cmd_generate(gen_n, gen_girth, gen_edges_set ? gen_edges : gen_n, gen_seed, gen_output,
                      out, err);
}

}  // namespace bchrom::cli
