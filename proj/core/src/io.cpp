#include "bchrom/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bchrom/errors.hpp"

namespace bchrom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(text.substr(pos, end - pos), line_no);
    pos = end + 1;
  }
}

// Collects labeled vertices and edges and rejects loops/duplicates with the
// offending line number.
class LabeledBuilder {
 public:
  Vertex vertex(Label label) {
    auto [it, inserted] = index_.try_emplace(label, labels_.size());
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void edge(Label a, Label b, std::size_t line_no) {
    if (a == b) {
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen_.insert(key).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    edges_.emplace_back(vertex(a), vertex(b));
  }

  std::size_t vertex_count() const { return labels_.size(); }

  void pad_to(std::size_t n) {
    Label next = 0;
    while (labels_.size() < n) {
      while (index_.count(next) != 0) ++next;
      vertex(next);
    }
  }

  Graph build() { return Graph::from_labeled_edges(std::move(labels_), edges_); }

 private:
  std::map<Label, Vertex> index_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::set<std::pair<Label, Label>> seen_;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LabeledBuilder builder;
  std::optional<std::size_t> declared;
  std::size_t declared_line = 0;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto tokens = split_ws(line);
    if (tokens.empty()) return;
    if (tokens.front().front() == '#') {
      // "# n=<count>" may be written with or without a space after '#'.
      std::string_view body = line.substr(line.find('#') + 1);
      auto rest = split_ws(body);
      if (rest.size() == 1 && rest.front().substr(0, 2) == "n=") {
        declared = parse_number(rest.front().substr(2), line_no);
        declared_line = line_no;
      }
      return;
    }
    if (tokens.size() == 1) {
      builder.vertex(parse_number(tokens[0], line_no));
    } else if (tokens.size() == 2) {
      builder.edge(parse_number(tokens[0], line_no), parse_number(tokens[1], line_no), line_no);
    } else {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(tokens.size()) + " tokens");
    }
  });

  if (declared) {
    if (*declared < builder.vertex_count()) {
      throw ParseError(declared_line, "declared n=" + std::to_string(*declared) + " but " +
                                          std::to_string(builder.vertex_count()) +
                                          " vertices appear");
    }
    builder.pad_to(*declared);
  }
  return builder.build();
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t expected_edges = 0;
  std::size_t p_line = 0;
  LabeledBuilder builder;
  std::size_t edge_lines = 0;

  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front() == "c") return;
    if (tokens.front() == "p") {
      if (n) throw ParseError(line_no, "second problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_number(tokens[2], line_no);
      expected_edges = parse_number(tokens[3], line_no);
      p_line = line_no;
      for (Label v = 1; v <= *n; ++v) builder.vertex(v);
      return;
    }
    if (tokens.front() == "e") {
      if (!n) throw ParseError(line_no, "edge before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      Label a = parse_number(tokens[1], line_no);
      Label b = parse_number(tokens[2], line_no);
      if (a < 1 || b < 1 || a > *n || b > *n) {
        throw ParseError(line_no, "vertex out of range 1.." + std::to_string(*n));
      }
      builder.edge(a, b, line_no);
      ++edge_lines;
      return;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens.front()) + "'");
  });

  if (!n) throw ParseError(0, "missing 'p edge' line");
  if (edge_lines != expected_edges) {
    throw ParseError(p_line, "problem line declares " + std::to_string(expected_edges) +
                                 " edges, found " + std::to_string(edge_lines));
  }
  return builder.build();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << '\n';

  // Isolated vertices are implied by the header only when padding would
  // regenerate exactly their labels.
  std::set<Label> used;
  std::vector<Label> isolated;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      isolated.push_back(g.label(v));
    } else {
      used.insert(g.label(v));
    }
  }
  std::vector<Label> padded;
  for (Label next = 0; padded.size() < isolated.size(); ++next) {
    if (used.count(next) == 0) padded.push_back(next);
  }
  if (padded != isolated) {
    for (Label l : isolated) out << l << '\n';
  }
  for (const auto& [u, v] : g.edges()) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
  return out.str();
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".col" ? GraphFormat::dimacs : GraphFormat::edge_list;
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw ArgumentError("unknown format '" + std::string(name) + "' (expected edgelist or dimacs)");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  const std::string text = read_text_file(path);
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

}  // namespace bchrom
