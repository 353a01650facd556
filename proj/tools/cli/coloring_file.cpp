#include "cli/coloring_file.hpp"

#include <charconv>
#include <sstream>

#include "bchrom/errors.hpp"

namespace bchrom::cli {

namespace {

template <typename T>
T parse_int(std::string_view token, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

Vertex resolve(const Graph& g, std::string_view token, std::size_t line_no) {
  auto v = g.find(parse_int<Label>(token, line_no));
  if (!v) throw ParseError(line_no, "unknown vertex " + std::string(token));
  return *v;
}

}  // namespace

std::string write_coloring(const Graph& g, const BResult& result) {
  std::ostringstream out;
  out << "# k=" << result.chi_b << " basis=";
  for (std::size_t c = 0; c < result.basis.size(); ++c) {
    if (c > 0) out << ',';
    out << g.label(result.basis[c]) << ':' << c + 1;
  }
  out << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    out << g.label(v) << ' ' << result.coloring[v] << '\n';
  }
  return out.str();
}

ColoringFile parse_coloring(const Graph& g, std::string_view text) {
  ColoringFile file;
  file.coloring.assign(g.order(), kUncolored);
  bool have_header = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first.front() == '#') {
      std::string body = line.substr(line.find('#') + 1);
      std::istringstream header(body);
      std::string item;
      while (header >> item) {
        if (item.rfind("k=", 0) == 0) {
          file.k = parse_int<std::size_t>(std::string_view(item).substr(2), line_no);
          have_header = true;
        } else if (item.rfind("basis=", 0) == 0) {
          std::string_view list = std::string_view(item).substr(6);
          while (!list.empty()) {
            std::size_t comma = list.find(',');
            std::string_view entry = list.substr(0, comma);
            std::size_t colon = entry.find(':');
            if (colon == std::string_view::npos) {
              throw ParseError(line_no, "basis entry must be <label>:<color>");
            }
            file.basis.emplace_back(resolve(g, entry.substr(0, colon), line_no),
                                    parse_int<Color>(entry.substr(colon + 1), line_no));
            list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
          }
        }
      }
      continue;
    }
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra)) {
      throw ParseError(line_no, "expected '<vertex> <color>'");
    }
    Vertex v = resolve(g, first, line_no);
    if (file.coloring[v] != kUncolored) {
      throw ParseError(line_no, "vertex " + first + " colored twice");
    }
    Color c = parse_int<Color>(second, line_no);
    if (c == kUncolored) throw ParseError(line_no, "color 0 is reserved for uncolored");
    file.coloring[v] = c;
  }

  if (!have_header) throw ParseError(0, "missing '# k=<k>' header");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (file.coloring[v] == kUncolored) {
      throw ParseError(0, "vertex " + std::to_string(g.label(v)) + " has no color");
    }
  }
  return file;
}

}  // namespace bchrom::cli
