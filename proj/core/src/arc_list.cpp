#include "linkirr/arc_list.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

namespace linkirr {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::uint64_t> fields;
};

std::vector<std::uint64_t> split_numbers(std::string_view s, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    std::uint64_t value = 0;
    const auto* first = s.data() + i;
    const auto* last = s.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw ParseError(line_no, "expected a nonnegative integer, got '" +
                                    std::string(s.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && raw[first] != '#')
      lines.push_back({number, split_numbers(raw, number)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

struct Body {
  std::size_t n = 0;
  std::size_t declared_max_label = 0;
  std::vector<Line> rows;
};

Body parse_body(std::string_view text, std::size_t header_fields, std::size_t row_fields) {
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line");
  const Line& header = lines.front();
  if (header.fields.size() != header_fields)
    throw ParseError(header.number,
                     "header must have " + std::to_string(header_fields) + " fields");
  Body body;
  body.n = header.fields[0];
  if (body.n > kMaxOrder)
    throw ParseError(header.number, "order " + std::to_string(body.n) + " exceeds " +
                                        std::to_string(kMaxOrder));
  const std::size_t m = header.fields[1];
  if (header_fields > 2) body.declared_max_label = header.fields[2];
  if (lines.size() - 1 != m)
    throw ParseError(lines.size() > m + 1 ? lines[m + 1].number : 0,
                     "header declares " + std::to_string(m) + " lines but found " +
                         std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].fields.size() != row_fields)
      throw ParseError(lines[i].number, "expected " + std::to_string(row_fields) + " fields");
    for (std::size_t f = 0; f < 2; ++f)
      if (lines[i].fields[f] >= body.n)
        throw ParseError(lines[i].number, "vertex " + std::to_string(lines[i].fields[f]) +
                                              " outside [0, " + std::to_string(body.n) + ")");
    if (lines[i].fields[0] == lines[i].fields[1])
      throw ParseError(lines[i].number, "self-loop at vertex " + std::to_string(lines[i].fields[0]));
  }
  body.rows.assign(lines.begin() + 1, lines.end());
  return body;
}

std::string header_comments(const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  return out;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  Body body = parse_body(text, 2, 2);
  std::vector<Arc> arcs;
  std::vector<VertexSet> seen(body.n);
  for (const auto& row : body.rows) {
    Arc a{static_cast<Vertex>(row.fields[0]), static_cast<Vertex>(row.fields[1])};
    if (seen[a.tail].test(a.head)) throw ParseError(row.number, "duplicate arc");
    seen[a.tail].set(a.head);
    arcs.push_back(a);
  }
  return Digraph::from_arcs(body.n, arcs);
}

UndirectedGraph parse_undirected(std::string_view text) {
  Body body = parse_body(text, 2, 2);
  std::vector<Edge> edges;
  std::vector<VertexSet> seen(body.n);
  for (const auto& row : body.rows) {
    Edge e = make_edge(static_cast<Vertex>(row.fields[0]), static_cast<Vertex>(row.fields[1]));
    if (seen[e.u].test(e.v)) throw ParseError(row.number, "duplicate edge");
    seen[e.u].set(e.v);
    edges.push_back(e);
  }
  return UndirectedGraph::from_edges(body.n, edges);
}

LabeledGraph parse_labeled(std::string_view text) {
  Body body = parse_body(text, 3, 3);
  std::vector<LabeledGraph::LabeledEdge> edges;
  std::uint64_t max_label = 0;
  std::vector<VertexSet> seen(body.n);
  for (const auto& row : body.rows) {
    Edge e = make_edge(static_cast<Vertex>(row.fields[0]), static_cast<Vertex>(row.fields[1]));
    if (seen[e.u].test(e.v)) throw ParseError(row.number, "duplicate edge");
    seen[e.u].set(e.v);
    const std::uint64_t label = row.fields[2];
    if (label == 0 || label > UINT32_MAX) throw ParseError(row.number, "label must be positive");
    max_label = std::max(max_label, label);
    edges.push_back({e, static_cast<std::uint32_t>(label)});
  }
  if (max_label != body.declared_max_label)
    throw ParseError(0, "header declares max label " + std::to_string(body.declared_max_label) +
                            " but the largest label is " + std::to_string(max_label));
  return LabeledGraph::from_edges(body.n, edges);
}

std::string format_digraph(const Digraph& d, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << header_comments(comments) << d.order() << ' ' << d.size() << '\n';
  for (const auto& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

std::string format_undirected(const UndirectedGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << header_comments(comments) << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string format_labeled(const LabeledGraph& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << header_comments(comments) << g.order() << ' ' << g.size() << ' ' << g.max_label() << '\n';
  for (const auto& le : g.labeled_edges())
    os << le.edge.u << ' ' << le.edge.v << ' ' << le.label << '\n';
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Digraph load_digraph(const std::filesystem::path& path) {
  return parse_digraph(read_text_file(path));
}
UndirectedGraph load_undirected(const std::filesystem::path& path) {
  return parse_undirected(read_text_file(path));
}
LabeledGraph load_labeled(const std::filesystem::path& path) {
  return parse_labeled(read_text_file(path));
}

}  // namespace linkirr
