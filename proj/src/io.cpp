#include "domset/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "domset/errors.h"

namespace domset {
namespace {

struct Record {
  std::size_t line = 0;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Visits every line with its 1-based number.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    fn(line_no, text.substr(pos, end - pos));
    if (end == text.size()) break;
    pos = end + 1;
  }
}

std::int64_t parse_id(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  if (value < 0) throw ParseError(line, "negative vertex id " + std::string(token));
  return value;
}

double parse_real(std::string_view token, std::size_t line) {
  // from_chars for double is not available on every toolchain we target.
  std::string copy(token);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || copy.empty()) {
    throw ParseError(line, "expected a number, got '" + copy + "'");
  }
  return value;
}

std::optional<std::int64_t> vertices_directive(std::string_view line, std::size_t line_no) {
  // "# vertices: N"
  auto tokens = split(line.substr(1));
  if (tokens.size() == 2 && tokens[0] == "vertices:") return parse_id(tokens[1], line_no);
  return std::nullopt;
}

std::int64_t detect_base(std::int64_t min_id) { return min_id == 0 ? 0 : 1; }

Graph build(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& raw,
            const std::vector<std::size_t>& lines, std::int64_t base, LoadReport& report) {
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto [u, v] = raw[i];
    const std::int64_t du = u - base;
    const std::int64_t dv = v - base;
    if (du < 0 || dv < 0 || du >= static_cast<std::int64_t>(n) ||
        dv >= static_cast<std::int64_t>(n)) {
      throw RangeError("line " + std::to_string(lines[i]) + ": vertex id out of range in edge " +
                       std::to_string(u) + " " + std::to_string(v) + " (n = " +
                       std::to_string(n) + ", base " + std::to_string(base) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(du), static_cast<Vertex>(dv));
  }
  BuildReport build_report;
  Graph g = Graph::from_edges(n, edges, &build_report);
  g.set_index_base(base);
  report.index_base = base;
  report.edge_lines = raw.size();
  report.duplicate_edges = build_report.duplicate_edges;
  report.self_loops = build_report.self_loops;
  return g;
}

Graph parse_edge_list(std::string_view text, LoadReport& report) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::vector<std::size_t> lines;
  std::optional<std::int64_t> declared;
  std::int64_t min_id = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_id = -1;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split(line);
    if (tokens.empty()) return;
    if (tokens[0].front() == '#') {
      if (auto n = vertices_directive(line.substr(line.find('#')), line_no)) declared = n;
      return;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(tokens.size()) +
                                    " tokens");
    }
    const std::int64_t u = parse_id(tokens[0], line_no);
    const std::int64_t v = parse_id(tokens[1], line_no);
    min_id = std::min({min_id, u, v});
    max_id = std::max({max_id, u, v});
    raw.emplace_back(u, v);
    lines.push_back(line_no);
  });
  if (declared) return build(static_cast<std::size_t>(*declared), raw, lines, 0, report);
  if (raw.empty()) return build(0, raw, lines, 0, report);
  const std::int64_t base = detect_base(min_id);
  return build(static_cast<std::size_t>(max_id - base + 1), raw, lines, base, report);
}

Graph parse_dimacs(std::string_view text, LoadReport& report) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::vector<std::size_t> lines;
  std::optional<std::int64_t> n;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_id(tokens[2], line_no);
      parse_id(tokens[3], line_no);
      return;
    }
    if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      raw.emplace_back(parse_id(tokens[1], line_no), parse_id(tokens[2], line_no));
      lines.push_back(line_no);
      return;
    }
    throw ParseError(line_no, "unknown record type '" + std::string(tokens[0]) + "'");
  });
  if (!n) throw ParseError(0, "missing 'p edge' problem line");
  return build(static_cast<std::size_t>(*n), raw, lines, 1, report);
}

Graph parse_weighted(std::string_view text, LoadReport& report) {
  // Flatten to (line, token) pairs; the format is token oriented after the header.
  std::vector<std::pair<std::size_t, std::string_view>> tokens;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto parts = split(line);
    if (parts.empty() || parts[0].front() == '#') return;
    for (auto t : parts) tokens.emplace_back(line_no, t);
  });
  if (tokens.size() < 2) throw ParseError(tokens.empty() ? 0 : tokens[0].first, "missing 'n m' header");
  const std::int64_t n = parse_id(tokens[0].second, tokens[0].first);
  const std::int64_t m = parse_id(tokens[1].second, tokens[1].first);
  const std::size_t needed = 2 + static_cast<std::size_t>(n) + 2 * static_cast<std::size_t>(m);
  if (tokens.size() < needed) {
    throw ParseError(tokens.back().first, "weighted instance truncated: expected " +
                                              std::to_string(n) + " weights and " +
                                              std::to_string(m) + " edges");
  }
  if (tokens.size() > needed) throw ParseError(tokens[needed].first, "trailing data after last edge");

  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const auto& [line, tok] = tokens[2 + i];
    const double w = parse_real(tok, line);
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line, "weight must be positive");
    weights.push_back(w);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::vector<std::size_t> lines;
  std::int64_t min_id = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_id = -1;
  for (std::size_t e = 0; e < static_cast<std::size_t>(m); ++e) {
    const auto& [lu, tu] = tokens[2 + n + 2 * e];
    const auto& [lv, tv] = tokens[2 + n + 2 * e + 1];
    if (lu != lv) throw ParseError(lu, "edge split across lines");
    const std::int64_t u = parse_id(tu, lu);
    const std::int64_t v = parse_id(tv, lv);
    min_id = std::min({min_id, u, v});
    max_id = std::max({max_id, u, v});
    raw.emplace_back(u, v);
    lines.push_back(lu);
  }
  std::int64_t base = 0;
  if (!raw.empty() && min_id > 0) base = 1;
  (void)max_id;
  Graph g = build(static_cast<std::size_t>(n), raw, lines, base, report);
  g.set_weights(std::move(weights));
  return g;
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edge-list" || name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dimacs" || name == "dimacs-col" || name == "col") return GraphFormat::kDimacs;
  if (name == "weighted" || name == "weighted-instance") return GraphFormat::kWeighted;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

std::string_view graph_format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::kAuto: return "auto";
    case GraphFormat::kEdgeList: return "edge-list";
    case GraphFormat::kDimacs: return "dimacs-col";
    case GraphFormat::kWeighted: return "weighted-instance";
  }
  return "unknown";
}

GraphFormat detect_graph_format(std::string_view text) {
  std::vector<std::vector<std::string_view>> records;
  std::size_t pos = 0;
  while (pos < text.size() && records.size() < 2) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = split(text.substr(pos, end - pos));
    pos = end + 1;
    if (tokens.empty()) continue;
    if (records.empty() && (tokens[0] == "p" || tokens[0] == "c" || tokens[0] == "e")) {
      return GraphFormat::kDimacs;
    }
    if (tokens[0].front() == '#') continue;
    records.push_back(std::move(tokens));
  }
  if (records.size() == 2 && records[0].size() == 2 && records[1].size() != 2) {
    return GraphFormat::kWeighted;
  }
  return GraphFormat::kEdgeList;
}

Graph load_graph_text(std::string_view text, GraphFormat format, LoadReport* report) {
  LoadReport local;
  if (format == GraphFormat::kAuto) format = detect_graph_format(text);
  local.format = format;
  Graph g;
  switch (format) {
    case GraphFormat::kEdgeList: g = parse_edge_list(text, local); break;
    case GraphFormat::kDimacs: g = parse_dimacs(text, local); break;
    case GraphFormat::kWeighted: g = parse_weighted(text, local); break;
    case GraphFormat::kAuto: break;
  }
  if (report != nullptr) *report = local;
  return g;
}

Graph load_graph(std::istream& in, GraphFormat format, LoadReport* report) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_graph_text(text, format, report);
}

Graph load_graph_file(const std::filesystem::path& path, GraphFormat format, LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file " + path.string());
  try {
    return load_graph(in, format, report);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  } catch (const RangeError& e) {
    throw RangeError(path.string() + ": " + e.what());
  }
}

std::string format_real(double value) {
  if (std::isfinite(value) && value == std::nearbyint(value) && std::fabs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices: " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_weighted_instance(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << format_real(g.weight(v)) << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_coordinates(std::ostream& out, std::span<const Point> points) {
  char buf[96];
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", i, points[i].x, points[i].y);
    out << buf;
  }
}

void write_solution(std::ostream& out, const Graph& g, std::span<const Vertex> members,
                    std::string_view summary) {
  std::vector<Vertex> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  double weight = 0.0;
  for (Vertex v : sorted) weight += g.weight(v);
  out << "# " << summary << '\n';
  out << "# size " << sorted.size() << " weight " << format_real(weight) << '\n';
  for (Vertex v : sorted) out << g.label(v) << '\n';
}

std::vector<Vertex> read_solution(std::istream& in, const Graph& g) {
  std::vector<Vertex> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 1) throw ParseError(line_no, "expected one vertex id per line");
    const std::int64_t id = parse_id(tokens[0], line_no) - g.index_base();
    if (id < 0 || id >= static_cast<std::int64_t>(g.num_vertices())) {
      throw RangeError("line " + std::to_string(line_no) + ": vertex " + std::string(tokens[0]) +
                       " not in graph");
    }
    out.push_back(static_cast<Vertex>(id));
  }
  return out;
}

std::vector<Vertex> read_solution_file(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open solution file " + path.string());
  return read_solution(in, g);
}

}  // namespace domset
