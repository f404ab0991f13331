#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.h"

namespace domset {

enum class GraphFormat {
  kAuto,
  kEdgeList,  // "u v" per line, '#' comments, optional "# vertices: N" directive
  kDimacs,    // "p edge n m" header, "e u v" lines (1-indexed), "c" comments
  kWeighted,  // "n m", then n weights, then m "u v" lines
};

GraphFormat parse_graph_format(std::string_view name);
std::string_view graph_format_name(GraphFormat format);

struct LoadReport {
  GraphFormat format = GraphFormat::kAuto;
  std::int64_t index_base = 0;
  std::size_t edge_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Parses a graph. Throws ParseError (with line number) on malformed text and
/// RangeError on out-of-range ids. Self-loops and duplicate edges are dropped
/// and counted in `report`.
Graph load_graph(std::istream& in, GraphFormat format = GraphFormat::kAuto,
                 LoadReport* report = nullptr);
Graph load_graph_text(std::string_view text, GraphFormat format = GraphFormat::kAuto,
                      LoadReport* report = nullptr);
Graph load_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::kAuto,
                      LoadReport* report = nullptr);

/// Sniffs the format of a text: DIMACS if the first record starts with 'p',
/// 'c' or 'e'; weighted-instance if the second record does not have exactly
/// two tokens; edge list otherwise.
GraphFormat detect_graph_format(std::string_view text);

/// Writers emit 0-based ids. The edge-list writer always emits the
/// "# vertices: N" directive so that isolated vertices survive a round trip.
void write_edge_list(std::ostream& out, const Graph& g);
void write_dimacs(std::ostream& out, const Graph& g);
void write_weighted_instance(std::ostream& out, const Graph& g);

struct Point {
  double x = 0.0;
  double y = 0.0;
};
/// Coordinate sidecar: "id x y" per line.
void write_coordinates(std::ostream& out, std::span<const Point> points);

/// Solution file: '#' summary header lines then one member label per line.
void write_solution(std::ostream& out, const Graph& g, std::span<const Vertex> members,
                    std::string_view summary);
/// Reads member labels back into dense ids using the graph's index base.
std::vector<Vertex> read_solution(std::istream& in, const Graph& g);
std::vector<Vertex> read_solution_file(const std::filesystem::path& path, const Graph& g);

/// Formats a real without trailing noise: integers print without a point.
std::string format_real(double value);

}  // namespace domset
