#pragma once

// LP relaxation export and lower-bound ingestion. The LP itself is solved by
// an external solver; see README.md for the exact text layout.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "domset/graph.h"

namespace domset {

/// min sum w(v) x_v  s.t.  sum_{u in N[v]} x_u >= 1 for every v,  0 <= x <= 1.
/// Variables are x<id>, constraints c<id>; unit weights are written without
/// a coefficient. Long rows wrap onto continuation lines.
std::string emit_lp(const Graph& g);
void write_lp(std::ostream& out, const Graph& g);

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct LpTerm {
  double coefficient = 1.0;
  std::size_t variable = 0;
};

struct LpConstraint {
  std::string name;
  std::vector<LpTerm> terms;
  Sense sense = Sense::kGreaterEqual;
  double rhs = 0.0;
};

struct LpModel {
  bool minimize = true;
  std::vector<std::string> variables;  // in order of first appearance
  std::vector<LpTerm> objective;
  std::vector<LpConstraint> constraints;
  std::vector<double> lower;  // per variable; default 0
  std::vector<double> upper;  // per variable; default +inf

  std::size_t variable_index(std::string_view name) const;  // SIZE_MAX when absent
};

/// Parses the LP subset that emit_lp writes: '\' comments, the four section
/// keywords (case-insensitive), named rows, "a <= x <= b" and "x <= b" /
/// "x >= a" bounds, and terms spread over several lines. Throws ParseError.
LpModel parse_lp(std::string_view text);

enum class Problem { kMds, kMwds };

/// Turns an LP optimum into a stopping bound: ceil(value - 1e-6) for MDS,
/// the value itself for MWDS. Throws InvalidArgument on a negative or
/// non-finite value.
double ingest_bound(double value, Problem problem);

/// Reads a single real from a text file (surrounding whitespace allowed).
double read_bound_file(const std::filesystem::path& path);

}  // namespace domset
