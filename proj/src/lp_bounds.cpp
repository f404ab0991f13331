#include "domset/lp_bounds.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "domset/errors.h"
#include "domset/io.h"

namespace domset {
namespace {

constexpr std::size_t kWrapColumn = 78;
constexpr double kCeilingEpsilon = 1e-6;

class RowWriter {
 public:
  RowWriter(std::ostream& out, std::string_view head) : out_(out) {
    out_ << ' ' << head;
    column_ = head.size() + 1;
  }

  void term(double coefficient, Vertex v, bool first) {
    std::string text = first ? std::string() : std::string("+ ");
    if (coefficient != 1.0) text += format_real(coefficient) + ' ';
    text += 'x' + std::to_string(v);
    put(text);
  }

  void finish(std::string_view tail) {
    if (!tail.empty()) put(tail);
    out_ << '\n';
  }

 private:
  // Continuation lines start with two blanks.
  void put(std::string_view text) {
    if (column_ + 1 + text.size() > kWrapColumn) {
      out_ << "\n ";
      column_ = 1;
    }
    out_ << ' ' << text;
    column_ += 1 + text.size();
  }

  std::ostream& out_;
  std::size_t column_ = 0;
};

// ---- parsing -------------------------------------------------------------

enum class TokenKind { kName, kNumber, kColon, kPlus, kMinus, kLessEqual, kGreaterEqual, kEqual };

struct Token {
  TokenKind kind;
  std::string text;
  double number = 0.0;
  std::size_t line = 0;
};

bool is_name_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("_.[]{}!\"#$%&()/,;?@`'|~^").find(c) != std::string_view::npos;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void tokenize_line(std::string_view line, std::size_t line_no, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.')) ++j;
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
        if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          while (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
          j = k;
        }
      }
      Token t{TokenKind::kNumber, std::string(line.substr(i, j - i)), 0.0, line_no};
      const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(line_no, "malformed number '" + t.text + "'");
      }
      out.push_back(std::move(t));
      i = j;
    } else if (c == ':') {
      out.push_back({TokenKind::kColon, ":", 0.0, line_no});
      ++i;
    } else if (c == '+') {
      out.push_back({TokenKind::kPlus, "+", 0.0, line_no});
      ++i;
    } else if (c == '-') {
      out.push_back({TokenKind::kMinus, "-", 0.0, line_no});
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t j = i + 1;
      if (j < line.size() && (line[j] == '=' || line[j] == '<' || line[j] == '>')) ++j;
      const std::string op(line.substr(i, j - i));
      TokenKind kind;
      if (op == "<" || op == "<=" || op == "=<") {
        kind = TokenKind::kLessEqual;
      } else if (op == ">" || op == ">=" || op == "=>") {
        kind = TokenKind::kGreaterEqual;
      } else if (op == "=") {
        kind = TokenKind::kEqual;
      } else {
        throw ParseError(line_no, "unknown operator '" + op + "'");
      }
      out.push_back({kind, op, 0.0, line_no});
      i = j;
    } else if (is_name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(line[j])) ++j;
      out.push_back({TokenKind::kName, std::string(line.substr(i, j - i)), 0.0, line_no});
      i = j;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
}

enum class Section { kNone, kObjective, kConstraints, kBounds, kEnd };

std::optional<std::pair<Section, bool>> section_keyword(std::string_view trimmed) {
  const std::string k = lower(trimmed);
  if (k == "minimize" || k == "minimise" || k == "minimum" || k == "min") return {{Section::kObjective, true}};
  if (k == "maximize" || k == "maximise" || k == "maximum" || k == "max") return {{Section::kObjective, false}};
  if (k == "subject to" || k == "such that" || k == "st" || k == "s.t." || k == "st.") {
    return {{Section::kConstraints, true}};
  }
  if (k == "bounds" || k == "bound") return {{Section::kBounds, true}};
  if (k == "end") return {{Section::kEnd, true}};
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class ModelBuilder {
 public:
  explicit ModelBuilder(LpModel& model) : model_(model) {}

  std::size_t variable(const std::string& name) {
    const auto [it, inserted] = index_.try_emplace(name, model_.variables.size());
    if (inserted) {
      model_.variables.push_back(name);
      model_.lower.push_back(0.0);
      model_.upper.push_back(std::numeric_limits<double>::infinity());
    }
    return it->second;
  }

 private:
  LpModel& model_;
  std::unordered_map<std::string, std::size_t> index_;
};

class Cursor {
 public:
  Cursor(const std::vector<Token>& tokens, std::size_t fallback_line)
      : tokens_(tokens), fallback_line_(fallback_line) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek(std::size_t ahead = 0) const { return tokens_[pos_ + ahead]; }
  bool has(std::size_t ahead) const { return pos_ + ahead < tokens_.size(); }
  const Token& take() {
    if (done()) fail("unexpected end of section");
    return tokens_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(done() ? fallback_line_ : peek().line, what);
  }
  bool at(TokenKind kind) const { return !done() && peek().kind == kind; }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t fallback_line_;
};

bool is_sense(TokenKind k) {
  return k == TokenKind::kLessEqual || k == TokenKind::kGreaterEqual || k == TokenKind::kEqual;
}

Sense to_sense(TokenKind k) {
  if (k == TokenKind::kLessEqual) return Sense::kLessEqual;
  if (k == TokenKind::kGreaterEqual) return Sense::kGreaterEqual;
  return Sense::kEqual;
}

bool is_infinity_name(const std::string& s) {
  const std::string k = lower(s);
  return k == "inf" || k == "infinity";
}

// Optional "name:" prefix.
std::string row_label(Cursor& c) {
  if (c.at(TokenKind::kName) && c.has(1) && c.peek(1).kind == TokenKind::kColon) {
    std::string name = c.take().text;
    c.take();
    return name;
  }
  return {};
}

// Terms until a sense operator or the end of the section.
std::vector<LpTerm> linear_expression(Cursor& c, ModelBuilder& vars) {
  std::vector<LpTerm> terms;
  while (!c.done() && !is_sense(c.peek().kind)) {
    double sign = 1.0;
    bool signed_term = false;
    while (c.at(TokenKind::kPlus) || c.at(TokenKind::kMinus)) {
      if (c.take().kind == TokenKind::kMinus) sign = -sign;
      signed_term = true;
    }
    if (!terms.empty() && !signed_term) c.fail("expected '+' or '-' between terms");
    double coefficient = 1.0;
    if (c.at(TokenKind::kNumber)) coefficient = c.take().number;
    if (!c.at(TokenKind::kName)) c.fail("expected a variable name");
    const Token& name = c.take();
    // A name followed by ':' starts the next row.
    if (c.at(TokenKind::kColon)) c.fail("missing comparison before row '" + name.text + "'");
    terms.push_back({sign * coefficient, vars.variable(name.text)});
  }
  return terms;
}

double signed_value(Cursor& c) {
  double sign = 1.0;
  while (c.at(TokenKind::kPlus) || c.at(TokenKind::kMinus)) {
    if (c.take().kind == TokenKind::kMinus) sign = -sign;
  }
  if (c.at(TokenKind::kNumber)) return sign * c.take().number;
  if (c.at(TokenKind::kName) && is_infinity_name(c.peek().text)) {
    c.take();
    return sign * std::numeric_limits<double>::infinity();
  }
  c.fail("expected a number");
}

bool starts_value(const Cursor& c) {
  if (c.done()) return false;
  const Token& t = c.peek();
  return t.kind == TokenKind::kNumber || t.kind == TokenKind::kPlus || t.kind == TokenKind::kMinus ||
         (t.kind == TokenKind::kName && is_infinity_name(t.text));
}

void apply_bound(LpModel& m, std::size_t v, TokenKind op, double value, bool value_on_left) {
  if (op == TokenKind::kEqual) {
    m.lower[v] = m.upper[v] = value;
  } else if ((op == TokenKind::kLessEqual) == value_on_left) {
    m.lower[v] = value;
  } else {
    m.upper[v] = value;
  }
}

void parse_bounds(Cursor& c, LpModel& m, ModelBuilder& vars) {
  while (!c.done()) {
    if (starts_value(c)) {
      const double a = signed_value(c);
      const Token& op = c.take();
      if (!is_sense(op.kind)) c.fail("expected a comparison in bound");
      if (!c.at(TokenKind::kName)) c.fail("expected a variable name in bound");
      const std::size_t v = vars.variable(c.take().text);
      apply_bound(m, v, op.kind, a, true);
      if (!c.done() && is_sense(c.peek().kind)) {
        const TokenKind op2 = c.take().kind;
        apply_bound(m, v, op2, signed_value(c), false);
      }
    } else if (c.at(TokenKind::kName)) {
      const std::size_t v = vars.variable(c.take().text);
      if (c.at(TokenKind::kName) && lower(c.peek().text) == "free") {
        c.take();
        m.lower[v] = -std::numeric_limits<double>::infinity();
        m.upper[v] = std::numeric_limits<double>::infinity();
        continue;
      }
      if (c.done() || !is_sense(c.peek().kind)) c.fail("expected a comparison in bound");
      const TokenKind op = c.take().kind;
      apply_bound(m, v, op, signed_value(c), false);
    } else {
      c.fail("unexpected token '" + c.peek().text + "' in bounds");
    }
  }
}

}  // namespace

std::string emit_lp(const Graph& g) {
  std::ostringstream out;
  write_lp(out, g);
  return out.str();
}

void write_lp(std::ostream& out, const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  out << "\\ dominating set LP relaxation: " << n << " vertices, " << g.num_edges() << " edges\n";
  out << "Minimize\n";
  {
    RowWriter row(out, "obj:");
    for (Vertex v = 0; v < n; ++v) row.term(g.weight(v), v, v == 0);
    row.finish("");
  }
  out << "Subject To\n";
  for (Vertex v = 0; v < n; ++v) {
    RowWriter row(out, "c" + std::to_string(v) + ":");
    bool first = true;
    bool self_written = false;
    for (Vertex u : g.neighbors(v)) {
      if (!self_written && v < u) {
        row.term(1.0, v, first);
        first = false;
        self_written = true;
      }
      row.term(1.0, u, first);
      first = false;
    }
    if (!self_written) row.term(1.0, v, first);
    row.finish(">= 1");
  }
  out << "Bounds\n";
  for (Vertex v = 0; v < n; ++v) out << " 0 <= x" << v << " <= 1\n";
  out << "End\n";
}

std::size_t LpModel::variable_index(std::string_view name) const {
  const auto it = std::find(variables.begin(), variables.end(), name);
  return it == variables.end() ? SIZE_MAX : static_cast<std::size_t>(it - variables.begin());
}

LpModel parse_lp(std::string_view text) {
  LpModel model;
  ModelBuilder vars(model);
  Section section = Section::kNone;
  bool seen_objective = false;
  std::vector<Token> tokens;
  std::size_t line_no = 0;

  auto flush = [&] {
    Cursor c(tokens, line_no);
    switch (section) {
      case Section::kNone:
        if (!tokens.empty()) c.fail("text before the objective section");
        break;
      case Section::kObjective:
        row_label(c);
        model.objective = linear_expression(c, vars);
        if (!c.done()) c.fail("comparison in objective");
        break;
      case Section::kConstraints:
        while (!c.done()) {
          LpConstraint row;
          row.name = row_label(c);
          row.terms = linear_expression(c, vars);
          if (row.terms.empty()) c.fail("constraint without terms");
          if (c.done()) c.fail("constraint without comparison");
          row.sense = to_sense(c.take().kind);
          row.rhs = signed_value(c);
          if (row.name.empty()) row.name = "R" + std::to_string(model.constraints.size() + 1);
          model.constraints.push_back(std::move(row));
        }
        break;
      case Section::kBounds:
        parse_bounds(c, model, vars);
        break;
      case Section::kEnd:
        if (!tokens.empty()) c.fail("text after End");
        break;
    }
    tokens.clear();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto bs = line.find('\\'); bs != std::string_view::npos) line = line.substr(0, bs);
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (const auto kw = section_keyword(trimmed)) {
      flush();
      if (section == Section::kEnd) throw ParseError(line_no, "text after End");
      if (kw->first == Section::kObjective) {
        if (seen_objective) throw ParseError(line_no, "second objective section");
        seen_objective = true;
        model.minimize = kw->second;
      } else if (!seen_objective) {
        throw ParseError(line_no, "section before the objective");
      }
      section = kw->first;
      continue;
    }
    if (section == Section::kEnd) throw ParseError(line_no, "text after End");
    tokenize_line(trimmed, line_no, tokens);
  }
  flush();
  if (!seen_objective) throw ParseError(line_no, "missing objective section");
  if (section != Section::kEnd) throw ParseError(line_no, "missing End");
  return model;
}

double ingest_bound(double value, Problem problem) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidArgument("lower bound must be a finite non-negative number, got " + format_real(value));
  }
  if (problem == Problem::kMwds) return value;
  return std::max(0.0, std::ceil(value - kCeilingEpsilon));
}

double read_bound_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(path.string() + ": cannot open bound file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError(1, path.string() + ": expected a single real number");
  }
  return value;
}

}  // namespace domset
