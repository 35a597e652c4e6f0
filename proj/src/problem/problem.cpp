#include "problem/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace secant {

namespace {

const char* const kRoles[] = {"seq", "ambient", "target", "cofactors"};

bool is_role(std::string_view k) {
  return std::find(std::begin(kRoles), std::end(kRoles), k) != std::end(kRoles);
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Line {
  std::size_t number;
  std::string_view text;

  [[noreturn]] void fail(std::size_t column, const std::string& msg, ErrorCode code = ErrorCode::Syntax) const {
    throw Error(code, "line " + std::to_string(number) + ", column " + std::to_string(column + 1) + ": " + msg);
  }
};

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return i;
}

std::size_t trim_end(std::string_view s, std::size_t end) {
  while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
  return end;
}

// Comma separated items with their start columns.
std::vector<std::pair<std::string, std::size_t>> split_list(const Line& line, std::size_t begin, std::size_t end) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = begin;
  while (true) {
    i = skip_space(line.text, i);
    std::size_t j = i;
    while (j < end && line.text[j] != ',') ++j;
    const std::size_t stop = trim_end(line.text, j);
    if (stop <= i) line.fail(i, "empty list item");
    out.emplace_back(std::string(line.text.substr(i, stop - i)), i);
    if (j >= end) break;
    i = j + 1;
  }
  return out;
}

std::uint32_t parse_count(const Line& line, const std::string& s, std::size_t col) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    line.fail(col, "expected a non-negative integer, got '" + s + "'");
  return static_cast<std::uint32_t>(std::stoul(s));
}

Coeff parse_constant(const Line& line, const std::string& s, std::size_t col, const BaseRing& base) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) line.fail(col, "expected an integer or a/b, got '" + s + "'");
  if (q.get_den() == 0) line.fail(col, "zero denominator");
  q.canonicalize();
  try {
    return base.from_rational(q);
  } catch (const Error& e) {
    line.fail(col, e.what(), e.code());
  }
}

}  // namespace

const MultiPoly* ProblemSpec::find(std::string_view name) const {
  for (const auto& p : polys)
    if (p.name == name) return &p.poly;
  return nullptr;
}

std::optional<std::vector<std::string>> ProblemSpec::role(std::string_view key) const {
  for (const auto& [k, v] : roles)
    if (k == key) return v;
  return std::nullopt;
}

PolyVector ProblemSpec::resolve(const std::vector<std::string>& names) const {
  PolyVector out;
  for (const auto& n : names) {
    const MultiPoly* p = find(n);
    if (!p) throw Error(ErrorCode::InvalidArgument, "unknown polynomial '" + n + "'");
    out.push_back(*p);
  }
  return out;
}

PolyVector ProblemSpec::sequence() const {
  if (auto s = role("seq")) return resolve(*s);
  std::set<std::string> used;
  for (const auto& [k, v] : roles) used.insert(v.begin(), v.end());
  PolyVector out;
  for (const auto& p : polys)
    if (!used.count(p.name)) out.push_back(p.poly);
  return out;
}

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  std::optional<BaseRing> base;
  std::optional<std::vector<std::string>> vars;
  std::set<std::string> names;
  std::vector<std::pair<Line, std::size_t>> role_lines;

  auto ring = [&](const Line& line) -> const PolyRingPtr& {
    if (!spec.ring) {
      if (!base) line.fail(0, "'ring' must be declared before use");
      if (!vars) line.fail(0, "'vars' must be declared before use");
      spec.ring = make_poly_ring(*base, *vars);
    }
    return spec.ring;
  };
  auto claim = [&](const Line& line, const std::string& name, std::size_t col) {
    if (!is_name(name)) line.fail(col, "invalid name '" + name + "'");
    if (!names.insert(name).second) line.fail(col, "duplicate name '" + name + "'");
  };

  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    Line line{++number, text.substr(pos, nl - pos)};
    pos = nl + 1;

    std::size_t end = line.text.find('#');
    if (end == std::string_view::npos) end = line.text.size();
    end = trim_end(line.text, end);
    const std::size_t start = skip_space(line.text, 0);
    if (start >= end) {
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t eq = line.text.find('=', start);
    if (eq == std::string_view::npos || eq >= end) line.fail(start, "expected 'key = value'");
    const std::size_t key_end = trim_end(line.text, eq);
    if (key_end <= start) line.fail(start, "missing key before '='");
    const std::string key(line.text.substr(start, key_end - start));
    const std::size_t vstart = skip_space(line.text, eq + 1);
    if (vstart >= end) line.fail(eq + 1, "missing value after '='");
    const std::string value(line.text.substr(vstart, end - vstart));

    if (key == "ring") {
      if (base) line.fail(start, "duplicate 'ring'");
      if (spec.ring) line.fail(start, "'ring' must precede polynomials");
      try {
        base = parse_base_ring(value);
      } catch (const Error& e) {
        line.fail(vstart, e.what(), e.code());
      }
    } else if (key == "vars") {
      if (vars) line.fail(start, "duplicate 'vars'");
      vars.emplace();
      for (auto& [v, col] : split_list(line, vstart, end)) {
        if (!is_name(v)) line.fail(col, "invalid variable name '" + v + "'");
        if (std::find(vars->begin(), vars->end(), v) != vars->end()) line.fail(col, "duplicate variable '" + v + "'");
        vars->push_back(v);
      }
    } else if (key == "order") {
      if (spec.order) line.fail(start, "duplicate 'order'");
      if (value != "lex" && value != "grevlex") line.fail(vstart, "order must be lex or grevlex");
      spec.order = parse_order(value);
    } else if (key == "max-degree") {
      if (spec.max_degree) line.fail(start, "duplicate 'max-degree'");
      spec.max_degree = parse_count(line, value, vstart);
    } else if (key == "grade") {
      if (spec.grade) line.fail(start, "duplicate 'grade'");
      spec.grade = parse_count(line, value, vstart);
    } else if (is_role(key)) {
      if (spec.role(key)) line.fail(start, "duplicate '" + key + "'");
      std::vector<std::string> list;
      for (auto& [v, col] : split_list(line, vstart, end)) list.push_back(v);
      spec.roles.emplace_back(key, std::move(list));
      role_lines.emplace_back(line, vstart);
    } else if (key.rfind("ideal", 0) == 0 && key.size() > 5 && (key[5] == ' ' || key[5] == '\t')) {
      const std::size_t name_col = skip_space(line.text, start + 5);
      const std::string name(line.text.substr(name_col, key_end - name_col));
      claim(line, name, name_col);
      const BaseRing& R = ring(line)->base;
      NamedIdeal id{name, {}, {}};
      for (auto& [v, col] : split_list(line, vstart, end)) id.generators.push_back(parse_constant(line, v, col, R));
      id.ideal = ideal_normalize(id.generators, R);
      spec.ideals.push_back(std::move(id));
    } else {
      claim(line, key, start);
      if (vars && std::find(vars->begin(), vars->end(), key) != vars->end())
        line.fail(start, "'" + key + "' is a variable");
      try {
        spec.polys.push_back({key, parse_poly(value, ring(line))});
      } catch (const Error& e) {
        std::string msg = e.what();
        std::size_t col = vstart;
        if (msg.rfind("column ", 0) == 0) {
          const std::size_t colon = msg.find(':');
          col += std::stoul(msg.substr(7, colon - 7)) - 1;
          msg = msg.substr(colon + 2);
        }
        line.fail(col, msg, e.code());
      }
    }
    if (nl == text.size()) break;
  }

  if (!base) throw Error(ErrorCode::Syntax, "missing 'ring'");
  if (!vars) throw Error(ErrorCode::Syntax, "missing 'vars'");
  if (!spec.ring) spec.ring = make_poly_ring(*base, *vars);
  for (std::size_t r = 0; r < spec.roles.size(); ++r) {
    const Line& line = role_lines[r].first;
    for (const auto& n : spec.roles[r].second)
      if (!spec.find(n)) {
        const std::size_t col = line.text.find(n, role_lines[r].second);
        line.fail(col == std::string_view::npos ? 0 : col, "unknown polynomial '" + n + "'");
      }
  }
  return spec;
}

std::string print_problem(const ProblemSpec& spec) {
  std::string out = "ring = " + spec.ring->base.name() + "\nvars = ";
  for (std::size_t i = 0; i < spec.ring->nvars(); ++i) out += (i ? ", " : "") + spec.ring->vars[i];
  out += "\n";
  if (spec.order) out += "order = " + spec.order->name() + "\n";
  if (spec.max_degree) out += "max-degree = " + std::to_string(*spec.max_degree) + "\n";
  if (spec.grade) out += "grade = " + std::to_string(*spec.grade) + "\n";
  for (const auto& id : spec.ideals) {
    out += "ideal " + id.name + " = ";
    for (std::size_t i = 0; i < id.generators.size(); ++i) out += (i ? ", " : "") + id.generators[i].get_str();
    out += "\n";
  }
  for (const auto& p : spec.polys) out += p.name + " = " + p.poly.to_string() + "\n";
  for (const auto& [k, v] : spec.roles) {
    out += k + " = ";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    out += "\n";
  }
  return out;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  auto same_order = [](const std::optional<MonomialOrder>& x, const std::optional<MonomialOrder>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || x->name() == y->name();
  };
  if (!same_ring(a.ring, b.ring) || !same_order(a.order, b.order) || a.max_degree != b.max_degree ||
      a.grade != b.grade || a.roles != b.roles || a.polys.size() != b.polys.size() || a.ideals.size() != b.ideals.size())
    return false;
  for (std::size_t i = 0; i < a.polys.size(); ++i)
    if (a.polys[i].name != b.polys[i].name || a.polys[i].poly != b.polys[i].poly) return false;
  for (std::size_t i = 0; i < a.ideals.size(); ++i)
    if (a.ideals[i].name != b.ideals[i].name || a.ideals[i].generators != b.ideals[i].generators) return false;
  return true;
}

}  // namespace secant
