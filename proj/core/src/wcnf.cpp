#include "bandhs/wcnf.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace bandhs {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
std::optional<T> to_int(std::string_view tok) {
  T value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

class Parser {
 public:
  Instance run(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      const auto tokens = split(line);
      if (tokens.empty()) continue;
      if (tokens[0][0] == 'c') {
        comment(tokens);
      } else if (tokens[0] == "p") {
        header(tokens);
      } else {
        clause(tokens);
      }
    }
    Var num_vars = max_var_;
    if (declared_vars_) {
      num_vars = *declared_vars_;
    } else if (vars_hint_ && *vars_hint_ > num_vars) {
      num_vars = *vars_hint_;
    }
    return Instance(num_vars, std::move(hard_), std::move(soft_), top_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

  void comment(const std::vector<std::string_view>& tokens) {
    if (tokens.size() == 3 && tokens[0] == "c" && tokens[1] == "vars") {
      if (auto n = to_int<Var>(tokens[2])) vars_hint_ = *n;
    }
  }

  void header(const std::vector<std::string_view>& tokens) {
    if (seen_header_) fail("duplicate problem line");
    if (seen_clause_) fail("problem line after clauses");
    if (tokens.size() < 4 || tokens.size() > 5 || tokens[1] != "wcnf") {
      fail("expected 'p wcnf <vars> <clauses> [<top>]'");
    }
    seen_header_ = true;
    const auto nv = to_int<Var>(tokens[2]);
    const auto nc = to_int<std::uint64_t>(tokens[3]);
    if (!nv || !nc) fail("malformed problem line");
    declared_vars_ = *nv;
    if (tokens.size() == 5) {
      const auto top = to_int<Weight>(tokens[4]);
      if (!top || *top == 0) fail("malformed top weight '" + std::string(tokens[4]) + "'");
      top_ = *top;
    }
  }

  void clause(const std::vector<std::string_view>& tokens) {
    seen_clause_ = true;
    if (tokens.size() == 1) fail("clause has no literals before terminating 0");

    bool hard = false;
    Weight weight = 0;
    if (tokens[0] == "h") {
      if (seen_header_) fail("'h' clause in a file with a 'p wcnf' header");
      hard = true;
    } else {
      if (tokens[0][0] == '-') fail("negative clause weight '" + std::string(tokens[0]) + "'");
      const auto w = to_int<Weight>(tokens[0]);
      if (!w) fail("malformed clause weight '" + std::string(tokens[0]) + "'");
      if (*w == 0) fail("clause weight must be positive");
      weight = *w;
      if (top_) {
        if (weight > *top_) fail("clause weight exceeds top weight");
        hard = weight == *top_;
      }
    }

    std::vector<Literal> lits;
    lits.reserve(tokens.size() - 2);
    bool terminated = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto lit = to_int<std::int64_t>(tokens[i]);
      if (!lit) fail("malformed literal '" + std::string(tokens[i]) + "'");
      if (*lit == 0) {
        if (i + 1 != tokens.size()) fail("literal 0 inside clause");
        terminated = true;
        break;
      }
      if (*lit > std::numeric_limits<Var>::max() || -*lit > std::numeric_limits<Var>::max()) {
        fail("literal out of range");
      }
      const Literal l = Literal::from_dimacs(*lit);
      if (declared_vars_ && l.var > *declared_vars_) {
        fail("variable " + std::to_string(l.var) + " exceeds declared count " +
             std::to_string(*declared_vars_));
      }
      max_var_ = std::max(max_var_, l.var);
      lits.push_back(l);
    }
    if (!terminated) fail("missing terminating 0");
    if (lits.empty()) fail("clause has no literals before terminating 0");

    if (hard) {
      hard_.push_back(std::move(lits));
    } else {
      if (weight > std::numeric_limits<Weight>::max() - soft_total_) fail("total soft weight overflows 64 bits");
      soft_total_ += weight;
      soft_.emplace_back(std::move(lits), weight);
    }
  }

  std::size_t line_no_ = 0;
  bool seen_header_ = false;
  bool seen_clause_ = false;
  std::optional<Var> declared_vars_;
  std::optional<Var> vars_hint_;
  std::optional<Weight> top_;
  Var max_var_ = 0;
  Weight soft_total_ = 0;
  std::vector<std::vector<Literal>> hard_;
  std::vector<std::pair<std::vector<Literal>, Weight>> soft_;
};

void write_literals(std::ostream& out, const Clause& c) {
  for (const Literal l : c.literals) out << ' ' << l.to_dimacs();
  out << " 0\n";
}

}  // namespace

Instance parse_wcnf(std::istream& in) { return Parser{}.run(in); }

Instance parse_wcnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_wcnf(in);
}

Instance read_wcnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_wcnf(in);
}

void write_wcnf(std::ostream& out, const Instance& inst, WcnfFormat format) {
  if (format == WcnfFormat::legacy) {
    const Weight top = inst.total_soft_weight() + 1;
    out << "p wcnf " << inst.num_vars() << ' ' << inst.num_clauses() << ' ' << top << '\n';
    for (const Clause& c : inst.clauses()) {
      out << (c.is_hard() ? top : c.weight);
      write_literals(out, c);
    }
    return;
  }
  out << "c vars " << inst.num_vars() << '\n';
  for (const Clause& c : inst.clauses()) {
    if (c.is_hard()) {
      out << 'h';
    } else {
      out << c.weight;
    }
    write_literals(out, c);
  }
}

std::string serialize_wcnf(const Instance& inst, WcnfFormat format) {
  std::ostringstream out;
  write_wcnf(out, inst, format);
  return out.str();
}

}  // namespace bandhs
