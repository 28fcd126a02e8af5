#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bandhs/formula.hpp"

namespace bandhs {

// DIMACS WCNF dialects:
//   legacy  `p wcnf <vars> <clauses> <top>` header, `<w> lits... 0`, w == top is hard
//   modern  (MaxSAT Evaluation 2022+) no header, `h lits... 0` or `<w> lits... 0`
enum class WcnfFormat { legacy, modern };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Instance parse_wcnf(std::istream& in);
Instance parse_wcnf(std::string_view text);
Instance read_wcnf_file(const std::string& path);

// Modern output begins with a `c vars <n>` line so that variables not
// mentioned by any clause survive a round trip. Legacy output uses
// top = total soft weight + 1.
void write_wcnf(std::ostream& out, const Instance& inst, WcnfFormat format);
std::string serialize_wcnf(const Instance& inst, WcnfFormat format);

}  // namespace bandhs
