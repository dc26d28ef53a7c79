#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dlp {

// A ground atom: predicate plus constant arguments.
struct Atom {
  std::string pred;
  std::vector<std::string> args;

  std::string to_string() const;
};

// Total order: predicate name, then arguments left to right. Arguments that
// are both integers compare numerically (so label(i1,i2,9) < label(i1,i2,10)),
// with the spelling as tie-breaker; anything else compares as a string.
int compare(const Atom& a, const Atom& b);

inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator!=(const Atom& a, const Atom& b) { return compare(a, b) != 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

// A rule "head :- body_pos, not body_neg". A missing head makes it a
// constraint; an empty body with a head makes it a fact. Body sets are kept
// sorted and duplicate-free, and body_pos and body_neg are disjoint.
struct Rule {
  std::optional<Atom> head;
  std::vector<Atom> body_pos;
  std::vector<Atom> body_neg;

  bool is_constraint() const { return !head.has_value(); }
  bool is_fact() const { return head.has_value() && body_pos.empty() && body_neg.empty(); }
  std::string to_string() const;
};

bool operator==(const Rule& a, const Rule& b);

// A ground normal logic program over a sorted Herbrand base. Rules and
// constraints keep their source order; the base is the sorted set of atoms
// occurring anywhere in the program (plus any explicitly forced atoms).
class GroundProgram {
 public:
  static constexpr size_t npos = static_cast<size_t>(-1);

  GroundProgram() = default;

  // Validates and normalizes every statement, splits rules from constraints,
  // and builds the base. Throws std::invalid_argument on a body overlap.
  static GroundProgram from_statements(std::vector<Rule> statements,
                                       std::vector<Atom> extra_base = {});

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Rule>& constraints() const { return constraints_; }
  const std::vector<Atom>& base() const { return base_; }

  size_t index_of(const Atom& a) const;
  bool in_base(const Atom& a) const { return index_of(a) != npos; }

  // Canonical text form; parse_program(to_text()) reproduces the program.
  std::string to_text() const;

 private:
  std::vector<Rule> rules_;
  std::vector<Rule> constraints_;
  std::vector<Atom> base_;
};

// Binary truth assignment aligned with GroundProgram::base().
using Interpretation = std::vector<uint8_t>;

Interpretation interpretation_from_atoms(const GroundProgram& p, const std::vector<Atom>& atoms);
std::vector<Atom> atoms_from_interpretation(const GroundProgram& p, const Interpretation& v);

// "{a, b(1)}" with atoms in base order.
std::string format_model(const GroundProgram& p, const Interpretation& v);

}  // namespace dlp
