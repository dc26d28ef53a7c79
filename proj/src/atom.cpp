#include "dlp/atom.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dlp {

namespace {

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

int compare_arg(const std::string& a, const std::string& b) {
  if (is_integer(a) && is_integer(b)) {
    long long na = std::strtoll(a.c_str(), nullptr, 10);
    long long nb = std::strtoll(b.c_str(), nullptr, 10);
    if (na != nb) return na < nb ? -1 : 1;
  }
  return a.compare(b);
}

void normalize_body(std::vector<Atom>& body) {
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
}

}  // namespace

std::string Atom::to_string() const {
  if (args.empty()) return pred;
  std::string out = pred;
  out += '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  out += ')';
  return out;
}

int compare(const Atom& a, const Atom& b) {
  if (int c = a.pred.compare(b.pred); c != 0) return c < 0 ? -1 : 1;
  size_t n = std::min(a.args.size(), b.args.size());
  for (size_t i = 0; i < n; ++i)
    if (int c = compare_arg(a.args[i], b.args[i]); c != 0) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  return 0;
}

std::string Rule::to_string() const {
  std::string out;
  if (head) out += head->to_string();
  if (!body_pos.empty() || !body_neg.empty()) {
    out += head ? " :- " : ":- ";
    bool first = true;
    for (const Atom& a : body_pos) {
      if (!first) out += ", ";
      out += a.to_string();
      first = false;
    }
    for (const Atom& a : body_neg) {
      if (!first) out += ", ";
      out += "not " + a.to_string();
      first = false;
    }
  }
  out += '.';
  return out;
}

bool operator==(const Rule& a, const Rule& b) {
  if (a.head.has_value() != b.head.has_value()) return false;
  if (a.head && *a.head != *b.head) return false;
  return a.body_pos == b.body_pos && a.body_neg == b.body_neg;
}

GroundProgram GroundProgram::from_statements(std::vector<Rule> statements,
                                             std::vector<Atom> extra_base) {
  GroundProgram p;
  std::vector<Atom> atoms = std::move(extra_base);
  for (Rule& r : statements) {
    normalize_body(r.body_pos);
    normalize_body(r.body_neg);
    for (const Atom& a : r.body_pos)
      if (std::binary_search(r.body_neg.begin(), r.body_neg.end(), a))
        throw std::invalid_argument("atom '" + a.to_string() +
                                    "' occurs both positively and negatively in one body");
    if (r.head) atoms.push_back(*r.head);
    atoms.insert(atoms.end(), r.body_pos.begin(), r.body_pos.end());
    atoms.insert(atoms.end(), r.body_neg.begin(), r.body_neg.end());
    if (r.head)
      p.rules_.push_back(std::move(r));
    else
      p.constraints_.push_back(std::move(r));
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  p.base_ = std::move(atoms);
  return p;
}

size_t GroundProgram::index_of(const Atom& a) const {
  auto it = std::lower_bound(base_.begin(), base_.end(), a);
  if (it == base_.end() || *it != a) return npos;
  return static_cast<size_t>(it - base_.begin());
}

std::string GroundProgram::to_text() const {
  std::string out;
  for (const Rule& r : rules_) {
    out += r.to_string();
    out += '\n';
  }
  for (const Rule& r : constraints_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

Interpretation interpretation_from_atoms(const GroundProgram& p, const std::vector<Atom>& atoms) {
  Interpretation v(p.base().size(), 0);
  for (const Atom& a : atoms) {
    size_t i = p.index_of(a);
    if (i == GroundProgram::npos)
      throw std::invalid_argument("atom '" + a.to_string() + "' not in base");
    v[i] = 1;
  }
  return v;
}

std::vector<Atom> atoms_from_interpretation(const GroundProgram& p, const Interpretation& v) {
  std::vector<Atom> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) out.push_back(p.base()[i]);
  return out;
}

std::string format_model(const GroundProgram& p, const Interpretation& v) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!first) out += ", ";
    out += p.base()[i].to_string();
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace dlp
