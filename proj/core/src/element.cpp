#include "virw/element.hpp"

#include <sstream>

#include "virw/ring.hpp"

namespace virw {

Element Element::term(const BasisSymbol& s, const Scalar& c) {
  Element e;
  e.add_term(s, c);
  return e;
}

Scalar Element::coeff(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const BasisSymbol& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element out = *this;
  out += o;
  return out;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
  Element out;
  for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
  return out;
}

Element operator*(const Scalar& c, const Element& e) {
  Element out;
  if (c.is_zero()) return out;
  for (const auto& [s, k] : e.terms_) out.terms_.emplace(s, c * k);
  return out;
}

std::map<int64_t, Element> Element::degree_decompose() const {
  std::map<int64_t, Element> out;
  for (const auto& [s, c] : terms_) out[symbol_degree(s)].add_term(s, c);
  return out;
}

std::string Element::to_string(const RingSpec* ring) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = c.to_string();
    if (!c.im().is_zero()) coeff = "(" + coeff + ")";
    os << coeff << "*" << symbol_to_string(s, ring);
  }
  return os.str();
}

namespace {

void skip_ws(const std::string& t, size_t& pos) {
  while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
}

// A term is COEFF '*' SYMBOL or a bare SYMBOL (coefficient 1); COEFF is a
// plain rational or a parenthesized complex scalar.
std::pair<BasisSymbol, Scalar> parse_term(const std::string& term, const RingSpec* ring) {
  size_t pos = 0;
  skip_ws(term, pos);
  Scalar coeff(1);
  bool have_coeff = false;
  if (pos < term.size() && term[pos] == '(') {
    size_t close = term.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in term '" + term + "'");
    coeff = Scalar::parse(term.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    have_coeff = true;
  } else if (pos < term.size() && (std::isdigit(static_cast<unsigned char>(term[pos])) || term[pos] == '+' || term[pos] == '-')) {
    size_t start = pos;
    if (term[pos] == '+' || term[pos] == '-') ++pos;
    while (pos < term.size() && (std::isdigit(static_cast<unsigned char>(term[pos])) || term[pos] == '/')) ++pos;
    coeff = Scalar(Rational::parse(term.substr(start, pos - start)));
    have_coeff = true;
  }
  skip_ws(term, pos);
  if (have_coeff) {
    if (pos >= term.size() || term[pos] != '*')
      throw ParseError("expected '*' after coefficient in term '" + term + "'");
    ++pos;
    skip_ws(term, pos);
  }
  std::string sym_text = term.substr(pos);
  // Trim trailing whitespace.
  while (!sym_text.empty() && (sym_text.back() == ' ' || sym_text.back() == '\t')) sym_text.pop_back();
  if (sym_text.empty()) throw ParseError("missing symbol in term '" + term + "'");
  return {parse_symbol(sym_text, ring), coeff};
}

}  // namespace

Element Element::parse(const std::string& text, const RingSpec* ring) {
  Element out;
  std::string trimmed = text;
  {
    size_t a = trimmed.find_first_not_of(" \t");
    size_t b = trimmed.find_last_not_of(" \t");
    trimmed = (a == std::string::npos) ? "" : trimmed.substr(a, b - a + 1);
  }
  if (trimmed.empty() || trimmed == "0") return out;

  // Split on top-level " + " (coefficient signs live inside the terms).
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < trimmed.size(); ++i) {
    char ch = trimmed[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && ch == '+' && i > 0 && trimmed[i - 1] == ' ' && i + 1 < trimmed.size() &&
        trimmed[i + 1] == ' ') {
      parts.push_back(trimmed.substr(start, i - 1 - start));
      start = i + 2;
    }
  }
  parts.push_back(trimmed.substr(start));
  for (const std::string& p : parts) {
    auto [sym, coeff] = parse_term(p, ring);
    out.add_term(sym, coeff);
  }
  return out;
}

}  // namespace virw
