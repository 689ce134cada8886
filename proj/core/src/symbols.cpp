#include "virw/symbols.hpp"

#include <array>
#include <cctype>

#include "virw/ring.hpp"

namespace virw {

bool symbol_less(const BasisSymbol& a, const BasisSymbol& b) {
  if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
  if (a.gen != b.gen) return a.gen < b.gen;
  if (a.index != b.index) return a.index < b.index;
  return a.ring < b.ring;
}

int64_t symbol_degree(const BasisSymbol& sym) {
  // TD/TX carry a defining index but are ad(d_0)-weight-zero by construction.
  if (sym.tag == Tag::TD || sym.tag == Tag::TX) return 0;
  return has_index(sym.tag) ? sym.index : 0;
}

bool has_index(Tag tag) {
  switch (tag) {
    case Tag::Central:
    case Tag::GX:
    case Tag::GD:
      return false;
    default:
      return true;
  }
}

bool has_gen(Tag tag) {
  switch (tag) {
    case Tag::X:
    case Tag::TX:
    case Tag::GX:
    case Tag::Central:
      return true;
    default:
      return false;
  }
}

namespace {

constexpr std::array<std::string_view, 12> kTagNames = {
    "C", "T", "X", "E", "H", "G", "TX", "TD", "GX", "GD", "L", "D"};

std::string central_name(int32_t id) {
  return id == 0 ? "C" : "C" + std::to_string(id);
}

}  // namespace

std::string symbol_to_string(const BasisSymbol& sym, const RingSpec* ring) {
  std::string s;
  switch (sym.tag) {
    case Tag::Central:
      s = central_name(sym.gen);
      break;
    case Tag::GD:
      s = "GD";
      break;
    case Tag::GX:
      s = "GX(" + std::to_string(sym.gen) + ")";
      break;
    case Tag::X:
    case Tag::TX:
      s = std::string(kTagNames[static_cast<int>(sym.tag)]) + "(" + std::to_string(sym.gen) +
          "," + std::to_string(sym.index) + ")";
      break;
    default:
      s = std::string(kTagNames[static_cast<int>(sym.tag)]) + "(" + std::to_string(sym.index) + ")";
      break;
  }
  if (sym.ring != 0) {
    if (ring == nullptr) throw ArithmeticError("symbol has a ring factor but no ring given");
    s += "@" + ring->monomial_name(sym.ring);
  }
  return s;
}

BasisSymbol parse_symbol(std::string_view text, const RingSpec* ring) {
  size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  size_t name_begin = pos;
  while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
  std::string name(text.substr(name_begin, pos - name_begin));
  if (name.empty()) throw ParseError("expected symbol name in \"" + std::string(text) + "\"");

  BasisSymbol sym;
  auto parse_int = [&](size_t& p) -> int64_t {
    size_t start = p;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("expected integer in symbol \"" + std::string(text) + "\"");
    return std::stoll(std::string(text.substr(start, p - start)));
  };
  auto expect = [&](size_t& p, char c) {
    if (p >= text.size() || text[p] != c)
      throw ParseError(std::string("expected '") + c + "' in symbol \"" + std::string(text) + "\"");
    ++p;
  };

  bool needs_args = true;
  if (name == "C" || (name.size() == 2 && name[0] == 'C' && std::isdigit(static_cast<unsigned char>(name[1])))) {
    sym.tag = Tag::Central;
    sym.gen = name == "C" ? 0 : name[1] - '0';
    needs_args = false;
  } else if (name == "GD") {
    sym.tag = Tag::GD;
    needs_args = false;
  } else if (name == "GX") {
    sym.tag = Tag::GX;
    expect(pos, '(');
    sym.gen = static_cast<int32_t>(parse_int(pos));
    expect(pos, ')');
    needs_args = false;
  } else if (name == "X" || name == "TX") {
    sym.tag = name == "X" ? Tag::X : Tag::TX;
    expect(pos, '(');
    sym.gen = static_cast<int32_t>(parse_int(pos));
    expect(pos, ',');
    sym.index = parse_int(pos);
    expect(pos, ')');
    needs_args = false;
  } else {
    static const std::array<std::pair<std::string_view, Tag>, 7> kOneIndex = {{
        {"D", Tag::D}, {"T", Tag::T}, {"E", Tag::E}, {"H", Tag::H},
        {"G", Tag::G}, {"L", Tag::L}, {"TD", Tag::TD},
    }};
    bool found = false;
    for (const auto& [n, t] : kOneIndex) {
      if (name == n) {
        sym.tag = t;
        found = true;
        break;
      }
    }
    if (!found) throw ParseError("unknown symbol name \"" + name + "\"");
    expect(pos, '(');
    sym.index = parse_int(pos);
    expect(pos, ')');
    needs_args = false;
  }
  (void)needs_args;

  if (pos < text.size() && text[pos] == '@') {
    ++pos;
    size_t mono_begin = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string mono(text.substr(mono_begin, pos - mono_begin));
    if (ring == nullptr) throw ParseError("ring monomial \"" + mono + "\" given but no ring in context");
    sym.ring = ring->monomial_by_name(mono);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in symbol \"" + std::string(text) + "\"");
  return sym;
}

}  // namespace virw
