#include "virw/scalars.hpp"

#include <cctype>

namespace virw {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw ArithmeticError("rational with zero denominator");
  // cpp_rational requires a positive denominator at construction.
  if (den < 0)
    v_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  std::string s = num().str();
  if (!is_integer()) s += "/" + den().str();
  return s;
}

namespace {

// Parses "[+-]digits[/digits]" starting at pos; advances pos past the match.
Rational parse_rational_at(std::string_view text, size_t& pos) {
  size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin)
    throw ParseError("expected digits in rational at offset " + std::to_string(start) +
                     " of \"" + std::string(text) + "\"");
  BigInt num(std::string(text.substr(digits_begin, pos - digits_begin)));
  if (negative) num = -num;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin) throw ParseError("expected denominator digits in \"" + std::string(text) + "\"");
    den = BigInt(std::string(text.substr(den_begin, pos - den_begin)));
  }
  return {num, den};
}

void skip_space(std::string_view text, size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  size_t pos = 0;
  skip_space(text, pos);
  Rational r = parse_rational_at(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in rational \"" + std::string(text) + "\"");
  return r;
}

Rational binomial(long long n, long long k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt r = 1;
  for (long long t = 0; t < k; ++t) {
    r *= BigInt(n - t);
    r /= BigInt(t + 1);  // exact: product of j consecutive integers is divisible by j!
  }
  return Rational(r);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  Rational n = o.norm();
  GaussianRational c = o.conj();
  *this *= c;
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_.to_string() + "*i";
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.to_string() + "+" + imag;
  return re_.to_string() + imag;  // imag already starts with '-'
}

GaussianRational GaussianRational::parse(std::string_view text) {
  size_t pos = 0;
  skip_space(text, pos);
  Rational first = parse_rational_at(text, pos);
  skip_space(text, pos);
  bool first_is_imag = false;
  if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == 'i') {
    first_is_imag = true;
    pos += 2;
  }
  skip_space(text, pos);
  if (pos == text.size()) {
    return first_is_imag ? GaussianRational(Rational(0), first) : GaussianRational(first);
  }
  if (first_is_imag) throw ParseError("imaginary part must come last in \"" + std::string(text) + "\"");
  if (text[pos] != '+' && text[pos] != '-')
    throw ParseError("expected '+' or '-' before imaginary part in \"" + std::string(text) + "\"");
  Rational second = parse_rational_at(text, pos);
  skip_space(text, pos);
  if (pos + 1 >= text.size() || text[pos] != '*' || text[pos + 1] != 'i')
    throw ParseError("expected '*i' after imaginary part in \"" + std::string(text) + "\"");
  pos += 2;
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in scalar \"" + std::string(text) + "\"");
  return {first, second};
}

}  // namespace virw
