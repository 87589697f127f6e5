#include "bergman/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (t[0] == '+' || t[0] == '-') {
    negative = t[0] == '-';
    t = t.substr(1);
  }

  auto bad = [&] { throw ParseError("bad rational literal: '" + text + "'"); };

  // Base 10 always; the default base of 0 would read leading zeros
  // (as in "1.0625") as octal.
  Rat out;
  if (size_t slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) bad();
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    out = Rat(mpz_class(num, 10), d);
    out.canonicalize();
  } else if (size_t dot = t.find('.'); dot != std::string::npos) {
    std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!is_digits(whole) || !is_digits(frac)) bad();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    out = Rat(mpz_class(whole, 10) * scale + mpz_class(frac, 10), scale);
    out.canonicalize();
  } else {
    if (!is_digits(t)) bad();
    out = Rat(mpz_class(t, 10));
  }
  return negative ? Rat(-out) : out;
}

std::string format_rat(const Rat& value) {
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (den == 1) return num.get_str();

  // Finite decimal expansion exists iff den == 2^a * 5^b.
  mpz_class rest = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 2)) {
    rest /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.get_str() + "/" + den.get_str();

  unsigned long k = std::max(twos, fives);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, k);
  mpz_class scaled = abs(num) * (pow10 / den);
  std::string digits = scaled.get_str();
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  return (num < 0 ? "-" : "") + digits;
}

}  // namespace bergman
