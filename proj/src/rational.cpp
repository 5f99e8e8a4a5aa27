#include "polyrep/rational.hpp"

#include <cctype>
#include <sstream>

#include "polyrep/errors.hpp"

namespace polyrep {

Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool parse_integer(std::string_view s, bool allow_sign, Int& out) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

bool try_parse_rat(std::string_view text, Rat& out, std::string& error) {
  const auto slash = text.find('/');
  Int num;
  Int den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, true, num)) {
      error = "malformed rational '" + std::string(text) + "'";
      return false;
    }
  } else {
    if (!parse_integer(text.substr(0, slash), true, num) ||
        !parse_integer(text.substr(slash + 1), false, den)) {
      error = "malformed rational '" + std::string(text) + "'";
      return false;
    }
    if (den == 0) {
      error = "zero denominator";
      return false;
    }
  }
  out = make_rat(num, den);
  return true;
}

Rat parse_rat(std::string_view text) {
  Rat q;
  std::string error;
  if (!try_parse_rat(text, q, error)) throw ParseError(1, 1, error);
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm_sq(const RatVec& v) { return dot(v, v); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& v, const Rat& s) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit(std::size_t n, std::size_t i) {
  RatVec r = zeros(n);
  r[i] = 1;
  return r;
}

Rat sqrt_lower_dyadic(const Rat& x, unsigned bits) {
  // floor(sqrt(x * 4^bits)) / 2^bits
  Int scaled_num = x.get_num();
  scaled_num <<= 2 * bits;
  Int q = scaled_num / x.get_den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
  Int den = 1;
  den <<= bits;
  Rat r = make_rat(root, den);
  // floor division may only make root smaller, so r*r <= x holds.
  return r;
}

Rat sqrt_upper_dyadic(const Rat& x, unsigned bits) {
  Rat r = sqrt_lower_dyadic(x, bits);
  if (r * r >= x) return r;
  Int den = 1;
  den <<= bits;
  Rat step = make_rat(Int(1), den);
  while (r * r < x) r += step;
  return r;
}

Rat pow(const Rat& base, unsigned long exponent) {
  Rat result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // gcd(num, den) = 1 is preserved by powering; sign lives on the numerator.
  return result;
}

double to_double(const Rat& q) { return q.get_d(); }

std::size_t bit_size(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace polyrep
