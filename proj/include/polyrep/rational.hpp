#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw num/den go through make_rat.
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;

Rat make_rat(const Int& num, const Int& den);

// Accepts "p", "-p", "p/q" with decimal integers. Throws ParseError with
// column 1 for the token; callers that know the position rethrow.
Rat parse_rat(std::string_view text);
bool try_parse_rat(std::string_view text, Rat& out, std::string& error);

std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat norm_sq(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rat& s);
RatVec zeros(std::size_t n);
RatVec unit(std::size_t n, std::size_t i);

// Largest q = n / 2^bits with q*q <= x (x >= 0).
Rat sqrt_lower_dyadic(const Rat& x, unsigned bits);
// Smallest q = n / 2^bits with q*q >= x (x >= 0).
Rat sqrt_upper_dyadic(const Rat& x, unsigned bits);

// Rat raised to a nonnegative integer power (binary powering).
Rat pow(const Rat& base, unsigned long exponent);

double to_double(const Rat& q);

// Approximate bit length of numerator plus denominator.
std::size_t bit_size(const Rat& q);

}  // namespace polyrep
