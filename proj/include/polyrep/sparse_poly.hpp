#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyrep/forms.hpp"

namespace polyrep {

using Monomial = std::vector<std::uint32_t>;

// Multivariate polynomial as a map from exponent vectors to nonzero
// rational coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static SparsePoly constant(std::size_t num_vars, const Rat& c);
  static SparsePoly variable(std::size_t num_vars, std::size_t i);
  static SparsePoly from_linear(const LinearForm& form);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rat& c);
  Rat coefficient(const Monomial& m) const;

  unsigned total_degree() const;
  Rat eval(const RatVec& x) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rat& s) const;
  SparsePoly pow(unsigned e) const;

  // Same polynomial over `num_vars` >= num_vars() variables.
  SparsePoly embed(std::size_t num_vars) const;

  // p(subs[0], ..., subs[n-1]); all substitutes share one variable count.
  SparsePoly compose(const std::vector<SparsePoly>& subs) const;

  // sum_alpha c_alpha * subs^alpha * scale^(degree - |alpha|): the
  // homogenization of p(subs / scale) by scale^degree.
  SparsePoly homogenize(const std::vector<SparsePoly>& subs, const SparsePoly& scale, unsigned degree) const;

  std::string to_string() const;
  bool operator==(const SparsePoly&) const = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<Monomial, Rat> terms_;
};

struct ExpansionGuard {
  unsigned max_degree = 64;
  std::size_t max_terms = 1000000;
};

// Multiplies out a factored product; throws ResourceError past the guard.
SparsePoly expand_product(const std::vector<LinearForm>& factors, std::size_t num_vars,
                          const ExpansionGuard& guard = {});

}  // namespace polyrep
