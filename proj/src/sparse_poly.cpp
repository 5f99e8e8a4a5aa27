#include "polyrep/sparse_poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "polyrep/errors.hpp"

namespace polyrep {

SparsePoly SparsePoly::constant(std::size_t num_vars, const Rat& c) {
  SparsePoly p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t i) {
  SparsePoly p(num_vars);
  Monomial m(num_vars, 0);
  m.at(i) = 1;
  p.add_term(m, Rat(1));
  return p;
}

SparsePoly SparsePoly::from_linear(const LinearForm& form) {
  const std::size_t n = form.coeffs.size();
  SparsePoly p = constant(n, form.constant);
  for (std::size_t i = 0; i < n; ++i) p = p + variable(n, i) * form.coeffs[i];
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
  if (m.size() != num_vars_) throw std::invalid_argument("monomial length does not match variable count");
  if (sgn(c) == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Rat SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

unsigned SparsePoly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0u));
  return deg;
}

Rat SparsePoly::eval(const RatVec& x) const {
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= polyrep::pow(x[i], m[i]);
    total += t;
  }
  return total;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(num_vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(num_vars_);
      for (std::size_t i = 0; i < num_vars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

SparsePoly SparsePoly::operator*(const Rat& s) const {
  SparsePoly r(num_vars_);
  if (sgn(s) == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(num_vars_, Rat(1));
  SparsePoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::embed(std::size_t num_vars) const {
  if (num_vars < num_vars_) throw std::invalid_argument("embed can only add variables");
  SparsePoly r(num_vars);
  for (const auto& [m, c] : terms_) {
    Monomial wide(num_vars, 0);
    std::copy(m.begin(), m.end(), wide.begin());
    r.terms_.emplace(std::move(wide), c);
  }
  return r;
}

namespace {

// powers[i][e] = subs[i]^e, filled lazily.
class PowerCache {
 public:
  explicit PowerCache(const std::vector<SparsePoly>& subs) : subs_(subs), powers_(subs.size()) {}

  const SparsePoly& get(std::size_t i, unsigned e) {
    auto& list = powers_[i];
    if (list.empty()) list.push_back(SparsePoly::constant(subs_[i].num_vars(), Rat(1)));
    while (list.size() <= e) list.push_back(list.back() * subs_[i]);
    return list[e];
  }

 private:
  const std::vector<SparsePoly>& subs_;
  std::vector<std::vector<SparsePoly>> powers_;
};

std::size_t target_vars(const std::vector<SparsePoly>& subs, const SparsePoly* extra) {
  if (!subs.empty()) return subs[0].num_vars();
  return extra ? extra->num_vars() : 0;
}

}  // namespace

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& subs) const {
  if (subs.size() != num_vars_) throw std::invalid_argument("compose needs one substitute per variable");
  const std::size_t n = target_vars(subs, nullptr);
  PowerCache cache(subs);
  SparsePoly r(n);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(n, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * cache.get(i, m[i]);
    r = r + t;
  }
  return r;
}

SparsePoly SparsePoly::homogenize(const std::vector<SparsePoly>& subs, const SparsePoly& scale,
                                  unsigned degree) const {
  if (subs.size() != num_vars_) throw std::invalid_argument("homogenize needs one substitute per variable");
  const std::size_t n = target_vars(subs, &scale);
  PowerCache cache(subs);
  std::vector<SparsePoly> scale_powers{constant(n, Rat(1))};
  while (scale_powers.size() <= degree) scale_powers.push_back(scale_powers.back() * scale);
  SparsePoly r(n);
  for (const auto& [m, c] : terms_) {
    const unsigned deg = std::accumulate(m.begin(), m.end(), 0u);
    if (deg > degree) throw std::invalid_argument("homogenize degree below the polynomial's degree");
    SparsePoly t = scale_powers[degree - deg] * c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * cache.get(i, m[i]);
    r = r + t;
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first, then reverse lexicographic exponents.
  std::vector<std::pair<Monomial, Rat>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    const unsigned dl = std::accumulate(l.first.begin(), l.first.end(), 0u);
    const unsigned dr = std::accumulate(r.first.begin(), r.first.end(), 0u);
    if (dl != dr) return dl < dr;
    return l.first > r.first;
  });
  for (const auto& [m, c] : ordered) {
    const bool is_const = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    if (sgn(c) < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    const Rat mag = abs(c);
    bool wrote = false;
    if (mag != 1 || is_const) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (wrote) out << '*';
      out << 'x' << i + 1;
      if (m[i] > 1) out << '^' << m[i];
      wrote = true;
    }
    first = false;
  }
  return out.str();
}

SparsePoly expand_product(const std::vector<LinearForm>& factors, std::size_t num_vars, const ExpansionGuard& guard) {
  if (factors.size() > guard.max_degree) {
    throw ResourceError("expansion refused: degree " + std::to_string(factors.size()) + " exceeds " +
                        std::to_string(guard.max_degree));
  }
  SparsePoly r = SparsePoly::constant(num_vars, Rat(1));
  for (const auto& f : factors) {
    r = r * SparsePoly::from_linear(f);
    if (r.size() > guard.max_terms) throw ResourceError("expansion refused: too many monomials");
  }
  return r;
}

}  // namespace polyrep
