#include "polyrep/forms.hpp"

#include <sstream>
#include <stdexcept>

namespace polyrep {

std::string LinearForm::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  if (sgn(constant) != 0) {
    out << constant.get_str();
    first = false;
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat& c = coeffs[i];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    const Rat mag = abs(c);
    if (mag != 1) out << mag.get_str();
    out << 'x' << i + 1;
    first = false;
  }
  if (first) out << '0';
  out << ')';
  return out.str();
}

LinearForm facet_form(const HRow& row) { return {row.rhs, scale(row.normal, Rat(-1))}; }

LinearForm face_support_form(const Face& face, const WeightVector& w, const HPolytope& h) {
  if (w.size() != face.facets.size()) {
    throw std::invalid_argument("weight vector length " + std::to_string(w.size()) + " does not match " +
                                std::to_string(face.facets.size()) + " facets");
  }
  LinearForm form{Rat(0), zeros(h.dim)};
  for (std::size_t j = 0; j < w.size(); ++j) {
    const HRow& row = h.rows.at(face.facets[j]);
    const Rat wj(static_cast<unsigned long>(w[j]));
    form.constant += wj * row.rhs;
    for (std::size_t c = 0; c < h.dim; ++c) form.coeffs[c] -= wj * row.normal[c];
  }
  return form;
}

}  // namespace polyrep
