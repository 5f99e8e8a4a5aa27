#include "polyrep/weights.hpp"

#include <stdexcept>
#include <string>

namespace polyrep {

std::vector<WeightVector> weight_sets(std::size_t d, std::size_t k) {
  if (k >= d) throw std::out_of_range("face dimension " + std::to_string(k) + " out of range for d=" +
                                      std::to_string(d));
  const std::size_t len = d - k;
  if (len == 1) return {{1}};
  if (len == 2) return {{1, 1}};
  if (len == 3) return {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};

  const std::size_t levels = len - 1;  // exponents 0 .. len-2
  std::vector<WeightVector> out;
  std::vector<std::size_t> digits(len, 0);
  for (;;) {
    WeightVector w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = std::uint64_t{1} << digits[i];
    out.push_back(std::move(w));
    std::size_t i = len;
    while (i > 0 && digits[i - 1] == levels - 1) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::size_t mu_count(std::size_t d) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total += weight_sets(d, k).size();
  return total;
}

}  // namespace polyrep
