#include "fpgroups/numeric.hpp"

namespace fpgroups {

Count binomial(const Count& a, const Count& b) {
  if (b < 0 || a < b) return 0;
  Count result = 1;
  for (Count k = 0; k < b; ++k) {
    result *= a - k;
    result /= k + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return result;
}

Count factorial(std::size_t n) {
  Count result = 1;
  for (std::size_t k = 2; k <= n; ++k) result *= k;
  return result;
}

Count double_factorial(std::size_t d) {
  Count result = 1;
  for (std::size_t k = d; k > 1; k -= 2) result *= k;
  return result;
}

}  // namespace fpgroups
