#include "floorcount/bigint.hpp"

#include <stdexcept>

namespace floorcount {

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt parse_bigint(const std::string& text) {
  BigInt value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return value;
}

}  // namespace floorcount
