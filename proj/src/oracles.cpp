#include "floorcount/oracles.hpp"

#include "floorcount/errors.hpp"

namespace floorcount {

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    BigInt result;
    mpz_bin_ui(result.get_mpz_t(), BigInt(a).get_mpz_t(), static_cast<unsigned long>(b));
    return result;
  }
  // a < 0: binomial(a, b) = (-1)^b binomial(b - a - 1, b)
  BigInt result = binomial(b - a - 1, b);
  return b % 2 == 0 ? result : BigInt(-result);
}

BigInt multinomial(long a, std::span<const long> parts) {
  BigInt result = 1;
  long remaining = a;
  for (long part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

long AlphaSequence::size() const {
  long total = 0;
  for (long v : values) total += v;
  return total;
}

long AlphaSequence::weighted_size() const {
  long total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) total += static_cast<long>(i + 1) * values[i];
  return total;
}

BigInt AlphaSequence::index_power(unsigned long exponent) const {
  BigInt result = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), i + 1, exponent * static_cast<unsigned long>(values[i]));
    result *= factor;
  }
  return result;
}

std::vector<AlphaSequence> sequences_with(long total, long max_weight) {
  std::vector<AlphaSequence> result;
  if (total < 0 || max_weight < 0) return result;
  AlphaSequence current;
  current.values.assign(static_cast<std::size_t>(max_weight), 0);
  const auto recurse = [&](auto&& self, std::size_t i, long left, long weight_left) -> void {
    if (i == current.values.size()) {
      if (left == 0) result.push_back(current);
      return;
    }
    const long index = static_cast<long>(i) + 1;
    for (long v = 0; v <= left && v * index <= weight_left; ++v) {
      current.values[i] = v;
      self(self, i + 1, left - v, weight_left - v * index);
    }
    current.values[i] = 0;
  };
  recurse(recurse, 0, total, max_weight);
  return result;
}

BigInt near_max_genus_count(int d) {
  if (d < 3) throw RangeError("near-maximal genus count needs d >= 3");
  return BigInt(3) * (d - 1) * (d - 1);
}

BigInt vakil_correction(int n, int b, int genus) {
  if (n < 0 || b < 1 || genus < 0) throw RangeError("vakil relation needs n >= 0, b >= 1, g >= 0");
  BigInt total = 0;
  for (const AlphaSequence& beta : sequences_with(genus + 1, n)) {
    std::vector<long> parts{beta[1] + b};
    for (std::size_t i = 2; i <= beta.values.size(); ++i) parts.push_back(beta[i]);
    total += binomial(2L * n + 2L * b + genus + 2, n - beta.weighted_size()) *
             binomial(beta[1] + b, b) * multinomial(beta.size() + b, parts) * beta.index_power(2);
  }
  return total;
}

BigInt vakil_rhs(int n, int b, int genus, const InvariantLookup& lookup) {
  const BigInt correction = vakil_correction(n, b, genus);
  return lookup(hirzebruch_polygon(n + 1, 2, b - 1), genus) + correction;
}

BigInt kontsevich_rational(int d) {
  if (d < 1) throw RangeError("degree must be at least 1");
  std::vector<BigInt> counts(static_cast<std::size_t>(d) + 1, 0);
  counts[1] = 1;
  for (long e = 2; e <= d; ++e) {
    BigInt total = 0;
    for (long d1 = 1; d1 < e; ++d1) {
      const long d2 = e - d1;
      total += counts[static_cast<std::size_t>(d1)] * counts[static_cast<std::size_t>(d2)] * d1 * d1 * d2 *
               (d2 * binomial(3 * e - 4, 3 * d1 - 2) - d1 * binomial(3 * e - 4, 3 * d1 - 1));
    }
    counts[static_cast<std::size_t>(e)] = total;
  }
  return counts[static_cast<std::size_t>(d)];
}

int max_genus(const HTransversePolygon& p) { return interior_lattice_count(p); }

}  // namespace floorcount
