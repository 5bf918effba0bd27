#pragma once

#include <functional>
#include <span>
#include <vector>

#include "floorcount/bigint.hpp"
#include "floorcount/lattice.hpp"

namespace floorcount {

/// binomial(a, b) for integers; 0 when b < 0 or b > a >= 0.
BigInt binomial(long a, long b);

/// prod_i binomial(a - (b_1 + .. + b_{i-1}), b_i).
BigInt multinomial(long a, std::span<const long> parts);

/// A finitely supported sequence (alpha_1, alpha_2, ...) of non-negative
/// integers; entry k of `values` is alpha_{k+1}.
struct AlphaSequence {
  std::vector<long> values;

  long operator[](std::size_t i) const { return i >= 1 && i <= values.size() ? values[i - 1] : 0; }
  /// sum alpha_i
  long size() const;
  /// sum i * alpha_i
  long weighted_size() const;
  /// prod i^(exponent * alpha_i)
  BigInt index_power(unsigned long exponent = 1) const;
};

/// All sequences with |beta| = total and I*beta <= max_weight; supports are
/// bounded by max_weight since I*beta <= max_weight forces beta_i = 0 for
/// i > max_weight.
std::vector<AlphaSequence> sequences_with(long total, long max_weight);

/// The closed form 3(d-1)^2 for curves one below maximal genus in degree d.
BigInt near_max_genus_count(int d);

using InvariantLookup = std::function<BigInt(const HTransversePolygon&, int)>;

/// Right-hand side of Vakil's relation for the Hirzebruch polygon
/// Delta_{n,2,b}: N(Delta_{n+1,2,b-1}, g) + sum over beta with |beta| = g+1,
/// I*beta <= n of the four-factor correction term.
BigInt vakil_rhs(int n, int b, int genus, const InvariantLookup& lookup);

/// The correction sum alone.
BigInt vakil_correction(int n, int b, int genus);

/// Rational plane curve counts by Kontsevich's recursion.
BigInt kontsevich_rational(int d);

/// Interior lattice points of the polygon, the largest genus a diagram can have.
int max_genus(const HTransversePolygon& p);

}  // namespace floorcount
