#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lea {

// Field element of F_p, value in [0, p).  Moduli are required to be prime
// and < 2^32 so that products fit in 64 bits before reduction.
using fe = std::uint64_t;

inline constexpr fe kDefaultPrime = 2147483647ULL;  // 2^31 - 1

bool is_prime(fe p);

fe fp_add(fe a, fe b, fe p);
fe fp_sub(fe a, fe b, fe p);
fe fp_mul(fe a, fe b, fe p);
fe fp_pow(fe a, std::uint64_t e, fe p);

// Multiplicative inverse via extended Euclid.  Throws std::domain_error
// for a = 0 ("no inverse of zero").
fe fp_inv(fe a, fe p);

// Reduce a signed integer into [0, p).
fe fp_from_signed(long long v, fe p);

// Univariate polynomial over F_p, coefficients low degree first.
// An empty coefficient vector is the zero polynomial.
struct Poly {
  std::vector<fe> coeffs;

  int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  // Drop trailing zero coefficients so the leading coefficient is nonzero.
  void normalize();
};

// Horner evaluation, exact in F_p.
fe poly_eval(const Poly& poly, fe z, fe p);

// Unique polynomial of degree <= |points|-1 through all points.
// Throws std::invalid_argument on a repeated interpolation node.
Poly lagrange_interpolate(std::span<const std::pair<fe, fe>> points, fe p);

}  // namespace lea
