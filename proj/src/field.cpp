#include "lea/field.hpp"

#include <stdexcept>

namespace lea {

bool is_prime(fe p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (fe q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

fe fp_add(fe a, fe b, fe p) {
  fe s = a + b;
  return s >= p ? s - p : s;
}

fe fp_sub(fe a, fe b, fe p) { return a >= b ? a - b : a + p - b; }

fe fp_mul(fe a, fe b, fe p) { return (a * b) % p; }

fe fp_pow(fe a, std::uint64_t e, fe p) {
  fe result = 1 % p;
  fe base = a % p;
  while (e > 0) {
    if (e & 1) result = fp_mul(result, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return result;
}

fe fp_inv(fe a, fe p) {
  if (a % p == 0) throw std::domain_error("no inverse of zero");
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<fe>(t);
}

fe fp_from_signed(long long v, fe p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return static_cast<fe>(m);
}

void Poly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

fe poly_eval(const Poly& poly, fe z, fe p) {
  fe acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
    acc = fp_add(fp_mul(acc, z, p), *it % p, p);
  }
  return acc;
}

Poly lagrange_interpolate(std::span<const std::pair<fe, fe>> points, fe p) {
  const std::size_t m = points.size();
  if (m == 0) throw std::invalid_argument("interpolation needs at least one point");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("repeated interpolation node");
      }
    }
  }

  // Master polynomial M(z) = prod (z - x_i), degree m.
  std::vector<fe> master(m + 1, 0);
  master[0] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    fe neg_x = fp_sub(0, points[i].first % p, p);
    for (std::size_t c = i + 1; c-- > 0;) {
      master[c + 1] = fp_add(master[c + 1], master[c], p);
      master[c] = fp_mul(master[c], neg_x, p);
    }
  }

  Poly result;
  result.coeffs.assign(m, 0);
  std::vector<fe> basis(m);
  for (std::size_t j = 0; j < m; ++j) {
    fe xj = points[j].first % p;
    // Synthetic division: basis = M(z) / (z - x_j), degree m-1.
    fe carry = 0;
    for (std::size_t c = m; c-- > 0;) {
      carry = fp_add(master[c + 1], fp_mul(carry, xj, p), p);
      basis[c] = carry;
    }
    fe denom = 1;
    for (std::size_t l = 0; l < m; ++l) {
      if (l == j) continue;
      denom = fp_mul(denom, fp_sub(xj, points[l].first % p, p), p);
    }
    fe scale = fp_mul(points[j].second % p, fp_inv(denom, p), p);
    for (std::size_t c = 0; c < m; ++c) {
      result.coeffs[c] = fp_add(result.coeffs[c], fp_mul(basis[c], scale, p), p);
    }
  }
  result.normalize();
  return result;
}

}  // namespace lea
