#pragma once

// Reference computations used only by the tests.  Each one reaches its answer
// by a route that does not go through the library code it is checked against:
// floating-point conjugates straight from power-basis coefficients, the
// Verlinde formula with sine S-matrices, brute force over permutations, and
// transitive closure by Warshall's algorithm.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// All Galois conjugates of sum_k c_k zeta_N^k, evaluated in floating point.
inline std::vector<cplx> conjugates(unsigned n, const std::vector<double>& coeffs) {
  std::vector<cplx> out;
  for (unsigned a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    cplx s = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      s += coeffs[k] * std::polar(1.0, 2.0 * std::numbers::pi * a * k / n);
    }
    out.push_back(s);
  }
  return out;
}

/// Coefficients (low to high) of prod (X - r) over the given roots.
inline std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
  std::vector<cplx> p{1.0};
  for (const cplx& r : roots) {
    std::vector<cplx> q(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= r * p[i];
    }
    p = std::move(q);
  }
  return p;
}

/// Characteristic polynomial over Q of the element, up to float error.  The
/// element is an algebraic integer exactly when every coefficient is an integer.
inline bool charpoly_integral(unsigned n, const std::vector<double>& coeffs, double tol = 1e-6) {
  for (const cplx& c : poly_from_roots(conjugates(n, coeffs))) {
    if (std::abs(c.imag()) > tol) return false;
    if (std::abs(c.real() - std::round(c.real())) > tol) return false;
  }
  return true;
}

/// sin((i+1)(j+1) pi/(k+2)) / sin(pi/(k+2)).
inline double su2_s(unsigned k, std::size_t i, std::size_t j) {
  const double step = std::numbers::pi / (k + 2);
  return std::sin((i + 1) * (j + 1) * step) / std::sin(step);
}

/// N_ij^l from the Verlinde formula with the unitary sine S-matrix.
inline int su2_verlinde(unsigned k, std::size_t i, std::size_t j, std::size_t l) {
  const double norm = std::sqrt(2.0 / (k + 2));
  auto u = [&](std::size_t a, std::size_t b) {
    return norm * std::sin((a + 1) * (b + 1) * std::numbers::pi / (k + 2));
  };
  double s = 0;
  for (std::size_t m = 0; m <= k; ++m) s += u(i, m) * u(j, m) * u(l, m) / u(0, m);
  return static_cast<int>(std::lround(s));
}

/// Sizes of the conjugacy classes of S_n by brute force over permutations.
inline std::multiset<std::size_t> symmetric_group_class_sizes(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto compose = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a[b[i]];
    return c;
  };
  auto inverse = [&](const std::vector<std::size_t>& a) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[a[i]] = i;
    return c;
  };
  std::set<std::vector<std::size_t>> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& g : perms) {
    if (seen.contains(g)) continue;
    std::set<std::vector<std::size_t>> cls;
    for (const auto& h : perms) cls.insert(compose(compose(h, g), inverse(h)));
    seen.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

/// Partition of {0..r-1} under the reflexive-transitive closure of "k is a
/// constituent of i (x) s for some s in sub", via Warshall.
template <class NFn>
std::vector<std::vector<std::size_t>> closure_partition(std::size_t r, const std::vector<std::size_t>& sub, NFn N) {
  std::vector<std::vector<bool>> reach(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i) {
    reach[i][i] = true;
    for (auto s : sub)
      for (std::size_t k = 0; k < r; ++k)
        if (N(i, s, k) > 0) {
          reach[i][k] = true;
          reach[k][i] = true;
        }
  }
  for (std::size_t m = 0; m < r; ++m)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (reach[i][m] && reach[m][j]) reach[i][j] = true;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> b;
    for (std::size_t j = 0; j < r; ++j)
      if (reach[i][j]) {
        b.push_back(j);
        used[j] = true;
      }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace oracle
