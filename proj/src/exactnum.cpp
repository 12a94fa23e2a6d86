#include "fuscat/exactnum.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

// Thread-safe cache keyed by conductor.  Values are built outside the lock
// (builders may recurse into other conductors); the first insertion wins and
// later identical builds are discarded.
template <class T>
class ConductorCache {
 public:
  template <class Build>
  const T& get(unsigned n, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(n); it != entries_.end()) return *it->second;
    }
    auto fresh = std::make_unique<T>(build(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(n, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<unsigned, std::unique_ptr<T>> entries_;
};

using IntPoly = std::vector<Integer>;

// Exact quotient of a by a monic divisor; remainder must vanish.
IntPoly exact_divide(IntPoly a, const IntPoly& monic) {
  const std::size_t db = monic.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * monic[k];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

IntPoly build_cyclotomic(unsigned n) {
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

ConductorCache<IntPoly>& cyclotomic_cache() {
  static ConductorCache<IntPoly> cache;
  return cache;
}

struct FieldData {
  unsigned n = 1;
  unsigned degree = 1;
  // powers[e] = coefficients of zeta^e in the power basis, 0 <= e < n.
  std::vector<std::vector<Integer>> powers;
  std::vector<unsigned> units;
};

FieldData build_field(unsigned n) {
  FieldData f;
  f.n = n;
  const IntPoly& phi = cyclotomic_polynomial(n);
  f.degree = static_cast<unsigned>(phi.size() - 1);
  f.powers.assign(n, std::vector<Integer>(f.degree, 0));
  std::vector<Integer> cur(f.degree, 0);
  cur[0] = 1;
  for (unsigned e = 0; e < n; ++e) {
    f.powers[e] = cur;
    // multiply by x and reduce modulo the monic phi
    Integer top = cur[f.degree - 1];
    for (unsigned k = f.degree - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0) {
      for (unsigned k = 0; k < f.degree; ++k) cur[k] -= top * phi[k];
    }
  }
  for (unsigned a = 1; a <= n; ++a) {
    if (std::gcd(a, n) == 1) f.units.push_back(a % n == 0 ? n : a);
  }
  return f;
}

const FieldData& field(unsigned n) {
  static ConductorCache<FieldData> cache;
  return cache.get(n, build_field);
}

// Folds exponent buckets sum_e b[e] zeta^e (0 <= e < n) into the power basis.
std::vector<Rational> fold(const FieldData& f, const std::vector<Rational>& buckets) {
  std::vector<Rational> out(f.degree, 0);
  for (unsigned e = 0; e < f.n; ++e) {
    const Rational& c = buckets[e];
    if (c == 0) continue;
    if (e < f.degree) {
      out[e] += c;
      continue;
    }
    const auto& pw = f.powers[e];
    for (unsigned k = 0; k < f.degree; ++k) {
      if (pw[k] != 0) out[k] += c * pw[k];
    }
  }
  return out;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("conductor must be positive");
  return cyclotomic_cache().get(n, build_cyclotomic);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  Rational lead = coeffs_.back();
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c /= lead;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Polynomial(), a};
  std::vector<Rational> q(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / bc.back();
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) rem[i - db + k] -= c * bc[k];
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycNum::CycNum(unsigned conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ == 0) throw std::invalid_argument("conductor must be positive");
  if (coeffs_.size() != euler_phi(conductor_)) {
    throw std::invalid_argument("CycNum over conductor " + std::to_string(conductor_) + " needs " +
                                std::to_string(euler_phi(conductor_)) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CycNum CycNum::zeta(unsigned conductor, long k) {
  const FieldData& f = field(conductor);
  long e = k % static_cast<long>(conductor);
  if (e < 0) e += conductor;
  std::vector<Rational> c(f.degree);
  for (unsigned i = 0; i < f.degree; ++i) c[i] = f.powers[e][i];
  return CycNum(conductor, std::move(c));
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

const Rational& CycNum::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycNum is not rational: " + to_string());
  return coeffs_[0];
}

CycNum change_conductor(const CycNum& a, unsigned m) {
  const unsigned n = a.conductor();
  if (m == 0 || m % n != 0) {
    throw Error(Errc::ConductorNotDivisible,
                std::to_string(n) + " does not divide " + std::to_string(m));
  }
  if (m == n) return a;
  const FieldData& f = field(m);
  const unsigned step = m / n;
  std::vector<Rational> buckets(m, 0);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) buckets[(k * step) % m] += a.coeffs()[k];
  return CycNum(m, fold(f, buckets));
}

CycNum CycNum::galois(long a) const {
  const FieldData& f = field(conductor_);
  long n = conductor_;
  long e = ((a % n) + n) % n;
  if (std::gcd(e, n) != 1 && n > 1) throw std::invalid_argument("Galois exponent not a unit");
  std::vector<Rational> buckets(conductor_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) buckets[(static_cast<long>(k) * e) % n] += coeffs_[k];
  }
  return CycNum(conductor_, fold(f, buckets));
}

CycNum& CycNum::operator+=(const CycNum& b) {
  if (b.conductor_ != conductor_) {
    unsigned m = lcm_conductor(conductor_, b.conductor_);
    *this = change_conductor(*this, m);
    return *this += change_conductor(b, m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  if (b.conductor_ != conductor_) {
    unsigned m = lcm_conductor(conductor_, b.conductor_);
    *this = change_conductor(*this, m);
    return *this -= change_conductor(b, m);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNum& CycNum::operator*=(const CycNum& b) {
  if (b.conductor_ != conductor_) {
    unsigned m = lcm_conductor(conductor_, b.conductor_);
    *this = change_conductor(*this, m);
    return *this *= change_conductor(b, m);
  }
  if (b.is_rational()) {
    const Rational& s = b.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = coeffs_[0];
    coeffs_ = b.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  const FieldData& f = field(conductor_);
  std::vector<Rational> buckets(conductor_, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      buckets[(i + j) % conductor_] += coeffs_[i] * b.coeffs_[j];
    }
  }
  coeffs_ = fold(f, buckets);
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "division by the zero element");
  if (is_rational()) {
    CycNum r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // a^{-1} = (product of the other Galois conjugates) / norm(a)
  const FieldData& f = field(conductor_);
  CycNum others(Rational(1));
  for (unsigned u : f.units) {
    if (u % conductor_ == 1 % conductor_) continue;
    others *= galois(u);
  }
  others = change_conductor(others, conductor_);
  CycNum norm = *this * others;
  if (!norm.is_rational()) throw std::logic_error("field norm is not rational");
  Rational inv = 1 / norm.coeffs_[0];
  for (auto& c : others.coeffs_) c *= inv;
  return others;
}

CycNum& CycNum::operator/=(const CycNum& b) { return *this *= b.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  unsigned m = std::lcm(a.conductor_, b.conductor_);
  return change_conductor(a, m).coeffs_ == change_conductor(b, m).coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor_;
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::complex<double> embed_complex(const CycNum& a) {
  const double base = 2.0 * std::numbers::pi / a.conductor();
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const double c = a.coeffs()[k].get_d();
    if (c == 0.0) continue;
    sum += c * std::polar(1.0, base * static_cast<double>(k));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Minimal polynomials and integrality

Polynomial characteristic_polynomial(const CycNum& a) {
  const std::size_t n = a.coeffs().size();
  // Column k holds a * zeta^k.
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    CycNum col = a * CycNum::zeta(a.conductor(), static_cast<long>(k));
    col = change_conductor(col, a.conductor());
    for (std::size_t i = 0; i < n; ++i) mat[i][k] = col.coeffs()[i];
  }
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (mat[i][l] != 0 && m[l][j] != 0) s += mat[i][l] * m[l][j];
        }
        am[i][j] = s;
      }
    }
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
    std::swap(m, am);
  }
  return Polynomial(std::move(c));
}

Polynomial minimal_polynomial(const CycNum& a) {
  Polynomial p = characteristic_polynomial(a);
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

CycNum evaluate(const Polynomial& p, const CycNum& a) {
  CycNum acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc *= a;
    acc += CycNum(p.coeffs()[i]);
  }
  return acc;
}

bool is_algebraic_integer(const CycNum& a) {
  const bool by_charpoly = characteristic_polynomial(a).has_integer_coeffs();
#ifdef FUSCAT_INTEGRALITY_CROSSCHECK
  const bool by_minpoly = minimal_polynomial(a).has_integer_coeffs();
  if (by_charpoly != by_minpoly) {
    throw std::logic_error("integrality criteria disagree on " + a.to_string());
  }
#endif
  return by_charpoly;
}

CycNum sqrt5() {
  return CycNum(1) + 2 * CycNum::zeta(5, 1) + 2 * CycNum::zeta(5, 4);
}

CycNum golden_ratio() { return (CycNum(1) + sqrt5()) / CycNum(2); }

}  // namespace fuscat
