#include "fuscat/chartab.hpp"

#include <algorithm>
#include <random>

#include <Eigen/Eigenvalues>

#include "fuscat/error.hpp"

namespace fuscat {

namespace {

constexpr int kMaxSpectrumAttempts = 32;
constexpr double kCollisionGap = 1e-6;
constexpr double kNumericHomTolerance = 1e-8;

std::size_t exact_rank(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    CycNum inv = m[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      CycNum f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CharacterTable validate_character_table(const FusionRing& ring, Matrix table) {
  if (!ring.has_exact_dims()) throw Error(Errc::ExactDataMissing, "character table needs exact FP-dimensions");
  const std::size_t r = ring.rank();
  if (table.size() != r) throw Error(Errc::Validation, "character table must have one row per simple");
  for (const auto& row : table) {
    if (row.size() != r) throw Error(Errc::Validation, "character table must be square");
  }

  for (std::size_t j = 0; j < r; ++j) {
    if (!(table[0][j] == CycNum(1))) {
      throw Error(Errc::NotAlgebraMap, "column " + std::to_string(j) + " does not send the unit to 1");
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = i; k < r; ++k) {
        CycNum rhs;
        for (std::size_t l = 0; l < r; ++l)
          if (int n = ring.N(i, k, l)) rhs += CycNum(static_cast<long>(n)) * table[l][j];
        if (!(table[i][j] * table[k][j] == rhs)) {
          throw Error(Errc::NotAlgebraMap, "column " + std::to_string(j) + " fails on (i,k) = (" +
                                               std::to_string(i) + "," + std::to_string(k) + ")");
        }
      }
  }

  if (exact_rank(table) != r) throw Error(Errc::SingularTable, "character table is not invertible");

  CharacterTable out;
  bool found = false;
  for (std::size_t j = 0; j < r && !found; ++j) {
    bool match = true;
    for (std::size_t i = 0; i < r && match; ++i) match = table[i][j] == ring.dim(i);
    if (match) {
      out.fp_column_ = j;
      found = true;
    }
  }
  if (!found) throw Error(Errc::NoFPColumn, "no column equals the FP-dimension vector");

  const CycNum total = global_fpdim(ring);
  CycNum class_sum;
  for (std::size_t j = 0; j < r; ++j) {
    CycNum codeg;
    for (std::size_t i = 0; i < r; ++i) codeg += table[i][j] * table[ring.dual(i)][j];
    if (codeg.is_zero()) throw Error(Errc::SingularTable, "zero codegree at column " + std::to_string(j));
    out.codegrees_.push_back(codeg);
    out.class_dims_.push_back(total / codeg);
    class_sum += out.class_dims_.back();
  }
  if (!(class_sum == total)) throw Error(Errc::Validation, "class dimensions do not sum to FPdim(C)");
  out.alpha_ = std::move(table);
  return out;
}

NumericTable characters_numeric(const FusionRing& ring, std::uint64_t seed) {
  const auto r = static_cast<Eigen::Index>(ring.rank());
  std::vector<Eigen::MatrixXd> fusion(ring.rank(), Eigen::MatrixXd::Zero(r, r));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      for (Eigen::Index k = 0; k < r; ++k) fusion[i](j, k) = ring.N(i, j, k);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int attempt = 1; attempt <= kMaxSpectrumAttempts; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
    for (Eigen::Index i = 0; i < r; ++i) combo += unif(rng) * fusion[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(combo);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd ev = solver.eigenvalues();
    bool collide = false;
    for (Eigen::Index a = 0; a < r && !collide; ++a)
      for (Eigen::Index b = a + 1; b < r && !collide; ++b) collide = std::abs(ev(a) - ev(b)) < kCollisionGap;
    if (collide) continue;

    const Eigen::MatrixXcd vecs = solver.eigenvectors();
    NumericTable out;
    out.attempts = attempt;
    out.values.assign(ring.rank(), std::vector<std::complex<double>>(ring.rank()));
    bool ok = true;
    for (Eigen::Index j = 0; j < r && ok; ++j) {
      const Eigen::VectorXcd v = vecs.col(j);
      const double vv = v.squaredNorm();
      for (Eigen::Index i = 0; i < r; ++i) {
        const Eigen::VectorXcd w = fusion[i].cast<std::complex<double>>() * v;
        const std::complex<double> mu = v.dot(w) / vv;
        if ((w - mu * v).norm() > kNumericHomTolerance * std::max(1.0, std::abs(mu)) * std::sqrt(vv)) ok = false;
        out.values[i][j] = mu;
      }
    }
    if (!ok) continue;
    for (std::size_t j = 0; j < ring.rank() && ok; ++j)
      for (std::size_t i = 0; i < ring.rank() && ok; ++i)
        for (std::size_t k = 0; k < ring.rank() && ok; ++k) {
          std::complex<double> s = 0;
          for (std::size_t l = 0; l < ring.rank(); ++l) s += static_cast<double>(ring.N(i, k, l)) * out.values[l][j];
          ok = std::abs(out.values[i][j] * out.values[k][j] - s) <= kNumericHomTolerance * std::max(1.0, std::abs(s));
        }
    if (ok) return out;
  }
  throw Error(Errc::DegenerateSpectrum,
              "no separating combination found after " + std::to_string(kMaxSpectrumAttempts) + " attempts");
}

std::vector<std::size_t> match_columns(const CharacterTable& table, const NumericTable& numeric, double tol) {
  const std::size_t r = table.rank();
  std::vector<std::size_t> perm(r);
  std::vector<bool> used(r, false);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t best = r;
    double best_err = tol;
    for (std::size_t c = 0; c < r; ++c) {
      if (used[c]) continue;
      double err = 0.0;
      for (std::size_t i = 0; i < r; ++i)
        err = std::max(err, std::abs(embed_complex(table.alpha(i, j)) - numeric.values[i][c]));
      if (err <= best_err) {
        best_err = err;
        best = c;
      }
    }
    if (best == r) return {};
    used[best] = true;
    perm[j] = best;
  }
  return perm;
}

ClassFunction class_function_from_chi(const CharacterTable& table, std::vector<CycNum> chi) {
  const std::size_t r = table.rank();
  if (chi.size() != r) throw std::invalid_argument("class function length must equal the rank");
  ClassFunction cf;
  cf.f_coords.assign(r, CycNum());
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (!chi[i].is_zero()) cf.f_coords[j] += chi[i] * table.alpha(i, j);
  cf.chi_coords = std::move(chi);
  return cf;
}

ClassFunction multiply(const FusionRing& ring, const CharacterTable& table, const ClassFunction& x,
                       const ClassFunction& y) {
  KElement p = multiply(ring, KElement{x.chi_coords}, KElement{y.chi_coords});
  return class_function_from_chi(table, std::move(p.coeffs));
}

ClassFunction lambda_subcategory(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub) {
  const CycNum dim = subcategory_fpdim(ring, sub);
  std::vector<CycNum> chi(ring.rank());
  for (auto i : sub.members()) chi[i] = ring.dim(i) / dim;
  ClassFunction lambda = class_function_from_chi(table, std::move(chi));
  if (!(multiply(ring, table, lambda, lambda).chi_coords == lambda.chi_coords)) {
    throw Error(Errc::NotIdempotent, "cointegral of the subcategory is not idempotent");
  }
  return lambda;
}

std::vector<std::size_t> support_JD(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub) {
  const ClassFunction lambda = lambda_subcategory(ring, table, sub);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < table.rank(); ++j) {
    const CycNum& v = lambda.f_coords[j];
    if (v == CycNum(1)) {
      out.push_back(j);
    } else if (!v.is_zero()) {
      throw Error(Errc::NotIdempotent, "mu_" + std::to_string(j) + "(lambda_D) = " + v.to_string());
    }
  }
  return out;
}

ScalarCheck check_class_dim_sum(const FusionRing& ring, const CharacterTable& table, const Subcategory& sub) {
  CycNum lhs;
  for (auto j : support_JD(ring, table, sub)) lhs += table.class_dims()[j];
  return ScalarCheck::compare(lhs, global_fpdim(ring) / subcategory_fpdim(ring, sub));
}

MatrixCheck check_second_orthogonality(const FusionRing& ring, const CharacterTable& table) {
  const std::size_t r = ring.rank();
  const CycNum total = global_fpdim(ring);
  MatrixCheck out;
  out.lhs.assign(r, std::vector<CycNum>(r));
  out.rhs.assign(r, std::vector<CycNum>(r));
  out.pass = true;
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t k = 0; k < r; ++k) {
      CycNum s;
      for (std::size_t i = 0; i < r; ++i) s += table.alpha(i, l) * table.alpha(ring.dual(i), k);
      out.lhs[l][k] = s;
      out.rhs[l][k] = l == k ? total / table.class_dims()[k] : CycNum();
      out.pass = out.pass && out.lhs[l][k] == out.rhs[l][k];
    }
  return out;
}

}  // namespace fuscat
