#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "horn/enumeration.hpp"
#include "horn/triple.hpp"

namespace horn {

// Eigenvalues repeated by multiplicity, sorted descending.
class Spectrum {
public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values);

  int n() const { return static_cast<int>(values_.size()); }
  double value(int j) const { return values_.at(static_cast<std::size_t>(j) - 1); }  // 1-based
  const std::vector<double>& values() const { return values_; }
  double sum() const;

private:
  std::vector<double> values_;
};

// Dense complex matrix kept Hermitian by construction: writing (i,j) also
// writes the conjugate at (j,i).
class HermitianMatrix {
public:
  explicit HermitianMatrix(int n);

  int n() const { return n_; }
  std::complex<double> at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, std::complex<double> v);
  double frobenius() const;
  double off_diagonal_norm() const;

  HermitianMatrix operator+(const HermitianMatrix& o) const;

  const std::vector<std::complex<double>>& raw() const { return a_; }

private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  friend Spectrum jacobi_eigenvalues(const HermitianMatrix&);
  int n_;
  std::vector<std::complex<double>> a_;
};

struct JacobiError : std::runtime_error {
  JacobiError(const std::string& msg, double residual_)
      : std::runtime_error(msg), residual(residual_) {}
  double residual;
};

// Cyclic Jacobi with complex 2x2 Hermitian rotations; converges when the
// off-diagonal Frobenius mass drops below 1e-12 of the matrix norm. Throws
// JacobiError with the residual if the sweep bound is exhausted.
Spectrum jacobi_eigenvalues(const HermitianMatrix& M);

struct HermitianPair {
  HermitianMatrix A, B;
  std::uint64_t seed;
};

// Gaussian Hermitian pair, deterministic per seed.
HermitianPair sample_pair(int n, std::uint64_t seed);

// Prescribed spectra conjugated by independent pseudo-Haar unitaries
// (orthonormalized complex Gaussian matrices).
HermitianPair sample_pair(int n, std::uint64_t seed, const Spectrum& alpha,
                          const Spectrum& beta);

// The right-continuous non-increasing step function: alpha_j on
// [(j-1)/n, j/n). Throws if t is outside [0,1).
double eigenvalue_function(const Spectrum& s, double t);

// Integral of the eigenvalue function over omega_I = union of [ (i-1)/n, i/n )
// for i in I; equals (1/n) * sum of the selected eigenvalues.
double omega_integral(const Spectrum& s, const IndexSet& I);

// Slack lhs - rhs of the Horn inequality for (alpha, beta, gamma) and t.
// classic uses alpha_i, beta_j; tilde uses alpha_{n+1-i}, beta_{n+1-j}.
double horn_slack(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma,
                  const HornTriple& t, Variant form);

struct SlackRow {
  HornTriple triple;
  double min_slack = 0;             // raw minimum over samples
  double min_scaled_slack = 0;      // minimum of slack / (1 + |A|_F + |B|_F)
  std::uint64_t argmin_seed = 0;    // derived per-sample seed attaining the minimum
  bool beyond_theorem_range = false;  // r = n rows: sums force equality
};

struct SlackReport {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double slack_tol = 0;
  double trace_tol = 0;
  std::vector<SlackRow> rows;
  double min_scaled_slack = 0;
  double max_scaled_trace_error = 0;

  bool ok() const { return min_scaled_slack >= -slack_tol && max_scaled_trace_error <= trace_tol; }
};

// Minimum Horn slack per triple in the classic sets for r = 1..n over sampled
// Gaussian Hermitian pairs, with gamma from the Jacobi solver. Also checks
// the trace identity per sample. Per-sample RNG is derived from (seed, index)
// so the result is independent of evaluation order; threads > 1 splits the
// samples.
SlackReport sweep(int n, int samples, std::uint64_t seed, double slack_tol, double trace_tol,
                  TripleCache& cache, int threads = 1);

}  // namespace horn
