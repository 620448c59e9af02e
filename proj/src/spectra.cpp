#include "horn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace horn {

namespace {

using Cplx = std::complex<double>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1])
      throw std::invalid_argument("spectrum not weakly decreasing");
}

double Spectrum::sum() const {
  double s = 0;
  for (double v : values_) s += v;
  return s;
}

HermitianMatrix::HermitianMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("HermitianMatrix: n < 1");
  a_.assign(static_cast<std::size_t>(n) * n, Cplx(0, 0));
}

void HermitianMatrix::set(int i, int j, Cplx v) {
  if (i == j) v = Cplx(v.real(), 0);
  a_[idx(i, j)] = v;
  a_[idx(j, i)] = std::conj(v);
}

double HermitianMatrix::frobenius() const {
  double s = 0;
  for (const Cplx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double HermitianMatrix::off_diagonal_norm() const {
  double s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) s += std::norm(a_[idx(i, j)]);
  return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  HermitianMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Spectrum jacobi_eigenvalues(const HermitianMatrix& M) {
  const int n = M.n();
  std::vector<Cplx> a = M.raw();
  const auto at = [&](int i, int j) -> Cplx& { return a[static_cast<std::size_t>(i) * n + j]; };

  const double norm = M.frobenius();
  const double tol = 1e-12 * norm;
  constexpr int kMaxSweeps = 64;

  auto off_norm = [&] {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(at(i, j));
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (off_norm() > tol) {
    if (++sweeps > kMaxSweeps)
      throw JacobiError("jacobi_eigenvalues: no convergence after " +
                            std::to_string(kMaxSweeps) + " sweeps, residual " +
                            std::to_string(off_norm()),
                        off_norm());
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Cplx apq = at(p, q);
        const double rho = std::abs(apq);
        if (rho == 0.0) continue;
        const double phi = std::arg(apq);
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        // Unitary U with U_pp = c, U_pq = s, U_qp = -s e^{-i phi},
        // U_qq = c e^{-i phi}; U* A U zeroes the (p,q) entry.
        const double theta = 0.5 * std::atan2(2.0 * rho, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Cplx eim = std::polar(1.0, -phi);
        const Cplx upp(c, 0), upq(s, 0);
        const Cplx uqp = -s * eim, uqq = c * eim;
        for (int i = 0; i < n; ++i) {  // columns: A <- A U
          const Cplx aip = at(i, p), aiq = at(i, q);
          at(i, p) = aip * upp + aiq * uqp;
          at(i, q) = aip * upq + aiq * uqq;
        }
        for (int j = 0; j < n; ++j) {  // rows: A <- U* A
          const Cplx apj = at(p, j), aqj = at(q, j);
          at(p, j) = std::conj(upp) * apj + std::conj(uqp) * aqj;
          at(q, j) = std::conj(upq) * apj + std::conj(uqq) * aqj;
        }
        at(p, q) = Cplx(0, 0);
        at(q, p) = Cplx(0, 0);
        at(p, p) = Cplx(at(p, p).real(), 0);
        at(q, q) = Cplx(at(q, q).real(), 0);
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<double>());
  return Spectrum(std::move(eig));
}

namespace {

HermitianMatrix gaussian_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  HermitianMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, Cplx(g(rng), 0));
    for (int j = i + 1; j < n; ++j) m.set(i, j, Cplx(g(rng), g(rng)) / std::sqrt(2.0));
  }
  return m;
}

// Orthonormalized complex Gaussian matrix, columns as the unitary's columns.
std::vector<Cplx> pseudo_haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cplx> u(static_cast<std::size_t>(n) * n);
  const auto at = [&](int i, int j) -> Cplx& { return u[static_cast<std::size_t>(i) * n + j]; };
  for (auto& v : u) v = Cplx(g(rng), g(rng));
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {  // modified Gram-Schmidt, twice
      for (int k = 0; k < j; ++k) {
        Cplx dot(0, 0);
        for (int i = 0; i < n; ++i) dot += std::conj(at(i, k)) * at(i, j);
        for (int i = 0; i < n; ++i) at(i, j) -= dot * at(i, k);
      }
    }
    double nrm = 0;
    for (int i = 0; i < n; ++i) nrm += std::norm(at(i, j));
    nrm = std::sqrt(nrm);
    for (int i = 0; i < n; ++i) at(i, j) /= nrm;
  }
  return u;
}

HermitianMatrix conjugate_diag(const Spectrum& spec, const std::vector<Cplx>& u, int n) {
  HermitianMatrix m(n);
  const auto at = [&](int i, int j) { return u[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Cplx s(0, 0);
      for (int k = 0; k < n; ++k) s += at(i, k) * spec.value(k + 1) * std::conj(at(j, k));
      m.set(i, j, s);
    }
  }
  return m;
}

}  // namespace

HermitianPair sample_pair(int n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  HermitianMatrix a = gaussian_hermitian(n, rng);
  HermitianMatrix b = gaussian_hermitian(n, rng);
  return HermitianPair{std::move(a), std::move(b), seed};
}

HermitianPair sample_pair(int n, std::uint64_t seed, const Spectrum& alpha,
                          const Spectrum& beta) {
  if (alpha.n() != n || beta.n() != n)
    throw std::invalid_argument("sample_pair: spectrum size mismatch");
  std::mt19937_64 rng(splitmix64(seed));
  auto u = pseudo_haar_unitary(n, rng);
  auto v = pseudo_haar_unitary(n, rng);
  return HermitianPair{conjugate_diag(alpha, u, n), conjugate_diag(beta, v, n), seed};
}

double eigenvalue_function(const Spectrum& s, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw std::out_of_range("eigenvalue_function: t outside [0,1)");
  const int n = s.n();
  int j = static_cast<int>(t * n) + 1;
  if (j > n) j = n;
  return s.value(j);
}

double omega_integral(const Spectrum& s, const IndexSet& I) {
  if (I.n() != s.n()) throw std::invalid_argument("omega_integral: ambient mismatch");
  double sum = 0;
  for (int i : I.elements()) sum += s.value(i);
  return sum / s.n();
}

double horn_slack(const Spectrum& alpha, const Spectrum& beta, const Spectrum& gamma,
                  const HornTriple& t, Variant form) {
  const int n = t.n;
  if (alpha.n() != n || beta.n() != n || gamma.n() != n)
    throw std::invalid_argument("horn_slack: size mismatch");
  double lhs = 0, rhs = 0;
  for (int i : t.I.elements()) lhs += form == Variant::classic ? alpha.value(i) : alpha.value(n + 1 - i);
  for (int j : t.J.elements()) lhs += form == Variant::classic ? beta.value(j) : beta.value(n + 1 - j);
  for (int k : t.K.elements()) rhs += gamma.value(k);
  return lhs - rhs;
}

SlackReport sweep(int n, int samples, std::uint64_t seed, double slack_tol, double trace_tol,
                  TripleCache& cache, int threads) {
  SlackReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  report.slack_tol = slack_tol;
  report.trace_tol = trace_tol;

  std::vector<HornTriple> triples;
  for (int r = 1; r <= n; ++r) {
    auto set = enumerate_t(n, r, Variant::classic, cache);
    triples.insert(triples.end(), set->begin(), set->end());
  }

  struct Acc {
    std::vector<double> min_slack, min_scaled;
    std::vector<std::uint64_t> argmin;
    std::vector<std::uint64_t> argmin_index;
    double max_trace_err = 0;
  };
  const std::size_t m = triples.size();
  auto make_acc = [&] {
    Acc acc;
    acc.min_slack.assign(m, std::numeric_limits<double>::infinity());
    acc.min_scaled.assign(m, std::numeric_limits<double>::infinity());
    acc.argmin.assign(m, 0);
    acc.argmin_index.assign(m, 0);
    return acc;
  };

  auto run_range = [&](int lo, int hi, Acc& acc) {
    for (int s = lo; s < hi; ++s) {
      const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
      HermitianPair pair = sample_pair(n, sample_seed);
      const Spectrum alpha = jacobi_eigenvalues(pair.A);
      const Spectrum beta = jacobi_eigenvalues(pair.B);
      const Spectrum gamma = jacobi_eigenvalues(pair.A + pair.B);
      const double scale = 1.0 + pair.A.frobenius() + pair.B.frobenius();
      const double trace_err = std::abs(alpha.sum() + beta.sum() - gamma.sum()) / scale;
      acc.max_trace_err = std::max(acc.max_trace_err, trace_err);
      for (std::size_t idx = 0; idx < m; ++idx) {
        const double slack = horn_slack(alpha, beta, gamma, triples[idx], Variant::classic);
        const double scaled = slack / scale;
        if (scaled < acc.min_scaled[idx] ||
            (scaled == acc.min_scaled[idx] &&
             static_cast<std::uint64_t>(s) < acc.argmin_index[idx])) {
          acc.min_scaled[idx] = scaled;
          acc.min_slack[idx] = slack;
          acc.argmin[idx] = sample_seed;
          acc.argmin_index[idx] = static_cast<std::uint64_t>(s);
        }
      }
    }
  };

  const int nthreads = std::max(1, threads);
  std::vector<Acc> accs;
  accs.reserve(static_cast<std::size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) accs.push_back(make_acc());
  if (nthreads == 1) {
    run_range(0, samples, accs[0]);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (samples + nthreads - 1) / nthreads;
    for (int i = 0; i < nthreads; ++i) {
      const int lo = i * chunk, hi = std::min(samples, (i + 1) * chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, i] { run_range(lo, hi, accs[static_cast<std::size_t>(i)]); });
    }
    for (auto& th : pool) th.join();
  }

  Acc total = make_acc();
  for (const Acc& acc : accs) {
    total.max_trace_err = std::max(total.max_trace_err, acc.max_trace_err);
    for (std::size_t idx = 0; idx < m; ++idx) {
      if (acc.min_scaled[idx] < total.min_scaled[idx] ||
          (acc.min_scaled[idx] == total.min_scaled[idx] &&
           acc.argmin_index[idx] < total.argmin_index[idx])) {
        total.min_scaled[idx] = acc.min_scaled[idx];
        total.min_slack[idx] = acc.min_slack[idx];
        total.argmin[idx] = acc.argmin[idx];
        total.argmin_index[idx] = acc.argmin_index[idx];
      }
    }
  }

  report.rows.reserve(m);
  report.min_scaled_slack = samples > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    SlackRow row;
    row.triple = triples[idx];
    row.min_slack = total.min_slack[idx];
    row.min_scaled_slack = total.min_scaled[idx];
    row.argmin_seed = total.argmin[idx];
    row.beyond_theorem_range = triples[idx].r() == n;
    report.rows.push_back(std::move(row));
    report.min_scaled_slack = std::min(report.min_scaled_slack, total.min_scaled[idx]);
  }
  report.max_scaled_trace_error = total.max_trace_err;
  return report;
}

}  // namespace horn
