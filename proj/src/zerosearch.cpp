#include "oek/zerosearch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/AutoDiff>

namespace oek {

std::string_view to_string(CertificateOrigin origin) {
  return origin == CertificateOrigin::slice_root ? "slice_root" : "minimization";
}

std::string_view to_string(VerdictStatus status) {
  return status == VerdictStatus::consistent ? "CONSISTENT" : "VIOLATED";
}

double coefficient_scale(const OctPolynomial& p) {
  double s = 1.0;
  for (const auto& a : p.coeffs()) s = std::max(s, norm(a));
  return s;
}

namespace {

// max(1, sum_k |a_k| |q|^k): magnitude of the terms summed by eval at q.
double evaluation_scale(const OctPolynomial& p, double modulus) {
  double s = 0.0, qk = 1.0;
  for (const auto& a : p.coeffs()) {
    s += norm(a) * qk;
    qk *= modulus;
  }
  return std::max(1.0, s);
}

ZeroCertificate certify_with_threshold(const OctPolynomial& p, const OctonionD& point,
                                       CertificateOrigin origin, double threshold) {
  ZeroCertificate c;
  c.point = point;
  c.residual = norm(eval(p, point));
  c.modulus = norm(point);
  c.origin = origin;
  c.certified = c.residual <= threshold;
  c.start = point;
  return c;
}

}  // namespace

ZeroCertificate certify(const OctPolynomial& p, const OctonionD& point, CertificateOrigin origin,
                        double certify_tol) {
  return certify_with_threshold(p, point, origin, certify_tol * coefficient_scale(p));
}

std::vector<ZeroCertificate> slice_roots(const OctPolynomial& p, const ImaginaryUnitD& unit,
                                         double tol) {
  const SlicePolynomial<double> sp = restrict_to_slice(p, unit);
  const int n = sp.degree();
  std::vector<ZeroCertificate> out;
  if (n < 1) return out;

  using Complex = std::complex<double>;
  const auto& c = sp.coeffs();
  Eigen::VectorXcd roots(n);
  if (n == 1) {
    roots[0] = -c[0] / c[1];
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    companion.diagonal(-1).setOnes();
    for (int k = 0; k < n; ++k) companion(k, n - 1) = -c[k] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigensolver failed");
    roots = solver.eigenvalues();
  }

  auto derivative = [&](const Complex& z) {
    Complex d(0);
    for (int k = n; k >= 1; --k) d = d * z + static_cast<double>(k) * c[k];
    return d;
  };
  for (int r = 0; r < n; ++r) {
    Complex z = roots[r];
    double fz = std::abs(sp.eval(z));
    for (int it = 0; it < 20 && fz > 0; ++it) {
      const Complex d = derivative(z);
      if (d == Complex(0)) break;
      const Complex next = z - sp.eval(z) / d;
      const double fnext = std::abs(sp.eval(next));
      if (!(fnext < fz)) break;
      z = next;
      fz = fnext;
    }
    const OctonionD point = sp.embed(z);
    ZeroCertificate cert = certify_with_threshold(
        p, point, CertificateOrigin::slice_root, tol * evaluation_scale(p, norm(point)));
    cert.start = sp.embed(roots[r]);
    cert.start_index = static_cast<std::size_t>(r);
    out.push_back(cert);
  }
  return out;
}

std::vector<ZeroCertificate> expand_real_zero_spheres(const std::vector<ZeroCertificate>& certs,
                                                      const OctPolynomial& p, int samples,
                                                      std::uint64_t seed, double certify_tol) {
  if (!p.has_real_coefficients())
    throw DomainError("sphere expansion needs real coefficients");
  std::vector<ZeroCertificate> out = certs;
  if (samples <= 0) return out;
  std::mt19937_64 rng(seed);
  for (const auto& cert : certs) {
    const double x = cert.point.real();
    const double y = norm(cert.point.imag());
    if (y <= 1e-12 * std::max(1.0, cert.modulus)) continue;
    for (int s = 0; s < samples; ++s) {
      const ImaginaryUnitD J = random_unit_imaginary(rng());
      const OctonionD point = OctonionD(x) + y * J.value();
      ZeroCertificate c = certify_with_threshold(
          p, point, cert.origin, certify_tol * evaluation_scale(p, norm(point)));
      c.start = cert.point;
      c.start_index = cert.start_index;
      out.push_back(c);
    }
  }
  return out;
}

namespace {

using Derivatives = Eigen::Matrix<double, 8, 1>;
using Dual = Eigen::AutoDiffScalar<Derivatives>;

struct Linearization {
  Eigen::Matrix<double, 8, 1> value;
  Eigen::Matrix<double, 8, 8> jacobian;
};

Linearization linearize(const Polynomial<Dual>& pd, const OctonionD& q) {
  Octonion<Dual>::Coeffs x;
  for (int i = 0; i < 8; ++i) x[i] = Dual(q[i], 8, i);
  const Octonion<Dual> r = eval(pd, Octonion<Dual>(x));
  Linearization lin;
  for (int k = 0; k < 8; ++k) {
    lin.value[k] = r[k].value();
    lin.jacobian.row(k) = r[k].derivatives().transpose();
  }
  return lin;
}

}  // namespace

Eigen::Matrix<double, 8, 8> evaluation_jacobian(const OctPolynomial& p, const OctonionD& q) {
  return linearize(p.cast<Dual>(), q).jacobian;
}

Eigen::Matrix<double, 8, 1> modulus_squared_gradient(const OctPolynomial& p, const OctonionD& q) {
  const Linearization lin = linearize(p.cast<Dual>(), q);
  return 2.0 * lin.jacobian.transpose() * lin.value;
}

ZeroCertificate minimize_modulus(const OctPolynomial& p, const OctonionD& q0, int max_iters,
                                 double certify_tol) {
  const Polynomial<Dual> pd = p.cast<Dual>();
  const double stop = 1e-15 * coefficient_scale(p);

  OctonionD q = q0;
  Linearization lin = linearize(pd, q);
  double f = lin.value.squaredNorm();
  double lambda = 1e-3;
  int it = 0;
  for (; it < max_iters; ++it) {
    if (std::sqrt(f) <= stop) break;
    const Eigen::Matrix<double, 8, 8> a = lin.jacobian.transpose() * lin.jacobian;
    const Eigen::Matrix<double, 8, 1> g = lin.jacobian.transpose() * lin.value;
    const double mu = std::max(a.diagonal().maxCoeff(), 1e-300);

    bool improved = false;
    Eigen::Matrix<double, 8, 1> step = Eigen::Matrix<double, 8, 1>::Zero();
    while (lambda < 1e12) {
      Eigen::Matrix<double, 8, 8> damped = a;
      damped.diagonal().array() += lambda * mu;
      step = damped.ldlt().solve(-g);
      if (!step.allFinite()) {
        lambda *= 4;
        continue;
      }
      const OctonionD trial(Eigen::Matrix<double, 8, 1>(q.coeffs() + step));
      const double f_trial = squared_norm(eval(p, trial));
      if (f_trial < f) {
        q = trial;
        f = f_trial;
        lambda = std::max(lambda / 3, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4;
    }
    if (!improved) break;
    lin = linearize(pd, q);
    f = lin.value.squaredNorm();
    if (step.norm() <= 1e-16 * (1.0 + norm(q))) break;
  }

  ZeroCertificate cert = certify(p, q, CertificateOrigin::minimization, certify_tol);
  cert.start = q0;
  cert.iterations = it;
  return cert;
}

namespace {

OctonionD sample_start(const BoundResult& bound, double search_radius, std::uint64_t seed,
                       std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::Matrix<double, 8, 1> dir;
  do {
    for (int k = 0; k < 8; ++k) dir[k] = gauss(rng);
  } while (dir.norm() < 1e-12);
  dir.normalize();
  const double u = unif(rng);
  double radius;
  if (bound.kind == BoundKind::inclusion) {
    const double lo = std::min(bound.radius, search_radius);
    radius = lo + (search_radius - lo) * (1.0 - u);
  } else {
    radius = bound.radius * u;
  }
  return OctonionD(Eigen::Matrix<double, 8, 1>(radius * dir));
}

bool violates(const BoundResult& bound, double modulus) {
  return bound.kind == BoundKind::inclusion ? modulus > bound.radius + kViolationSlack
                                            : modulus < bound.radius - kViolationSlack;
}

}  // namespace

VerificationVerdict multistart_verify(const OctPolynomial& p, const BoundResult& bound,
                                      const SearchConfig& cfg) {
  if (cfg.starts < 1) throw DomainError("SearchConfig.starts must be >= 1");
  if (!(cfg.search_radius > 0)) throw DomainError("SearchConfig.search_radius must be > 0");

  const std::size_t starts = static_cast<std::size_t>(cfg.starts);
  std::vector<ZeroCertificate> runs(starts);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads =
      std::min<std::size_t>(starts, cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads) : hw);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < starts; i = next++) {
        const OctonionD q0 = sample_start(bound, cfg.search_radius, cfg.seed, i);
        ZeroCertificate c = minimize_modulus(p, q0, cfg.max_iters, cfg.certify_tol);
        c.start_index = i;
        runs[i] = c;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  VerificationVerdict verdict;
  verdict.bound = bound;
  verdict.starts_run = cfg.starts;
  std::vector<ZeroCertificate> accepted;
  for (const auto& c : runs) {
    if (c.certified)
      accepted.push_back(c);
    else
      ++verdict.rejected;
  }
  verdict.accepted = static_cast<int>(accepted.size());
  std::sort(accepted.begin(), accepted.end(), [](const auto& a, const auto& b) {
    return a.modulus != b.modulus ? a.modulus < b.modulus : a.start_index < b.start_index;
  });

  if (!accepted.empty()) {
    verdict.min_modulus = accepted.front().modulus;
    verdict.max_modulus = accepted.back().modulus;
    const ZeroCertificate& extreme =
        bound.kind == BoundKind::inclusion ? accepted.back() : accepted.front();
    if (violates(bound, extreme.modulus)) {
      verdict.status = VerdictStatus::violated;
      verdict.offending = extreme;
    }
  }

  for (const auto& c : accepted) {
    const double tol = 1e-6 * std::max(1.0, c.modulus);
    const bool dup = std::any_of(
        verdict.certificates.begin(), verdict.certificates.end(),
        [&](const ZeroCertificate& kept) { return norm(kept.point - c.point) <= tol; });
    if (!dup) verdict.certificates.push_back(c);
  }
  return verdict;
}

double max_zero_modulus(const OctPolynomial& p, const ImaginaryUnitD& unit) {
  double m = 0.0;
  for (const auto& c : slice_roots(p, unit)) m = std::max(m, c.modulus);
  return m;
}

}  // namespace oek
