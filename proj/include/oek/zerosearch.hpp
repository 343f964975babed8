#ifndef OEK_ZEROSEARCH_HPP
#define OEK_ZEROSEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "oek/bounds.hpp"
#include "oek/polynomial.hpp"

namespace oek {

enum class CertificateOrigin { slice_root, minimization };
std::string_view to_string(CertificateOrigin origin);

// A located near-zero. `residual` is |p(point)| from a fresh evaluation,
// independent of how the point was found.
struct ZeroCertificate {
  OctonionD point;
  double residual = 0.0;
  double modulus = 0.0;
  CertificateOrigin origin = CertificateOrigin::minimization;
  bool certified = false;  // residual <= certify tolerance
  // Search trace.
  OctonionD start;
  int iterations = 0;
  std::size_t start_index = 0;
};

struct SearchConfig {
  int starts = 500;
  std::uint64_t seed = 0;
  double search_radius = 1.0;
  double certify_tol = 1e-8;
  int max_iters = 200;
  int threads = 0;  // 0: hardware concurrency
};

// Slack a certificate must exceed a bound by to count as a violation.
inline constexpr double kViolationSlack = 1e-6;

// max(1, max_k |a_k|): the certify tolerance is multiplied by this.
double coefficient_scale(const OctPolynomial& p);

// Evaluates p at `point` and fills residual, modulus and certified.
ZeroCertificate certify(const OctPolynomial& p, const OctonionD& point, CertificateOrigin origin,
                        double certify_tol);

// All n zeros of p on the slice L_I (coefficients must lie in L_I), from the
// companion matrix of the restricted complex polynomial, Newton-polished and
// certified with |p(x + yI)| <= tol * max(1, sum_k |a_k| |q|^k).
std::vector<ZeroCertificate> slice_roots(const OctPolynomial& p, const ImaginaryUnitD& unit,
                                         double tol = 1e-8);

// Real-coefficient polynomials vanish on whole spheres x + y S. For each
// nonreal certificate, appends `samples` re-certified points x + yJ with
// random J on the imaginary unit sphere.
std::vector<ZeroCertificate> expand_real_zero_spheres(const std::vector<ZeroCertificate>& certs,
                                                      const OctPolynomial& p, int samples,
                                                      std::uint64_t seed,
                                                      double certify_tol = 1e-8);

// 8x8 Jacobian of q -> p(q) as a map R^8 -> R^8 (forward-mode autodiff).
Eigen::Matrix<double, 8, 8> evaluation_jacobian(const OctPolynomial& p, const OctonionD& q);
// Gradient of F(q) = |p(q)|^2, i.e. 2 J^T p(q).
Eigen::Matrix<double, 8, 1> modulus_squared_gradient(const OctPolynomial& p, const OctonionD& q);

// Levenberg-Marquardt descent on F(q) = |p(q)|^2 from q0. Returns the best
// point found; `certified` is set against `certify_tol`.
ZeroCertificate minimize_modulus(const OctPolynomial& p, const OctonionD& q0, int max_iters,
                                 double certify_tol = 1e-8);

enum class VerdictStatus { consistent, violated };
std::string_view to_string(VerdictStatus status);

struct VerificationVerdict {
  VerdictStatus status = VerdictStatus::consistent;
  BoundResult bound;
  int starts_run = 0;
  int accepted = 0;   // certified minimizations, before deduplication
  int rejected = 0;   // runs that ended above the certify tolerance
  std::vector<ZeroCertificate> certificates;  // distinct accepted, by (modulus, start)
  std::optional<ZeroCertificate> offending;
  std::optional<double> min_modulus;
  std::optional<double> max_modulus;
};

// Minimizations from `cfg.starts` points drawn in the shell
// r < |q| <= search_radius (inclusion bound of radius r) or in |q| < r
// (exclusion). A certified zero beyond the bound by more than
// kViolationSlack makes the verdict VIOLATED. Start i draws from a
// generator seeded by (seed, i), so the verdict is schedule-independent.
VerificationVerdict multistart_verify(const OctPolynomial& p, const BoundResult& bound,
                                      const SearchConfig& cfg);

// Largest zero modulus on the slice L_I; 0 for constants.
double max_zero_modulus(const OctPolynomial& p, const ImaginaryUnitD& unit);

}  // namespace oek

#endif  // OEK_ZEROSEARCH_HPP
