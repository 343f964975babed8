#include "oek/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "oek/trinomial.hpp"

namespace oek {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::ek: return "ek";
    case TheoremId::moduli: return "moduli";
    case TheoremId::angle: return "angle";
    case TheoremId::exclusion: return "exclusion";
    case TheoremId::realpart: return "realpart";
  }
  return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::inclusion ? "inclusion" : "exclusion";
}

HypothesisError::HypothesisError(TheoremId theorem, const std::string& violated)
    : std::runtime_error(std::string(to_string(theorem)) + ": " + violated),
      theorem_(theorem),
      violated_(violated) {}

const HypothesisEntry& HypothesisReport::at(TheoremId id) const {
  for (const auto& e : entries)
    if (e.theorem == id) return e;
  throw std::out_of_range("no hypothesis entry for theorem");
}

bool HypothesisReport::any_applies() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.applies; });
}

namespace {

struct Outcome {
  std::optional<BoundResult> result;
  BoundParameters parameters;
  std::string reason;
};

Outcome fail(std::string reason, BoundParameters params = {}) {
  return {std::nullopt, std::move(params), std::move(reason)};
}

Outcome ok(TheoremId id, BoundKind kind, double radius, BoundParameters params) {
  return {BoundResult{id, kind, radius, params}, params, {}};
}

// lhs <= rhs up to kChainSlack, relative to the magnitudes involved.
bool leq(double lhs, double rhs) {
  return lhs <= rhs + kChainSlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require_degree(const OctPolynomial& p) {
  if (p.degree() < 1) throw DomainError("zero bounds need a polynomial of degree >= 1");
}

std::vector<double> moduli(const OctPolynomial& p) {
  std::vector<double> m;
  m.reserve(p.degree() + 1);
  for (const auto& a : p.coeffs()) m.push_back(norm(a));
  return m;
}

Outcome evaluate_ek(const OctPolynomial& p) {
  const int n = p.degree();
  std::vector<double> a(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double im = p[k].imag().coeffs().cwiseAbs().maxCoeff();
    if (im > kChainSlack * std::max(1.0, std::abs(p[k].real())))
      return fail("coefficient a_" + std::to_string(k) + " is not real");
    a[k] = p[k].real();
  }
  if (!(a[0] > 0)) return fail("0 < a_0 fails (a_0 = " + fmt(a[0]) + ")");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    if (!(a[k + 1] > 0))
      return fail("0 < a_" + std::to_string(k + 1) + " fails (a_" + std::to_string(k + 1) +
                  " = " + fmt(a[k + 1]) + ")");
    best = std::min(best, a[k + 1] / a[k]);
  }
  BoundParameters params;
  params.scale = best;
  bool unscaled = true;
  for (int k = 0; k < n; ++k) unscaled = unscaled && leq(a[k], a[k + 1]);
  if (unscaled) params.unscaled_radius = 1.0;
  return ok(TheoremId::ek, BoundKind::inclusion, 1.0 / best, params);
}

Outcome evaluate_moduli(const OctPolynomial& p) {
  if (p.is_zero()) return fail("p is identically zero");
  const int n = p.degree();
  const std::vector<double> m = moduli(p);
  BoundParameters params;
  for (int k = n; k >= 0; --k)
    if (m[k] > 0) params.gap_indices.push_back(k);
  if (params.gap_indices.size() < 2)
    return fail("single nonvanishing coefficient: no finite scale (zeros only at the origin)",
                params);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < params.gap_indices.size(); ++i) {
    const int hi = params.gap_indices[i];
    const int lo = params.gap_indices[i + 1];
    best = std::min(best, std::pow(m[hi] / m[lo], 1.0 / (hi - lo)));
  }
  params.scale = best;
  params.trinomial_root = trinomial_root(n);
  return ok(TheoremId::moduli, BoundKind::inclusion, *params.trinomial_root / best, params);
}

// Smallest cone half-angle around +1 or -1 containing every nonzero
// coefficient. Zero coefficients satisfy the cone estimate trivially.
std::pair<double, int> cone_angle(const OctPolynomial& p) {
  double best_alpha = std::numeric_limits<double>::infinity();
  int best_sign = 1;
  for (int sign : {1, -1}) {
    const OctonionD axis(static_cast<double>(sign));
    double alpha = 0.0;
    for (const auto& a : p.coeffs())
      if (!a.is_zero()) alpha = std::max(alpha, angle(a, axis));
    if (alpha < best_alpha) {
      best_alpha = alpha;
      best_sign = sign;
    }
  }
  return {best_alpha, best_sign};
}

double cone_radius(double alpha, double lead_modulus, double rest_sum) {
  return std::cos(alpha) + std::sin(alpha) + 2.0 * std::sin(alpha) / lead_modulus * rest_sum;
}

std::optional<std::string> cone_failure(double alpha) {
  if (alpha <= std::numbers::pi / 2 + kChainSlack) return std::nullopt;
  return "angle cap fails: alpha = " + fmt(alpha) + " > pi/2";
}

Outcome evaluate_angle(const OctPolynomial& p) {
  if (p.is_zero()) return fail("p is identically zero");
  const int n = p.degree();
  const std::vector<double> m = moduli(p);
  const auto [alpha, sign] = cone_angle(p);
  BoundParameters params;
  params.alpha = std::min(alpha, std::numbers::pi / 2);
  params.beta_sign = sign;
  for (int k = 0; k < n; ++k)
    if (!leq(m[k], m[k + 1]))
      return fail("moduli order fails: |a_" + std::to_string(k) + "| = " + fmt(m[k]) +
                      " > |a_" + std::to_string(k + 1) + "| = " + fmt(m[k + 1]),
                  params);
  if (auto why = cone_failure(alpha)) return fail(*why, params);
  double rest = 0.0;
  for (int k = 0; k < n; ++k) rest += m[k];
  return ok(TheoremId::angle, BoundKind::inclusion, cone_radius(params.alpha, m[n], rest),
            params);
}

// Inclusion radius of the reversed polynomial, inverted. The sum runs
// a_n, a_{n-1}, ..., a_1: the same order angle_bound(reverse(p)) uses.
Outcome evaluate_exclusion(const OctPolynomial& p) {
  if (p.is_zero()) return fail("p is identically zero");
  const int n = p.degree();
  const std::vector<double> m = moduli(p);
  const auto [alpha, sign] = cone_angle(p);
  BoundParameters params;
  params.alpha = std::min(alpha, std::numbers::pi / 2);
  params.beta_sign = sign;
  for (int k = 0; k < n; ++k)
    if (!leq(m[k + 1], m[k]))
      return fail("moduli order fails: |a_" + std::to_string(k) + "| = " + fmt(m[k]) +
                      " < |a_" + std::to_string(k + 1) + "| = " + fmt(m[k + 1]),
                  params);
  if (auto why = cone_failure(alpha)) return fail(*why, params);
  double rest = 0.0;
  for (int k = n; k >= 1; --k) rest += m[k];
  return ok(TheoremId::exclusion, BoundKind::exclusion,
            1.0 / cone_radius(params.alpha, m[0], rest), params);
}

Outcome evaluate_realpart(const OctPolynomial& p) {
  const int n = p.degree();
  if (!leq(0.0, p[0].real())) return fail("0 <= a_{0,0} fails (a_{0,0} = " + fmt(p[0].real()) + ")");
  for (int k = 0; k < n; ++k)
    if (!leq(p[k].real(), p[k + 1].real()))
      return fail("a_{" + std::to_string(k) + ",0} <= a_{" + std::to_string(k + 1) +
                  ",0} fails (" + fmt(p[k].real()) + " > " + fmt(p[k + 1].real()) + ")");
  const double lead = p[n].real();
  if (!(lead > 0)) return fail("a_{n,0} != 0 fails");
  double imag_sum = 0.0;
  for (const auto& a : p.coeffs())
    for (int l = 1; l < 8; ++l) imag_sum += std::abs(a[l]);
  return ok(TheoremId::realpart, BoundKind::inclusion, 1.0 + 2.0 / lead * imag_sum, {});
}

Outcome evaluate(TheoremId id, const OctPolynomial& p) {
  switch (id) {
    case TheoremId::ek: return evaluate_ek(p);
    case TheoremId::moduli: return evaluate_moduli(p);
    case TheoremId::angle: return evaluate_angle(p);
    case TheoremId::exclusion: return evaluate_exclusion(p);
    case TheoremId::realpart: return evaluate_realpart(p);
  }
  throw std::logic_error("unknown theorem");
}

}  // namespace

BoundResult bound_for(TheoremId id, const OctPolynomial& p) {
  require_degree(p);
  Outcome out = evaluate(id, p);
  if (!out.result) throw HypothesisError(id, out.reason);
  return *out.result;
}

BoundResult ek_bound(const OctPolynomial& p) { return bound_for(TheoremId::ek, p); }
BoundResult moduli_bound(const OctPolynomial& p) { return bound_for(TheoremId::moduli, p); }
BoundResult angle_bound(const OctPolynomial& p) { return bound_for(TheoremId::angle, p); }
BoundResult angle_exclusion_bound(const OctPolynomial& p) {
  return bound_for(TheoremId::exclusion, p);
}
BoundResult realpart_bound(const OctPolynomial& p) { return bound_for(TheoremId::realpart, p); }

HypothesisReport check_hypotheses(const OctPolynomial& p) {
  require_degree(p);
  HypothesisReport report;
  for (TheoremId id : kAllTheorems) {
    Outcome out = evaluate(id, p);
    report.entries.push_back({id, out.result.has_value(), out.parameters, out.reason});
  }
  return report;
}

BoundSet best_bound(const OctPolynomial& p) {
  require_degree(p);
  BoundSet set;
  for (TheoremId id : kAllTheorems) {
    Outcome out = evaluate(id, p);
    set.report.entries.push_back({id, out.result.has_value(), out.parameters, out.reason});
    if (out.result) set.results.push_back(*out.result);
  }
  std::stable_sort(set.results.begin(), set.results.end(),
                   [](const BoundResult& a, const BoundResult& b) {
                     if (a.kind != b.kind) return a.kind == BoundKind::inclusion;
                     return a.kind == BoundKind::inclusion ? a.radius < b.radius
                                                           : a.radius > b.radius;
                   });
  return set;
}

}  // namespace oek
