#ifndef OEK_BOUNDS_HPP
#define OEK_BOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oek/polynomial.hpp"

namespace oek {

enum class TheoremId {
  ek,         // real coefficients 0 < a0 <= ... <= an (with best scale a)
  moduli,     // |a_k| a^{n-k} nondecreasing, radius K1(n)/a
  angle,      // angle(a_k, +-1) <= alpha <= pi/2, moduli nondecreasing
  exclusion,  // same angle cone, moduli nonincreasing; zeros outside a ball
  realpart,   // real parts nonnegative nondecreasing
};

inline constexpr TheoremId kAllTheorems[] = {TheoremId::ek, TheoremId::moduli, TheoremId::angle,
                                             TheoremId::exclusion, TheoremId::realpart};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

enum class BoundKind { inclusion, exclusion };
std::string_view to_string(BoundKind kind);

struct BoundParameters {
  double scale = 1.0;                // a
  double alpha = 0.0;                // cone half-angle, radians
  int beta_sign = 1;                 // cone axis +1 or -1
  std::vector<int> gap_indices;      // nonvanishing indices n > n1 > n2 > ... (moduli)
  std::optional<double> unscaled_radius;  // ek: 1 when the unscaled chain holds
  std::optional<double> trinomial_root;   // moduli: K1(n)
};

struct HypothesisEntry {
  TheoremId theorem;
  bool applies = false;
  BoundParameters parameters;
  std::string failure_reason;
};

struct HypothesisReport {
  std::vector<HypothesisEntry> entries;  // one per theorem, in kAllTheorems order

  const HypothesisEntry& at(TheoremId id) const;
  bool any_applies() const;
};

// inclusion: every zero has |q| <= radius; exclusion: every zero has |q| >= radius.
struct BoundResult {
  TheoremId theorem;
  BoundKind kind;
  double radius;
  BoundParameters parameters;
};

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(TheoremId theorem, const std::string& violated);
  TheoremId theorem() const { return theorem_; }
  const std::string& violated() const { return violated_; }

 private:
  TheoremId theorem_;
  std::string violated_;
};

// Slack added to the right-hand side of every hypothesis inequality,
// scaled by max(1, largest quantity compared).
inline constexpr double kChainSlack = 1e-12;

HypothesisReport check_hypotheses(const OctPolynomial& p);

BoundResult ek_bound(const OctPolynomial& p);
BoundResult moduli_bound(const OctPolynomial& p);
BoundResult angle_bound(const OctPolynomial& p);
BoundResult angle_exclusion_bound(const OctPolynomial& p);
BoundResult realpart_bound(const OctPolynomial& p);
BoundResult bound_for(TheoremId id, const OctPolynomial& p);

struct BoundSet {
  std::vector<BoundResult> results;  // tightest inclusion first, then exclusions
  HypothesisReport report;
};

// Every applicable theorem, inclusions by ascending radius followed by
// exclusions by descending radius.
BoundSet best_bound(const OctPolynomial& p);

}  // namespace oek

#endif  // OEK_BOUNDS_HPP
