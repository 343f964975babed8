// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oek/bounds.hpp"
#include "oek/families.hpp"
#include "oek/io.hpp"
#include "oek/polynomial.hpp"
#include "oek/structure_table.hpp"
#include "oek/trinomial.hpp"
#include "oek/zerosearch.hpp"

namespace {

using namespace oek;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: ";
      if (pass) detail << what << "; ";
      pass = false;
    }
  }
};

OctonionD gaussian_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  OctonionD::Coeffs x;
  for (int k = 0; k < 8; ++k) x[k] = g(rng);
  return OctonionD(x);
}

OctonionD e(int k) { return OctonionD::basis(k); }
const OctonionD kOne(1.0);

// Sum_k |a_k| |q|^k, the magnitude of the terms eval adds up.
double term_scale(const OctPolynomial& p, double modulus) {
  double s = 0.0, qk = 1.0;
  for (const auto& a : p.coeffs()) {
    s += norm(a) * qk;
    qk *= modulus;
  }
  return s;
}

// 1. Norm multiplicativity, alternative laws, two-generator associativity.
void algebra_validity(Outcome& out) {
  std::mt19937_64 rng(1001);
  double comp = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const OctonionD a = gaussian_octonion(rng), b = gaussian_octonion(rng);
    const double nn = norm(a) * norm(b);
    comp = std::max(comp, std::abs(norm(a * b) - nn) / nn);
  }
  double alt = 0.0, assoc = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const OctonionD a = gaussian_octonion(rng), b = gaussian_octonion(rng);
    const double na = norm(a), nb = norm(b);
    alt = std::max(alt, norm((a * a) * b - a * (a * b)) / (na * na * nb));
    alt = std::max(alt, norm((a * b) * b - a * (b * b)) / (na * nb * nb));
    alt = std::max(alt, norm((a * b) * a - a * (b * a)) / (na * nb * na));
    const OctonionD words[] = {a, b, a * b, b * a, (a * b) * a};
    for (const auto& x : words)
      for (const auto& y : words)
        for (const auto& z : words)
          assoc = std::max(assoc,
                           norm((x * y) * z - x * (y * z)) / (norm(x) * norm(y) * norm(z)));
  }
  out.require(comp <= 1e-12, "composition");
  out.require(alt <= 1e-11, "alternative laws");
  out.require(assoc <= 1e-11, "two-generator associativity");
  const ValidationReport v = validate_table(StructureTable::corrected(), 100000, 17);
  out.require(v.passed, "validate_table(corrected)");
  out.detail << "composition " << comp << ", alternative " << alt << ", associativity "
             << assoc << " (1e5 / 1e4 samples)";
}

// 2. Printed table fails with the exact witness; corrected gives 2 e6.
void discrepancy_detection(Outcome& out) {
  const ValidationReport r = validate_table(StructureTable::paper_printed(), 100000, 17);
  out.require(!r.passed, "printed table passed");
  out.require(r.witness.has_value(), "no witness");
  if (r.witness) {
    out.require(r.witness->a == (e(1) + e(2)).coeffs(), "witness a");
    out.require(r.witness->b == (e(4) + e(7)).coeffs(), "witness b");
    out.require(r.witness->product.isZero(0), "witness product nonzero");
    out.require(r.witness->norm_product == 2.0, "|a||b| != 2");
  }
  const OctonionD c = mul(e(1) + e(2), e(4) + e(7), StructureTable::corrected());
  out.require(c == 2.0 * e(6), "corrected product != 2 e6");
  out.detail << "printed: (e1+e2)(e4+e7) = 0 with |a||b| = 2; corrected: 2e6";
}

// 3. Enestrom-Kakeya containment and tightness on slices.
void ek_containment(Outcome& out) {
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<int> deg(2, 10);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const OctPolynomial p = random_family_polynomial(Family::ek, deg(rng), rng);
    const auto& h = check_hypotheses(p).at(TheoremId::ek);
    out.require(h.applies && h.parameters.unscaled_radius == 1.0, "unscaled chain");
    for (const auto& c : slice_roots(p, random_unit_imaginary(rng()))) {
      out.require(c.certified, "uncertified slice root");
      worst = std::max(worst, c.modulus);
    }
  }
  out.require(worst <= 1 + 1e-9, "root outside unit ball");
  double dev = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const OctPolynomial p = OctPolynomial::from_real(std::vector<double>(n + 1, 1.0));
    for (const auto& c : slice_roots(p, random_unit_imaginary(rng())))
      dev = std::max(dev, std::abs(c.modulus - 1.0));
  }
  out.require(dev <= 1e-10, "equal coefficients off the unit sphere");
  out.detail << "max modulus " << worst << " over 500 polynomials; equal-coefficient deviation "
             << dev;
}

// 4. (4, 2, 1): radius 2, roots at modulus 2.
void scaled_tightness(Outcome& out) {
  const OctPolynomial p = OctPolynomial::from_real({4, 2, 1});
  const BoundResult b = ek_bound(p);
  out.require(b.radius == 2.0, "radius != 2");
  double dev = 0.0;
  for (const auto& c : slice_roots(p, ImaginaryUnitD::basis(3)))
    dev = std::max(dev, std::abs(c.modulus - 2.0));
  out.require(dev <= 1e-10, "root modulus");
  out.detail << "radius " << b.radius << ", root modulus deviation " << dev;
}

// 5. Trinomial root values, residuals, monotonicity.
void trinomial(Outcome& out) {
  const double k2 = trinomial_root(2);
  out.require(std::abs(k2 - 1.6180339887) <= 1e-9, "K1(2)");
  QuadReal worst = 0;
  for (int n = 1; n <= 50; ++n) {
    const QuadReal k = trinomial_root<QuadReal>(n);
    const QuadReal r = abs(trinomial_residual(n, k));
    if (r > worst) worst = r;
  }
  out.require(worst <= QuadReal(1e-12), "residual");
  double prev = trinomial_root(1);
  for (int n = 2; n <= 50; ++n) {
    const double k = trinomial_root(n);
    out.require(k > prev && k < 2.0, "monotone below 2");
    prev = k;
  }
  out.detail << "K1(2) = " << std::setprecision(12) << k2 << ", max residual (quad) "
             << static_cast<double>(worst) << ", K1(50) = " << std::setprecision(17) << prev;
}

SearchConfig search(double radius, std::uint64_t seed) {
  SearchConfig cfg;
  cfg.starts = 500;
  cfg.seed = seed;
  cfg.search_radius = 1.5 * radius;
  cfg.certify_tol = 1e-8;
  return cfg;
}

// 6. Moduli theorem against multistart, plus a negative control.
void moduli_verification(Outcome& out) {
  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<int> deg(2, 8);
  int consistent = 0;
  long certificates = 0;
  double worst_margin = -1e300;
  for (int t = 0; t < 200; ++t) {
    const OctPolynomial p = random_family_polynomial(Family::moduli, deg(rng), rng);
    const BoundResult b = moduli_bound(p);
    const VerificationVerdict v = multistart_verify(p, b, search(b.radius, 6000 + t));
    consistent += v.status == VerdictStatus::consistent;
    for (const auto& c : v.certificates) {
      out.require(c.residual <= 1e-8 * coefficient_scale(p), "certificate residual");
      worst_margin = std::max(worst_margin, c.modulus - b.radius);
    }
    certificates += static_cast<long>(v.certificates.size());
  }
  out.require(consistent == 200, "VIOLATED verdict");
  out.require(worst_margin <= 1e-6, "certificate beyond K1/a");
  out.require(certificates > 0, "no certificates at all");

  // Negative control: p = (q - z) * g vanishes at z; inject half the true radius.
  int controls = 0, caught = 0;
  std::uniform_real_distribution<double> zmod(1.0, 3.0);
  for (int t = 0; t < 500 && controls < 10; ++t) {
    const OctonionD z = random_octonion_with_modulus(zmod(rng), rng);
    const OctPolynomial g = random_family_polynomial(Family::moduli, 2, rng);
    const OctPolynomial p = star(OctPolynomial{-z, kOne}, g);
    const BoundResult truth = moduli_bound(p);
    BoundResult injected = truth;
    injected.radius = 0.5 * truth.radius;
    if (!(norm(z) > injected.radius + 1e-3)) continue;
    ++controls;
    const VerificationVerdict v = multistart_verify(p, injected, search(truth.radius, 7000 + t));
    caught += v.status == VerdictStatus::violated;
  }
  const OctPolynomial cube = OctPolynomial::from_real({1, 1, 1});
  BoundResult half = moduli_bound(cube);
  half.radius *= 0.5;
  const VerificationVerdict vc = multistart_verify(cube, half, search(2 * half.radius, 77));
  out.require(controls == 10 && caught == controls, "constructed-zero control not VIOLATED");
  out.require(vc.status == VerdictStatus::violated, "1+q+q^2 control not VIOLATED");
  out.detail << consistent << "/200 CONSISTENT, " << certificates
             << " distinct certificates, max (modulus - K1/a) " << worst_margin
             << "; negative controls " << caught << "/" << controls << " constructed + 1+q+q^2 "
             << to_string(vc.status);
}

// 7. Star identity and zero equivalence.
void star_identity(Outcome& out) {
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_real_distribution<double> mod(0.1, 2.0);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    std::vector<OctonionD> c;
    for (int k = 0, n = deg(rng); k <= n; ++k) c.push_back(gaussian_octonion(rng));
    const OctPolynomial p(std::move(c));
    const OctonionD q = random_octonion_with_modulus(mod(rng), rng);
    const OctonionD lhs = eval(one_minus_q_transform(p), q);
    const OctonionD rhs = (kOne - q) * eval(p, q);
    worst = std::max(worst, norm(lhs - rhs) / ((1 + norm(q)) * term_scale(p, norm(q))));
  }
  out.require(worst <= 1e-10, "star identity");

  // Forward: constructed zeros of p are zeros of the transform.
  double forward = 0.0;
  for (int t = 0; t < 200; ++t) {
    const OctonionD z = random_octonion_with_modulus(mod(rng), rng);
    std::vector<OctonionD> gc;
    for (int k = 0, n = deg(rng); k <= n; ++k) gc.push_back(gaussian_octonion(rng));
    const OctPolynomial p = star(OctPolynomial{-z, kOne}, OctPolynomial(std::move(gc)));
    const OctPolynomial f = one_minus_q_transform(p);
    const double s = (1 + norm(z)) * term_scale(p, norm(z));
    out.require(norm(eval(p, z)) <= 1e-12 * s, "constructed zero");
    forward = std::max(forward, norm(eval(f, z)) / s);
    out.require(norm(eval(f, kOne)) <= 1e-12 * term_scale(f, 1.0), "transform at q = 1");
  }
  out.require(forward <= 1e-12, "forward equivalence");

  // Converse: zeros of the transform away from 1 are zeros of p.
  int found = 0;
  double converse = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<OctonionD> c;
    for (int k = 0, n = deg(rng); k <= n; ++k) c.push_back(gaussian_octonion(rng));
    const OctPolynomial p(std::move(c));
    const OctPolynomial f = one_minus_q_transform(p);
    for (int s = 0; s < 5; ++s) {
      const ZeroCertificate w =
          minimize_modulus(f, random_octonion_with_modulus(mod(rng), rng), 200, 1e-10);
      if (!w.certified || norm(w.point - kOne) < 1e-3) continue;
      ++found;
      converse = std::max(converse, norm(eval(p, w.point)) * norm(w.point - kOne) /
                                        std::max(1.0, term_scale(f, w.modulus)));
    }
  }
  out.require(found > 0, "no transform zeros located");
  out.require(converse <= 1e-9, "converse equivalence");
  out.detail << "max scaled identity error " << worst << " over 1e4 samples; forward "
             << forward << "; converse " << converse << " over " << found << " located zeros";
}

// 8. |f(q)| <= a_n |q|^n on |q| in {1, 1.5, 2}, f = p*(1-q) + q^{n+1} a_n.
void growth_inequality(Outcome& out) {
  std::mt19937_64 rng(1008);
  std::uniform_int_distribution<int> deg(2, 10);
  double worst = -1e300;
  for (int t = 0; t < 100; ++t) {
    const OctPolynomial p = random_family_polynomial(Family::ek, deg(rng), rng);
    const int n = p.degree();
    std::vector<OctonionD> top(n + 2);
    top[n + 1] = p[n];
    const OctPolynomial f = one_minus_q_transform(p) + OctPolynomial(std::move(top));
    const double an = p[n].real();
    for (double r : {1.0, 1.5, 2.0})
      for (int d = 0; d < 200; ++d) {
        const OctonionD q = random_octonion_with_modulus(r, rng);
        worst = std::max(worst, norm(eval(f, q)) - an * std::pow(r, n));
      }
  }
  out.require(worst <= 1e-9, "growth inequality");
  out.detail << "max |f(q)| - a_n |q|^n = " << worst << " over 100 x 3 x 200 points";
}

// 9. Angle theorem: alpha = 0 reduction, duality, worked example.
void angle_theorem(Outcome& out) {
  std::mt19937_64 rng(1009);
  for (int t = 0; t < 20; ++t) {
    const OctPolynomial p = random_family_polynomial(Family::ek, 2 + t % 8, rng);
    const BoundResult b = angle_bound(p);
    out.require(b.parameters.alpha == 0.0 && b.radius == 1.0, "alpha = 0 reduction");
  }
  double duality = 0.0;
  for (int t = 0; t < 100; ++t) {
    const OctPolynomial q = random_family_polynomial(Family::angle, 2 + t % 7, rng);
    const OctPolynomial p = reverse(q);
    duality = std::max(
        duality, std::abs(angle_exclusion_bound(p).radius * angle_bound(reverse(p)).radius - 1));
  }
  out.require(duality <= 1e-12, "duality");

  const OctPolynomial ex{kOne, kOne + e(1)};
  const BoundResult b = angle_bound(ex);
  out.require(std::abs(b.radius - (std::numbers::sqrt2 + 1)) <= 1e-12, "example radius");
  const VerificationVerdict v = multistart_verify(ex, b, search(b.radius, 99));
  out.require(v.status == VerdictStatus::consistent && v.max_modulus.has_value(), "example zero");
  const double zmod = v.max_modulus.value_or(0.0);
  out.require(std::abs(zmod - 1 / std::numbers::sqrt2) <= 1e-8 &&
                  std::abs(*v.min_modulus - 1 / std::numbers::sqrt2) <= 1e-8,
              "example zero modulus");
  out.detail << "alpha = 0 gives radius 1; duality error " << duality << "; (1, 1+e1) radius "
             << std::setprecision(15) << b.radius << ", zero modulus " << zmod;
}

// 10. Real-part theorem: worked example and 100 random verifications.
void realpart_theorem(Outcome& out) {
  const OctPolynomial ex{e(1), kOne};
  const BoundResult b = realpart_bound(ex);
  out.require(b.radius == 3.0, "example radius");
  const auto roots = slice_roots(ex, ImaginaryUnitD::basis(1));
  out.require(roots.size() == 1 && std::abs(roots[0].modulus - 1.0) <= 1e-12,
              "example zero modulus");

  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<int> deg(2, 8);
  int consistent = 0;
  long certificates = 0;
  for (int t = 0; t < 100; ++t) {
    const OctPolynomial p = random_family_polynomial(Family::realpart, deg(rng), rng);
    const BoundResult rb = realpart_bound(p);
    const VerificationVerdict v = multistart_verify(p, rb, search(rb.radius, 10000 + t));
    consistent += v.status == VerdictStatus::consistent;
    certificates += static_cast<long>(v.certificates.size());
  }
  out.require(consistent == 100, "VIOLATED verdict");
  out.detail << "(e1, 1) radius " << b.radius << ", zero modulus "
             << (roots.empty() ? 0.0 : roots[0].modulus) << "; " << consistent
             << "/100 CONSISTENT with " << certificates << " distinct certificates";
}

std::string run_cli(const std::string& args, const std::string& env) {
  const std::string cmd = env + " \"" OEK_CLI_PATH "\" " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  out += "\nexit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

// 11. Byte-identical verify reports across runs and thread counts.
void cli_determinism(Outcome& out) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "oek_acceptance";
  fs::create_directories(dir);
  std::mt19937_64 rng(1011);
  const OctPolynomial oct = random_family_polynomial(Family::moduli, 4, rng);
  const fs::path files[] = {dir / "real.json", dir / "oct.json"};
  std::ofstream(files[0]) << R"({"real_coeffs":[1,1,1]})";
  std::ofstream(files[1]) << polynomial_to_json(oct).dump();
  int compared = 0;
  for (const auto& f : files) {
    const std::string args = "verify " + f.string() + " --starts 200 --seed 7";
    const std::string ref = run_cli(args, "");
    out.require(ref.find("\"schema\"") != std::string::npos, "no report");
    for (const char* env : {"", "OEK_THREADS=1", "OEK_THREADS=2", "OEK_THREADS=7"}) {
      out.require(run_cli(args, env) == ref, std::string("report differs with '") + env + "'");
      ++compared;
    }
  }
  fs::remove_all(dir);
  out.detail << compared << " reruns byte-identical to the reference (thread counts 1, 2, 7, "
             << "default)";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"algebra validity", algebra_validity},
      {"discrepancy detection", discrepancy_detection},
      {"Enestrom-Kakeya containment", ek_containment},
      {"scaled corollary tightness", scaled_tightness},
      {"trinomial root", trinomial},
      {"moduli theorem verification", moduli_verification},
      {"star identity and zero equivalence", star_identity},
      {"growth inequality", growth_inequality},
      {"angle theorem reductions and duality", angle_theorem},
      {"real-part theorem", realpart_theorem},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(out);
    } catch (const std::exception& err) {
      out.pass = false;
      out.detail << "exception: " << err.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << name
              << "): " << out.detail.str() << " [" << std::fixed << std::setprecision(2) << secs
              << " s]" << std::defaultfloat << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
