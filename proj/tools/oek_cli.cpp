// oek: octonionic Enestrom-Kakeya zero bounds from the command line.
//
//   oek bound    <poly.json> [--theorem all|ek|moduli|angle|realpart|exclusion]
//                            [--table corrected|paper]
//   oek verify   <poly.json> [--starts N] [--seed S] [--radius-mult m] [--tol t]
//   oek selftest [--trials N] [--seed S] [--table corrected|paper]
//   oek random   --family ek|moduli|angle|realpart --degree n --count c
//                [--seed S] --out dir
//
// Reports are JSON on stdout; diagnostics go to stderr. OEK_THREADS sets the
// worker count for verification (the report does not depend on it).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "oek/bounds.hpp"
#include "oek/families.hpp"
#include "oek/io.hpp"
#include "oek/selftest.hpp"
#include "oek/zerosearch.hpp"

namespace {

using oek::Json;

constexpr const char* kSchema = "oek.run_report/1";

enum Exit { kOk = 0, kInputError = 1, kNoBound = 2, kViolated = 3 };

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    static const char* hex = "0123456789abcdef";
    os << hex[digest[i] >> 4] << hex[digest[i] & 15];
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw oek::ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct LoadedInput {
  oek::OctPolynomial poly;
  std::vector<oek::BoundResult> injected;
  Json description;
};

// Polynomial document plus an optional "injected_bounds" array (fixtures for
// negative controls of the verifier).
LoadedInput load_input(const std::string& path) {
  const std::string text = read_file(path);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw oek::ParseError(path + ": " + e.what());
  }
  LoadedInput in;
  in.poly = oek::polynomial_from_json(doc);
  if (doc.contains("injected_bounds")) {
    const Json& arr = doc["injected_bounds"];
    if (!arr.is_array()) throw oek::ParseError("injected_bounds: expected an array");
    for (const Json& b : arr) in.injected.push_back(oek::bound_result_from_json(b));
  }
  in.description = Json{{"path", path}, {"sha256", sha256_hex(text)},
                        {"degree", in.poly.degree()}};
  return in;
}

const oek::StructureTable& table_named(const std::string& name) {
  return name == "paper" ? oek::StructureTable::paper_printed()
                         : oek::StructureTable::corrected();
}

Json base_report(const std::string& command, const Json& input, const std::string& table,
                 const Json& seed) {
  return Json{{"schema", kSchema},
              {"command", command},
              {"input", input},
              {"table", table},
              {"seed", seed},
              {"hypotheses", nullptr},
              {"bounds", Json::array()},
              {"verification", nullptr},
              // Wall time goes to stderr so that reports stay reproducible.
              {"timing", Json{{"wall_seconds", nullptr}}},
              {"exit_code", 0}};
}

int emit(Json report, int code, std::chrono::steady_clock::time_point t0) {
  report["exit_code"] = code;
  std::cout << report.dump(2) << "\n";
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "timing: " << secs << " s\n";
  return code;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int cmd_bound(const std::string& path, const std::string& theorem, const std::string& table) {
  const auto t0 = std::chrono::steady_clock::now();
  LoadedInput in;
  try {
    in = load_input(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (in.poly.degree() < 1) {
    std::cerr << "error: " << path << ": polynomial has degree 0; no zero bound applies\n";
    return kInputError;
  }
  Json report = base_report("bound", in.description, table, nullptr);
  const oek::BoundSet set = oek::best_bound(in.poly);
  report["hypotheses"] = oek::to_json(set.report);
  const auto only = oek::theorem_from_string(theorem);
  for (const auto& r : set.results)
    if (!only || r.theorem == *only) report["bounds"].push_back(oek::to_json(r));
  return emit(report, report["bounds"].empty() ? kNoBound : kOk, t0);
}

int cmd_verify(const std::string& path, int starts, std::optional<std::uint64_t> seed_flag,
               double radius_mult, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  LoadedInput in;
  try {
    in = load_input(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (in.poly.degree() < 1) {
    std::cerr << "error: " << path << ": polynomial has degree 0; no zero bound applies\n";
    return kInputError;
  }
  if (starts < 1 || !(radius_mult > 0) || !(tol > 0)) {
    std::cerr << "error: --starts, --radius-mult and --tol must be positive\n";
    return kInputError;
  }
  const std::uint64_t seed = resolve_seed(seed_flag);
  Json report = base_report("verify", in.description, "corrected", seed);
  const oek::BoundSet set = oek::best_bound(in.poly);
  report["hypotheses"] = oek::to_json(set.report);

  std::vector<oek::BoundResult> bounds = set.results;
  bounds.insert(bounds.end(), in.injected.begin(), in.injected.end());
  for (const auto& b : bounds) report["bounds"].push_back(oek::to_json(b));
  if (bounds.empty()) return emit(report, kNoBound, t0);

  int threads = 0;
  if (const char* env = std::getenv("OEK_THREADS")) threads = std::atoi(env);

  Json verdicts = Json::array();
  bool violated = false;
  for (const auto& b : bounds) {
    oek::SearchConfig cfg;
    cfg.starts = starts;
    cfg.seed = seed;
    cfg.search_radius = radius_mult * b.radius;
    cfg.certify_tol = tol;
    cfg.threads = threads;
    const oek::VerificationVerdict v = oek::multistart_verify(in.poly, b, cfg);
    violated = violated || v.status == oek::VerdictStatus::violated;
    Json vj = oek::to_json(v);
    vj["search_radius"] = cfg.search_radius;
    verdicts.push_back(vj);
  }
  report["verification"] = verdicts;
  return emit(report, violated ? kViolated : kOk, t0);
}

int cmd_selftest(long trials, std::optional<std::uint64_t> seed_flag, const std::string& table) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = resolve_seed(seed_flag);
  Json report = base_report("selftest", nullptr, table, seed);
  const oek::StructureTable& t = table_named(table);
  const oek::SelftestReport st = oek::run_selftest(t, trials, seed);
  report["selftest"] = Json{{"table", oek::table_to_json(t)},
                            {"validation", oek::to_json(st.validation)},
                            {"matches_cayley_dickson", st.matches_cayley_dickson},
                            {"star_samples", st.star_samples},
                            {"max_star_identity_error", st.max_star_identity_error},
                            {"star_transform_exact", st.star_transform_exact},
                            {"passed", st.passed}};
  if (st.validation.witness) {
    const Json& w = report["selftest"]["validation"]["witness"];
    std::cerr << "witness: " << st.validation.witness->description << "\n  a  = " << w["a"].dump()
              << "\n  b  = " << w["b"].dump() << "\n  ab = " << w["product"].dump() << "\n";
  }
  return emit(report, st.passed ? kOk : kViolated, t0);
}

int cmd_random(const std::string& family_name, int degree, int count,
               std::optional<std::uint64_t> seed_flag, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto family = oek::family_from_string(family_name);
  if (!family) {
    std::cerr << "error: unknown family '" << family_name << "'\n";
    return kInputError;
  }
  if (degree < 1 || count < 1) {
    std::cerr << "error: --degree and --count must be >= 1\n";
    return kInputError;
  }
  const std::uint64_t seed = resolve_seed(seed_flag);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << out_dir << ": " << ec.message() << "\n";
    return kInputError;
  }
  Json report = base_report("random", nullptr, "corrected", seed);
  Json files = Json::array();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    oek::OctPolynomial p;
    try {
      p = oek::random_family_polynomial(*family, degree, rng);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
    std::ostringstream name;
    name << family_name << "_deg" << degree << "_" << i << ".json";
    const std::filesystem::path file = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(file);
    out << oek::polynomial_to_json(p).dump(2) << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << file << "\n";
      return kInputError;
    }
    files.push_back(file.string());
  }
  report["family"] = family_name;
  report["files"] = files;
  return emit(report, kOk, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic Enestrom-Kakeya zero bounds"};
  app.require_subcommand(1);

  std::string path;
  std::string theorem = "all";
  std::string table = "corrected";
  auto* bound = app.add_subcommand("bound", "compute every applicable zero bound");
  bound->add_option("input", path, "polynomial JSON file")->required();
  bound->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"all", "ek", "moduli", "angle", "realpart", "exclusion"}));
  bound->add_option("--table", table)->check(CLI::IsMember({"corrected", "paper"}));

  int starts = 500;
  std::optional<std::uint64_t> seed;
  double radius_mult = 1.5;
  double tol = 1e-8;
  auto* verify = app.add_subcommand("verify", "check bounds against located zeros");
  verify->add_option("input", path, "polynomial JSON file")->required();
  verify->add_option("--starts", starts);
  verify->add_option("--seed", seed);
  verify->add_option("--radius-mult", radius_mult);
  verify->add_option("--tol", tol);

  long trials = 100000;
  auto* selftest = app.add_subcommand("selftest", "validate the algebra and star identities");
  selftest->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", seed);
  selftest->add_option("--table", table)->check(CLI::IsMember({"corrected", "paper"}));

  std::string family;
  int degree = 0;
  int count = 0;
  std::string out_dir;
  auto* random = app.add_subcommand("random", "generate polynomials satisfying a theorem");
  random->add_option("--family", family)->required();
  random->add_option("--degree", degree)->required();
  random->add_option("--count", count)->required();
  random->add_option("--seed", seed);
  random->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*bound) return cmd_bound(path, theorem, table);
    if (*verify) return cmd_verify(path, starts, seed, radius_mult, tol);
    if (*selftest) return cmd_selftest(trials, seed, table);
    if (*random) return cmd_random(family, degree, count, seed, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
