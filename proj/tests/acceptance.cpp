// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>

#include "rankvar/verify.hpp"

using namespace rankvar;

namespace {

SuiteConfig base_config() {
  SuiteConfig c;
  c.primes = {2, 3};
  c.ranks = {2, 3};
  c.corpus_size = 50;
  c.pair_count = 25;
  c.hygiene_cases = 1000;
  return c;
}

struct Verdict {
  bool ok = true;
  std::string detail;
  double seconds = 0;
};

Verdict from_suite(const SuiteResult& r, size_t min_cases, double limit = 0) {
  Verdict v;
  v.seconds = r.seconds;
  v.ok = r.passed() && r.cases >= min_cases && (limit == 0 || r.seconds <= limit);
  v.detail = r.suite + " " + std::to_string(r.cases) + " cases, " + std::to_string(r.failed) + " failed";
  if (r.cases < min_cases) v.detail += ", need " + std::to_string(min_cases);
  if (limit > 0 && r.seconds > limit) v.detail += ", over the " + std::to_string(int(limit)) + " s limit";
  if (r.failed) v.detail += "; first: " + r.failures[0].dump().substr(0, 400);
  return v;
}

Verdict criterion_dade() { return from_suite(run_suite("dade", base_config()), 200, 60); }

Verdict criterion_tensor() {
  // Each pair is checked for both flavors over F_p and F_{p^2}.
  const auto r = run_suite("tensor", base_config());
  Verdict v = from_suite(r, 4 * 100, 60);
  v.detail += " (" + std::to_string(r.cases / 4) + " pairs)";
  return v;
}

Verdict criterion_hom_cosupport() {
  const auto hom = run_suite("hom", base_config());
  const auto co = run_suite("cosupport", base_config());
  Verdict a = from_suite(hom, 100), b = from_suite(co, 200);
  return {a.ok && b.ok, a.detail + "; " + b.detail, hom.seconds + co.seconds};
}

Verdict criterion_koszul() {
  const auto r = run_suite("koszul", base_config());
  Verdict v = from_suite(r, 50);
  const size_t quadratic = r.stats.value("quadratic", size_t{0}), linear = r.stats.value("linear", size_t{0});
  v.ok = v.ok && quadratic > 0 && linear > 0;
  v.detail += " (" + std::to_string(linear) + " linear, " + std::to_string(quadratic) + " quadratic)";
  return v;
}

Verdict criterion_carlson() {
  // |P^1(F_2)| + |P^2(F_2)| + |P^1(F_3)| + |P^2(F_3)|
  return from_suite(run_suite("carlson", base_config()), 3 + 7 + 4 + 13);
}

Verdict criterion_equiv() { return from_suite(run_suite("equiv", base_config()), 200); }

Verdict criterion_generic_points() {
  // Four bundled primes over F_2 and F_3.
  return from_suite(run_suite("generic-points", base_config()), 8, 120);
}

Verdict criterion_ext_symmetry() {
  SuiteConfig c = base_config();
  c.ranks = {2};
  c.ext_bound = 10;
  const auto r = run_suite("ext-symmetry", c);
  Verdict v = from_suite(r, 50);
  v.detail += " " + r.stats.dump();
  return v;
}

Verdict criterion_residue_model() {
  const auto r = run_suite("residue-model", base_config());
  Verdict v = from_suite(r, 1);
  const size_t sampled = r.stats.value("sampled_points", size_t{0});
  v.ok = v.ok && sampled >= 20;
  v.detail += ", " + std::to_string(sampled) + " sampled points";
  return v;
}

Verdict criterion_hygiene() {
  const auto r = run_suite("hygiene", base_config());
  Verdict v = from_suite(r, 4000);
  for (const auto& [name, part] : r.stats.items()) {
    const size_t cases = part.value("cases", size_t{0}), failed = part.value("failed", size_t{0});
    if (cases < 1000 || failed) v.ok = false;
    v.detail += "; " + name + " " + std::to_string(cases) + "/" + std::to_string(failed);
  }
  if (r.stats.size() != 4) v.ok = false;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Dade equivalence", criterion_dade},
      {"tensor formula", criterion_tensor},
      {"hom and cosupport formulas", criterion_hom_cosupport},
      {"Koszul support", criterion_koszul},
      {"Carlson hypersurfaces", criterion_carlson},
      {"pi-point equivalence robustness", criterion_equiv},
      {"generic points", criterion_generic_points},
      {"Ext symmetry", criterion_ext_symmetry},
      {"residue model", criterion_residue_model},
      {"numerical hygiene", criterion_hygiene},
  };
  int failures = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += !v.ok;
    std::printf("%s [%d] %s: %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", n, name.c_str(), v.detail.c_str(), v.seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures ? 1 : 0;
}
