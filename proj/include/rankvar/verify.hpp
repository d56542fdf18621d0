#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/io.hpp"

namespace rankvar {

class UnknownSuite : public std::invalid_argument {
 public:
  explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

struct SuiteConfig {
  std::vector<uint32_t> primes{2};
  std::vector<unsigned> ranks{2};
  HopfFlavor flavor = HopfFlavor::GroupLike;
  uint64_t seed = 0;
  size_t corpus_size = 50;   // modules per (p, r)
  size_t pair_count = 25;    // pairs per (p, r)
  size_t hygiene_cases = 1000;
  unsigned ext_bound = 10;
  unsigned twist = 0;
  std::vector<unsigned> field_degrees{1, 2};  // enumeration fields F_{p^d}
};

struct SuiteResult {
  std::string suite;
  size_t cases = 0;
  size_t failed = 0;
  json failures = json::array();  // first few counterexamples
  json stats = json::object();
  double seconds = 0;

  bool passed() const { return failed == 0 && cases > 0; }
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);
json suite_result_to_json(const SuiteResult& r);

/// The bundled primes of k[y1,y2,y3]: (0), (y1), (y1,y2), (y1 y3 - y2^2).
std::vector<GradedIdeal> bundled_primes(FieldPtr k);

}  // namespace rankvar
