#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rankvar/homalg.hpp"
#include "rankvar/module.hpp"

namespace rankvar {

struct CorpusModule {
  std::string name;
  LambdaModule module;
};

using Rng = std::mt19937_64;

/// Lambda^m / (Lambda g_1 + ... + Lambda g_s) for random g_j in the radical.
LambdaModule random_quotient(const AlgebraSpec& spec, Rng& rng, size_t max_dim);
/// Lambda g_1 + ... + Lambda g_s inside Lambda^m, g_j random in the radical.
LambdaModule random_submodule(const AlgebraSpec& spec, Rng& rng, size_t max_dim);
/// Commuting strictly lower triangular actions: z_1 random p-nilpotent, the others
/// random elements of the commutant, rejected until p-nilpotent.
LambdaModule random_commuting_module(const AlgebraSpec& spec, Rng& rng, size_t dim);
/// Nonzero homogeneous class of the given polynomial degree in y_1..y_r.
CohClass random_class(const AlgebraSpec& spec, Rng& rng, unsigned poly_degree);

/// Deterministic mixed corpus: free, trivial, quotients, submodules, commuting tuples,
/// Carlson modules, syzygies, sums, tensors and duals, each of dimension <= max_dim.
std::vector<CorpusModule> module_corpus(const AlgebraSpec& spec, size_t count, uint64_t seed, size_t max_dim = 16);

}  // namespace rankvar
