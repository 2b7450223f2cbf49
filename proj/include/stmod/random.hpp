#pragma once

// Seeded generators for modules and maps used by property sweeps.

#include "stmod/stmaps.hpp"

#include <random>

namespace stmod {

using Rng = std::mt19937_64;

FpMatrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, Rng& rng);
FpMatrix random_invertible(std::uint32_t p, std::size_t n, Rng& rng);

// Generators act as I + N_g with every N_g mapping the top layer into the
// bottom one; such modules have radical length at most 2.
Module random_layered_module(const GroupPtr& g, std::size_t top, std::size_t bottom, Rng& rng);

// Mixes submodules and quotients of free modules, permutation modules,
// Heller shifts of k, layered modules and direct sums, then conjugates by a
// random basis change. Nonzero, dimension at most max_dim.
Module random_module(const GroupPtr& g, std::size_t max_dim, Rng& rng, bool projective_free = true);

Module random_basis_change(const Module& m, Rng& rng);

// Uniform combination of a basis of the given maps (zero map if empty).
ModuleMap random_combination(const Module& a, const Module& b, const std::vector<FpMatrix>& basis, Rng& rng);
ModuleMap random_hom(const Module& a, const Module& b, Rng& rng);

}  // namespace stmod
