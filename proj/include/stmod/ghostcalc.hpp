#pragma once

// Ghost lengths, generating lengths, ghost numbers and the witnesses behind
// their bounds.

#include "stmod/stmaps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stmod {

// Smallest l such that the l-fold composite of universal ghosts out of m is
// stably trivial. Needs a group whose trivial module is periodic; the search
// is capped by the radical length of m.
std::size_t ghost_length(const Module& m);
std::size_t ghost_length(const Module& m, const TrivialShifts& period_shifts);

struct GeneratingBound {
    std::size_t bound = 0;
    std::string method;  // "projective", "heller-shift-of-k", "invariants-filtration", "radical-series"
    std::vector<std::size_t> filtration_dims;
    std::optional<int> heller_degree;
};

// Upper bound for the generating length with the filtration that proves it.
GeneratingBound generating_length_upper(const Module& m, int heller_range = 4);

struct LengthReport {
    std::size_t dim = 0;
    SeriesReport series;
    std::optional<std::size_t> ghost_length;  // exact, when the group is periodic
    GeneratingBound generating;
};
LengthReport length_report(const Module& m);

struct CyclicGhostReport {
    std::uint32_t p = 0;
    std::uint32_t r = 0;
    std::size_t order = 0;
    std::vector<std::size_t> lengths;  // ghost length of the Jordan block of size i, i = 1..order-1
    std::size_t ghost_number = 0;
    std::size_t formula = 0;           // ceil((order - 1) / 2)
    // x^(d-1) on the Jordan block of size d = formula, a stably nontrivial composite of d-1 ghosts.
    std::size_t witness_block = 0;
    std::size_t witness_chain = 0;
    bool witness_nontrivial = false;
    bool witness_certificate_ok = false;
};
CyclicGhostReport ghost_number_cyclic(std::uint32_t p, std::uint32_t r, std::size_t cap = 16);

struct BensonCertificate {
    Module module;  // k_H induced up to G
    ModuleMap map;  // multiplication by theta
    std::uint32_t restriction_scalar = 0;  // composite k_H -> M -> M -> k_H
    std::uint32_t coefficient_sum = 0;     // sum of the coefficients of theta on H
    TrivialityCertificate factoring;
    bool certified = false;  // both routes agree on "stably nontrivial"
};

// theta central with nonzero coefficient sum over the nontrivial proper subgroup h.
BensonCertificate benson_witness(const Subgroup& h, const AlgebraElement& theta);

struct BoundReport {
    std::string group;
    std::size_t nilpotency = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::uint32_t smallest_summand = 0;  // p^r
    std::optional<AlgebraElement> theta;
    std::vector<std::pair<std::size_t, std::size_t>> theta_factors;  // (generator element, exponent)
    std::size_t chain_length = 0;  // number of ghost factors of theta, lower - 1
    std::optional<BensonCertificate> certificate;
    bool factors_are_ghosts = false;
    bool certified = false;
};
BoundReport abelian_bounds(const GroupPtr& g, int lo = -2, int hi = 2);

struct ClassificationEntry {
    std::string group;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::string method;
};
struct ClassificationReport {
    std::vector<ClassificationEntry> entries;
    std::vector<std::string> ghost_number_two;  // groups with lower == upper == 2
    bool matches = false;                       // exactly C4, C2xC2, C5
};
ClassificationReport classify_ghost_number_two();

struct PrefixCheck {
    std::size_t length = 0;
    bool socle_in_kernel = false;
    bool image_in_radical = false;
    bool stably_trivial = false;
};
struct CompositeReport {
    std::size_t nilpotency = 0;
    std::vector<PrefixCheck> prefixes;
    bool bound_applies = false;  // chain length >= m - 1
    bool ok = false;
};
CompositeReport composite_bound_check(const std::vector<ModuleMap>& chain);

struct Q8Report {
    Module module;
    bool spans_radical_cube = false;
    std::size_t invariants_dim = 0;
    std::size_t dim_mod_8 = 0;
    bool projective_free = false;
    bool extension_of_trivials = false;  // 0 -> k -> M -> k + k -> 0
    std::size_t ghost_length = 0;
    std::size_t generating_upper = 0;
    std::size_t group_lower = 0;
    std::size_t group_upper = 0;
};
Q8Report q8_example();

struct InductionReport {
    ModuleMap induced;
    GhostVerdict verdict;
    bool source_trivial = false;
    bool induced_trivial = false;
    bool ok = false;
};
// f a ghost over the subgroup; induces it to the parent group.
InductionReport induction_check(const Subgroup& h, const ModuleMap& f, int lo = -4, int hi = 4);

}  // namespace stmod
