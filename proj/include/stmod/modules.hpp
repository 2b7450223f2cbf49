#pragma once

// Finite-dimensional kG-modules given by one action matrix per generator.

#include "stmod/algebra.hpp"
#include "stmod/fflin.hpp"
#include "stmod/groups.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stmod {

class Module {
public:
    // Validates: square invertible matrices of a common size, every named
    // relation of the group, and consistency along every edge of the Cayley
    // graph (which makes g -> action(g) a homomorphism).
    Module(GroupPtr group, std::vector<FpMatrix> generator_actions);
    // Zero module.
    explicit Module(GroupPtr group);

    const GroupPtr& group() const { return data_->group; }
    std::uint32_t p() const { return data_->group->p(); }
    std::size_t dim() const { return data_->dim; }
    const std::vector<FpMatrix>& generator_actions() const { return data_->generators; }
    const FpMatrix& generator_action(std::size_t i) const { return data_->generators.at(i); }
    const FpMatrix& element_action(std::size_t g) const { return data_->elements.at(g); }

    FpMatrix act(const AlgebraElement& a) const;
    // Action of the norm element sum_g g.
    FpMatrix norm_action() const;

    // Same group object and identical generator matrices.
    bool same_as(const Module& o) const;

private:
    struct Data {
        GroupPtr group;
        std::size_t dim = 0;
        std::vector<FpMatrix> generators;
        std::vector<FpMatrix> elements;
    };
    std::shared_ptr<const Data> data_;
};

Module trivial_module(const GroupPtr& g);
Module regular_module(const GroupPtr& g);
Module free_module(const GroupPtr& g, std::size_t rank);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts, const GroupPtr& g);

// Single Jordan block of size `size` for the generator of a cyclic group.
Module jordan_module(const GroupPtr& cyclic, std::size_t size);

// Transpose-inverse action.
Module dual_module(const Module& m);

// Induction from a subgroup; basis t_i (x) m_j ordered by coset then by m.
Module induce(const Module& m, const Subgroup& h);
// Permutation module on the left cosets G/H (trivial coefficients).
Module induced_module(const GroupPtr& g, const Subgroup& h);
Module restrict_module(const Module& m, const Subgroup& h);

// Module generated by the given vectors inside m (columns spanning the smallest submodule).
FpMatrix generated_submodule(const Module& m, const FpMatrix& vectors);
bool is_submodule(const Module& m, const FpMatrix& basis);

// A G-stable subspace with the induced action on its basis.
struct Submodule {
    Module parent;
    FpMatrix basis;  // parent.dim x k, full column rank
    Module module;   // action on the basis
};
Submodule submodule(const Module& m, const FpMatrix& basis);

struct QuotientModule {
    Module parent;
    Module module;
    FpMatrix projection;  // module.dim x parent.dim
    FpMatrix section;     // standard basis lift: parent.dim x module.dim, projection*section = I
};
QuotientModule quotient(const Module& m, const FpMatrix& sub_basis);

// Columns of the conjugated matrix: change of basis v -> basis * v.
Module change_basis(const Module& m, const FpMatrix& basis);

Submodule invariants(const Module& m);
// J*M as a column basis.
FpMatrix radical_of(const Module& m, const FpMatrix& sub_basis);
std::size_t coinvariants_dim(const Module& m);

// socle[i] spans Soc^i M, radical[i] spans J^i M.
std::vector<FpMatrix> socle_series(const Module& m);
std::vector<FpMatrix> radical_series(const Module& m);

struct SeriesReport {
    std::vector<std::size_t> socle_dims;   // dim Soc^1 .. dim Soc^s = dim M
    std::vector<std::size_t> radical_dims; // dim J^0 M .. dim J^h M = 0
    std::size_t radical_length = 0;
};
SeriesReport socle_radical_series(const Module& m);
std::size_t radical_length(const Module& m);

struct ProjectiveFreeSplit {
    std::size_t free_rank = 0;
    Module core;
    FpMatrix inclusion;   // m.dim x core.dim
    FpMatrix projection;  // core.dim x m.dim, kills the free part
    FpMatrix free_embedding; // m.dim x free_rank*|G|
};
ProjectiveFreeSplit split_projective_free(const Module& m);
Module projective_free_part(const Module& m);

struct ProjectiveCover {
    Module cover;           // (kG)^rank
    FpMatrix map;           // m.dim x rank*|G|, surjective kG-map
    std::vector<FpMatrix> generators; // images of the free generators (columns of m)
    std::size_t rank = 0;
};
ProjectiveCover projective_cover(const Module& m);

// Injective hull m -> (kG)^rank as the dual of the cover of m*.
struct InjectiveHull {
    Module hull;
    FpMatrix embedding;  // rank*|G| x m.dim
    std::size_t rank = 0;
};
InjectiveHull injective_hull(const Module& m);

// Projective-free part of Omega^i m. Negative shifts go through duality.
Module heller_shift(const Module& m, int i);

// Columns vec(X) (row-major, b.dim x a.dim) spanning Hom_kG(a, b).
FpMatrix hom_space(const Module& a, const Module& b);
std::vector<FpMatrix> hom_basis(const Module& a, const Module& b);
bool is_intertwiner(const Module& a, const Module& b, const FpMatrix& x);

// Ranks of (sigma - 1)^j, j = 0..|G|, for a cyclic group; a complete isomorphism invariant there.
std::vector<std::size_t> jordan_rank_profile(const Module& m);
// Multiset of Jordan block sizes, descending.
std::vector<std::size_t> jordan_type(const Module& m);
bool is_cyclic_group(const Group& g);

enum class IsoStatus { isomorphic, not_isomorphic, unknown };

struct IsoVerdict {
    IsoStatus status = IsoStatus::unknown;
    std::optional<FpMatrix> intertwiner;  // a -> b, invertible
    std::string reason;
};

IsoVerdict iso_test(const Module& a, const Module& b, std::uint64_t seed = 0x5eed);

// Smallest |i| (preferring i >= 0) in [-range, range] with m isomorphic to Omega~^i k.
std::optional<int> is_heller_of_trivial(const Module& m, int range);

}  // namespace stmod
