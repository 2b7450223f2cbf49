#pragma once

// Maps of modules and their images in the stable category: stable
// triviality, stable Hom, Tate cohomology, ghosts, cones and universal ghosts.

#include "stmod/algebra.hpp"
#include "stmod/modules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stmod {

class ModuleMap {
public:
    // Validates shape, field and intertwining on every generator.
    ModuleMap(Module source, Module target, FpMatrix matrix);

    static ModuleMap zero(const Module& source, const Module& target);
    static ModuleMap identity(const Module& m);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const FpMatrix& matrix() const { return matrix_; }

    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap scaled(std::uint32_t c) const;
    bool is_zero() const { return matrix_.is_zero(); }

private:
    Module source_;
    Module target_;
    FpMatrix matrix_;
};

// f after g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);
// chain[0] applied first.
ModuleMap compose_chain(const std::vector<ModuleMap>& chain);

// v -> theta v; theta must be central.
ModuleMap theta_multiplication(const Module& m, const AlgebraElement& theta);

// f^*: N^* -> M^*, the transpose.
ModuleMap dual_map(const ModuleMap& f);

// Columns vec(X) spanning the maps a -> b that factor through a projective:
// the maps w -> sum_g g v_t lambda(g^{-1} w) for cover generators v_t of b
// and coordinate functionals lambda of a. Not necessarily independent.
FpMatrix projective_factoring_span(const Module& a, const Module& b);

struct TrivialityCertificate {
    bool stably_trivial = false;
    // Stably trivial: a kG-map into the projective cover of the target with cover_map * lift == f.
    std::optional<FpMatrix> lift;
    // Not stably trivial: rank([S | vec f]) - rank(S) for the factoring span S (always 1).
    std::size_t rank_gap = 0;
};

TrivialityCertificate stable_triviality(const ModuleMap& f);
bool is_stably_trivial(const ModuleMap& f);
// Re-checks a certificate against f from scratch.
bool check_certificate(const ModuleMap& f, const TrivialityCertificate& cert);

// Hom(a, b) modulo maps factoring through projectives.
struct StableHom {
    Module source;
    Module target;
    FpMatrix hom;        // vec basis of Hom(a, b)
    FpMatrix factoring;  // vec basis of the projectively factoring subspace
    FpMatrix reps;       // vec columns of coset representatives
    FpMatrix coords;     // left inverse of [factoring | reps]

    std::size_t dim() const { return reps.cols(); }
    std::vector<ModuleMap> representatives() const;
    // Class of a map a -> b in the basis of representatives (dim x 1).
    FpMatrix coordinates(const FpMatrix& x) const;
    bool factors(const FpMatrix& x) const;
};

StableHom stable_hom(const Module& a, const Module& b);

// Omega~^i k for i in [lo, hi], computed once per group and window.
class TrivialShifts {
public:
    TrivialShifts(GroupPtr group, int lo, int hi);
    const GroupPtr& group() const { return group_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const Module& at(int i) const;

private:
    GroupPtr group_;
    int lo_;
    int hi_;
    std::vector<Module> shifts_;
};

struct TateSpace {
    int degree = 0;
    StableHom hom;  // from Omega~^degree k to the module
    std::size_t dim() const { return hom.dim(); }
};

TateSpace tate_space(const Module& m, int i);
TateSpace tate_space(const Module& m, int i, const TrivialShifts& shifts);

// Tate spaces of one module across a window, reused for many maps.
struct TateWindow {
    Module module;
    int lo = 0;
    int hi = 0;
    std::vector<TateSpace> spaces;
    const TateSpace& at(int i) const { return spaces.at(static_cast<std::size_t>(i - lo)); }
};

TateWindow tate_window(const Module& m, const TrivialShifts& shifts);

// Matrix of post-composition with f, dim Hhat^i(N) x dim Hhat^i(M).
FpMatrix tate_induced_map(const ModuleMap& f, int i);
FpMatrix tate_induced_map(const ModuleMap& f, const TateSpace& source, const TateSpace& target);

// Periodicity of the trivial module: smallest d <= cap with Omega~^d k
// isomorphic to k, certified by iso_test.
struct Periodicity {
    std::optional<int> period;
    std::vector<std::size_t> dims;  // dim Omega~^i k, i = 0..last computed
    std::string reason;
};
// Groups containing an elementary abelian subgroup of rank 2 are reported
// non-periodic with that subgroup as the reason, without iterating.
Periodicity trivial_period(const GroupPtr& g, int cap = 8);

enum class GhostStatus { ghost_exact, ghost_in_window, not_ghost };
std::string to_string(GhostStatus s);

enum class GhostRoute { direct, dual };

struct GhostWitness {
    int degree = 0;
    // A Tate representative r with f*r not stably trivial. For the dual route
    // r maps into N^* at degree -degree-1 and the composite is f^* r.
    ModuleMap representative;
    bool through_dual = false;
};

struct GhostVerdict {
    GhostStatus status = GhostStatus::not_ghost;
    int lo = 0;
    int hi = 0;
    std::optional<GhostWitness> witness;
    std::optional<int> period;
};

// The dual route checks degrees i >= 0 on f and each negative degree i on
// f^* in degree -i-1, which is equivalent by Tate duality.
GhostVerdict is_ghost(const ModuleMap& f, int lo, int hi, GhostRoute route = GhostRoute::direct);
// Direct route with a precomputed window of the source.
GhostVerdict is_ghost(const ModuleMap& f, const TateWindow& source_window, std::optional<int> period);
// Recomputes the composite of a not-ghost witness and checks it is stably nontrivial.
bool check_witness(const ModuleMap& f, const GhostWitness& w);

// Basis (as matrices) of the maps m -> n that are ghosts in every degree of the window.
std::vector<FpMatrix> ghost_subspace(const Module& m, const Module& n, const TateWindow& source_window);

// Triangle A -> M -> C on f, with C projective-free.
struct Cone {
    Module cokernel;        // (M + I(A)) / image of (f, e)
    Module module;          // projective-free core of the cokernel
    FpMatrix to_cokernel;   // M -> cokernel
    FpMatrix to_core;       // cokernel -> core
    FpMatrix from_core;     // core -> cokernel
    ModuleMap map;          // M -> core
};
Cone cone(const ModuleMap& f);

// Psi: m -> F_m, the cone on representatives of Hhat^i(G, m), i = 0..period-1.
struct UniversalGhost {
    ModuleMap psi;
    Module generators;  // direct sum of the shifts Omega~^i k used
    ModuleMap assembled; // generators -> m
    std::vector<int> degrees;
};
UniversalGhost universal_ghost(const Module& m, int period);
// Same, with shifts over [0, period - 1] whose periodicity the caller has certified.
UniversalGhost universal_ghost(const Module& m, const TrivialShifts& shifts);

// Does g factor as h * f for some stable map h (f: M -> F, g: M -> X)? Decided modulo projectives.
bool factors_through(const ModuleMap& g, const ModuleMap& f);

}  // namespace stmod
