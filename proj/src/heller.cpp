#include "stmod/error.hpp"
#include "stmod/modules.hpp"

#include <random>

namespace stmod {

ProjectiveFreeSplit split_projective_free(const Module& m)
{
    const auto& g = *m.group();
    const std::uint32_t p = m.p();
    const std::size_t n = m.dim(), order = g.order();
    const auto norm = rref(m.norm_action());
    const std::size_t t = norm.rank;
    if (t == 0)
        return {0, m, FpMatrix::identity(p, n), FpMatrix::identity(p, n), FpMatrix(p, n, 0)};

    // v_s = e_{pivot_s} has N v_s independent, so kG v_1 + ... + kG v_t is
    // free of rank t; phi has the columns g v_s.
    FpMatrix phi(p, n, t * order);
    for (std::size_t s = 0; s < t; ++s)
        for (std::size_t h = 0; h < order; ++h) {
            const auto& a = m.element_action(h);
            for (std::size_t r = 0; r < n; ++r)
                phi.set(r, s * order + h, a(r, norm.pivots[s]));
        }
    // Functionals lambda_s with lambda_s(g v_u) = [s == u and g == 1]; then
    // r(w) = sum_g lambda_s(g^{-1} w) (s, g) is a kG-retraction of phi.
    FpMatrix selector(p, t * order, t);
    for (std::size_t s = 0; s < t; ++s)
        selector.set(s * order, s, 1);
    auto lambda_t = solve(phi.transpose(), selector);
    if (!lambda_t)
        throw InternalError("split_projective_free: free summand has no retraction");
    FpMatrix retraction(p, t * order, n);
    const auto lambda = lambda_t->transpose();
    for (std::size_t s = 0; s < t; ++s) {
        const auto row = lambda.block(s, 0, 1, n);
        for (std::size_t h = 0; h < order; ++h) {
            const auto v = row * m.element_action(g.inv(h));
            for (std::size_t c = 0; c < n; ++c)
                retraction.set(s * order + h, c, v(0, c));
        }
    }
    if (!(retraction * phi == FpMatrix::identity(p, t * order)))
        throw InternalError("split_projective_free: retraction solve failed");

    const auto k = kernel_basis(retraction);
    auto core = submodule(m, k);
    const auto projection = left_inverse(k) * (FpMatrix::identity(p, n) - phi * retraction);
    return {t, core.module, k, projection, phi};
}

Module projective_free_part(const Module& m)
{
    return split_projective_free(m).core;
}

ProjectiveCover projective_cover(const Module& m)
{
    const auto& g = *m.group();
    const std::uint32_t p = m.p();
    const std::size_t n = m.dim(), order = g.order();
    const auto top = complement_basis(radical_of(m, FpMatrix::identity(p, n)));
    const std::size_t d = top.cols();
    FpMatrix map(p, n, d * order);
    ProjectiveCover out{free_module(m.group(), d), FpMatrix(), {}, d};
    for (std::size_t t = 0; t < d; ++t) {
        const auto v = top.col(t);
        out.generators.push_back(v);
        for (std::size_t h = 0; h < order; ++h) {
            const auto w = m.element_action(h) * v;
            for (std::size_t r = 0; r < n; ++r)
                map.set(r, t * order + h, w(r, 0));
        }
    }
    if (rank(map) != n)
        throw InternalError("projective_cover: cover map is not surjective");
    out.map = std::move(map);
    return out;
}

InjectiveHull injective_hull(const Module& m)
{
    // (kG)^* has the same permutation action as kG, so dualizing the cover
    // of m^* gives an embedding of m into a free module.
    const auto cover = projective_cover(dual_module(m));
    return {cover.cover, cover.map.transpose(), cover.rank};
}

namespace {

Module omega_one(const Module& m)
{
    const auto cover = projective_cover(m);
    const auto k = kernel_basis(cover.map);
    return projective_free_part(submodule(cover.cover, k).module);
}

}  // namespace

Module heller_shift(const Module& m, int i)
{
    if (i < 0)
        return dual_module(heller_shift(dual_module(m), -i));
    auto cur = projective_free_part(m);
    for (int s = 0; s < i; ++s)
        cur = omega_one(cur);
    return cur;
}

namespace {

bool invertible(const FpMatrix& x)
{
    return rank(x) == x.rows();
}

IsoVerdict search_hom(const Module& a, const Module& b, std::uint64_t seed, const std::string& exact_reason)
{
    const auto basis = hom_basis(a, b);
    const std::uint32_t p = a.p();
    const std::size_t h = basis.size();
    const std::size_t n = a.dim();
    auto combine = [&](const std::vector<std::uint32_t>& c) {
        FpMatrix x(p, n, n);
        for (std::size_t s = 0; s < h; ++s)
            if (c[s])
                x.add_scaled(basis[s], c[s]);
        return x;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    double space = 1;
    for (std::size_t s = 0; s < h && space <= double(1 << 21); ++s)
        space *= p;
    const bool exhaustive = space <= double(1 << 20);
    const std::size_t trials = exhaustive ? 200 : 10000;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> c(h);
        for (auto& v : c)
            v = coeff(rng);
        auto x = combine(c);
        if (invertible(x))
            return {IsoStatus::isomorphic, x, "invertible intertwiner found"};
    }
    if (!exhaustive) {
        if (!exact_reason.empty())
            return {IsoStatus::isomorphic, std::nullopt, exact_reason};
        return {IsoStatus::unknown, std::nullopt, "no invertible intertwiner in 10000 samples"};
    }

    // Odometer over all coefficient vectors; a digit that wraps from p-1 to 0
    // changes the sum by p*H = 0 - (p-1)*H = +H as well, so every changed
    // digit adds its basis element.
    std::vector<std::uint32_t> c(h, 0);
    FpMatrix x(p, n, n);
    while (true) {
        std::size_t s = 0;
        for (; s < h; ++s) {
            x += basis[s];
            c[s] = (c[s] + 1) % p;
            if (c[s] != 0)
                break;
        }
        if (s == h)
            break;
        if (invertible(x))
            return {IsoStatus::isomorphic, x, "invertible intertwiner found"};
    }
    if (!exact_reason.empty())
        throw InternalError("iso_test: Jordan types agree but no invertible intertwiner exists");
    return {IsoStatus::not_isomorphic, std::nullopt, "Hom space contains no invertible map"};
}

}  // namespace

IsoVerdict iso_test(const Module& a, const Module& b, std::uint64_t seed)
{
    if (a.group() != b.group())
        return {IsoStatus::not_isomorphic, std::nullopt, "modules over different groups"};
    if (a.dim() != b.dim())
        return {IsoStatus::not_isomorphic, std::nullopt,
                "dimensions differ (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")"};
    if (a.dim() == 0)
        return {IsoStatus::isomorphic, FpMatrix(a.p(), 0, 0), "zero modules"};
    if (a.same_as(b))
        return {IsoStatus::isomorphic, FpMatrix::identity(a.p(), a.dim()), "identical actions"};
    const auto sa = socle_radical_series(a), sb = socle_radical_series(b);
    if (sa.socle_dims != sb.socle_dims)
        return {IsoStatus::not_isomorphic, std::nullopt, "socle series differ"};
    if (sa.radical_dims != sb.radical_dims)
        return {IsoStatus::not_isomorphic, std::nullopt, "radical series differ"};

    std::string exact;
    if (is_cyclic_group(*a.group())) {
        if (jordan_rank_profile(a) != jordan_rank_profile(b))
            return {IsoStatus::not_isomorphic, std::nullopt, "Jordan types differ"};
        exact = "Jordan types agree";
    }
    const std::size_t end_a = hom_space(a, a).cols();
    const std::size_t ab = hom_space(a, b).cols();
    if (ab != end_a || hom_space(b, a).cols() != end_a || hom_space(b, b).cols() != end_a)
        return {IsoStatus::not_isomorphic, std::nullopt, "Hom dimensions differ"};
    return search_hom(a, b, seed, exact);
}

std::optional<int> is_heller_of_trivial(const Module& m, int range)
{
    const auto k = trivial_module(m.group());
    if (iso_test(m, projective_free_part(k)).status == IsoStatus::isomorphic)
        return 0;
    auto up = projective_free_part(k);
    auto down = dual_module(up);
    for (int i = 1; i <= range; ++i) {
        up = heller_shift(up, 1);
        if (iso_test(m, up).status == IsoStatus::isomorphic)
            return i;
        down = heller_shift(down, 1);
        if (iso_test(m, dual_module(down)).status == IsoStatus::isomorphic)
            return -i;
    }
    return std::nullopt;
}

}  // namespace stmod
