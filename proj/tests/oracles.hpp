#pragma once

// Slow, independent reference computations used to cross-check the library.
// They share only FpMatrix arithmetic and group tables with the code under test.

#include "stmod/ghostcalc.hpp"
#include "stmod/random.hpp"

#include <doctest.h>

#include <set>

namespace oracle {

using namespace stmod;

inline GroupPtr grp(const std::string& name) { return build_group(GroupSpec::parse(name)); }

// Intertwiner count by enumerating every k-linear map a -> b.
inline std::size_t brute_hom_count(const Module& a, const Module& b)
{
    const std::size_t n = a.dim() * b.dim();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= a.p();
    REQUIRE(total <= (1u << 16));
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        FpMatrix x(a.p(), b.dim(), a.dim());
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= a.p())
            x.set(i / a.dim(), i % a.dim(), static_cast<std::int64_t>(c % a.p()));
        bool ok = true;
        for (std::size_t j = 0; ok && j < a.group()->generators().size(); ++j)
            ok = x * a.generator_action(j) == b.generator_action(j) * x;
        count += ok;
    }
    return count;
}

inline std::size_t log_p(std::size_t v, std::uint32_t p)
{
    std::size_t e = 0;
    for (; v > 1; v /= p)
        ++e;
    return e;
}

// Columns of kG spanning J^i, built from products of pairs of basis vectors
// of J^{i-1} and J rather than from generators.
inline std::vector<FpMatrix> radical_powers_pairwise(const GroupPtr& g)
{
    const std::size_t n = g->order();
    FpMatrix aug(g->p(), n, n - 1);
    for (std::size_t e = 1; e < n; ++e) {
        aug.set(0, e - 1, g->p() - 1);
        aug.set(e, e - 1, 1);
    }
    std::vector<FpMatrix> powers{FpMatrix::identity(g->p(), n), aug};
    while (!powers.back().empty()) {
        const auto& prev = powers.back();
        std::vector<FpMatrix> cols;
        for (std::size_t i = 0; i < prev.cols(); ++i) {
            std::vector<std::uint8_t> u(n);
            for (std::size_t r = 0; r < n; ++r)
                u[r] = prev(r, i);
            const AlgebraElement a(g, u);
            for (std::size_t j = 0; j < aug.cols(); ++j) {
                std::vector<std::uint8_t> v(n);
                for (std::size_t r = 0; r < n; ++r)
                    v[r] = aug(r, j);
                cols.push_back((a * AlgebraElement(g, v)).as_column());
            }
        }
        powers.push_back(column_basis(FpMatrix::hstack(cols, g->p(), n)));
    }
    return powers;
}

// F_i = {h : h - 1 in J^i} straight from the definition.
inline std::vector<std::vector<std::size_t>> dimension_subgroups(const GroupPtr& g)
{
    const auto powers = radical_powers_pairwise(g);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 1; i < powers.size(); ++i) {
        std::vector<std::size_t> f;
        for (std::size_t h = 0; h < g->order(); ++h)
            if (h == 0 || (!powers[i].empty() && span_contains(powers[i], AlgebraElement::minus_one(g, h).as_column())))
                f.push_back(h);
        out.push_back(f);
    }
    return out;
}

// Higman: M is projective iff id_M is a trace sum_g g phi g^{-1}.
inline bool higman_projective(const Module& m)
{
    const std::size_t d = m.dim();
    if (d == 0)
        return true;
    std::vector<FpMatrix> cols;
    for (std::size_t i = 0; i < d * d; ++i) {
        FpMatrix phi(m.p(), d, d);
        phi.set(i / d, i % d, 1);
        FpMatrix tr(m.p(), d, d);
        for (std::size_t h = 0; h < m.group()->order(); ++h)
            tr += m.element_action(h) * phi * m.element_action(m.group()->inv(h));
        cols.push_back(tr.vec());
    }
    const auto span = FpMatrix::hstack(cols, m.p(), d * d);
    return span_contains(span, FpMatrix::identity(m.p(), d).vec());
}

// f: a -> b is stably trivial iff it lifts through the projective cover of b.
inline bool lifts_through_cover(const ModuleMap& f)
{
    const auto& b = f.target();
    if (b.dim() == 0 || f.is_zero())
        return true;
    const auto cov = projective_cover(b);
    const auto basis = hom_basis(f.source(), cov.cover);
    if (basis.empty())
        return false;
    std::vector<FpMatrix> cols;
    for (const auto& h : basis)
        cols.push_back((cov.map * h).vec());
    const auto span = FpMatrix::hstack(cols, f.source().p(), b.dim() * f.source().dim());
    return span_contains(span, f.matrix().vec());
}

// Dimension of the maps a -> b factoring through a projective.
inline std::size_t factoring_dim(const Module& a, const Module& b)
{
    if (b.dim() == 0 || a.dim() == 0)
        return 0;
    const auto cov = projective_cover(b);
    std::vector<FpMatrix> cols;
    for (const auto& h : hom_basis(a, cov.cover))
        cols.push_back((cov.map * h).vec());
    if (cols.empty())
        return 0;
    return rank(FpMatrix::hstack(cols, a.p(), a.dim() * b.dim()));
}

// Ghost by definition: every map from a shift of k in the window, composed
// with f, lifts through the cover.
inline bool ghost_by_definition(const ModuleMap& f, int lo, int hi)
{
    const auto g = f.source().group();
    for (int i = lo; i <= hi; ++i) {
        const auto s = heller_shift(trivial_module(g), i);
        for (const auto& r : hom_basis(s, f.source()))
            if (!lifts_through_cover(compose(f, ModuleMap(s, f.source(), r))))
                return false;
    }
    return true;
}

}  // namespace oracle
