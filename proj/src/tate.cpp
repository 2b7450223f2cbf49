#include "stmod/error.hpp"
#include "stmod/stmaps.hpp"

#include <algorithm>

namespace stmod {

TrivialShifts::TrivialShifts(GroupPtr group, int lo, int hi) : group_(std::move(group)), lo_(lo), hi_(hi)
{
    if (lo > hi)
        throw InputError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
    const auto k = projective_free_part(trivial_module(group_));
    std::vector<Module> up{k};
    for (int i = 1; i <= hi; ++i)
        up.push_back(heller_shift(up.back(), 1));
    // Omega~^{-i} k = (Omega~^i k)^*, so only the positive chain is iterated.
    std::vector<Module> down{k};
    for (int i = 1; i <= -lo; ++i) {
        if (i < static_cast<int>(up.size()))
            down.push_back(dual_module(up[i]));
        else
            down.push_back(dual_module(heller_shift(dual_module(down.back()), 1)));
    }
    for (int i = lo; i <= hi; ++i)
        shifts_.push_back(i >= 0 ? up[i] : down[-i]);
}

const Module& TrivialShifts::at(int i) const
{
    if (i < lo_ || i > hi_)
        throw InputError("degree " + std::to_string(i) + " outside the computed window");
    return shifts_[static_cast<std::size_t>(i - lo_)];
}

TateSpace tate_space(const Module& m, int i, const TrivialShifts& shifts)
{
    if (shifts.group() != m.group())
        throw InputError("tate_space: module over a different group");
    return {i, stable_hom(shifts.at(i), m)};
}

TateSpace tate_space(const Module& m, int i)
{
    return tate_space(m, i, TrivialShifts(m.group(), std::min(i, 0), std::max(i, 0)));
}

TateWindow tate_window(const Module& m, const TrivialShifts& shifts)
{
    TateWindow w{m, shifts.lo(), shifts.hi(), {}};
    for (int i = shifts.lo(); i <= shifts.hi(); ++i)
        w.spaces.push_back(tate_space(m, i, shifts));
    return w;
}

FpMatrix tate_induced_map(const ModuleMap& f, const TateSpace& source, const TateSpace& target)
{
    if (!source.hom.target.same_as(f.source()) || !target.hom.target.same_as(f.target()) ||
        source.degree != target.degree)
        throw InputError("tate_induced_map: Tate spaces do not match the map");
    FpMatrix out(f.source().p(), target.dim(), source.dim());
    const auto& s = source.hom;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        const auto r = FpMatrix::unvec(s.reps, j, s.target.dim(), s.source.dim());
        const auto c = target.hom.coordinates(f.matrix() * r);
        for (std::size_t i = 0; i < c.rows(); ++i)
            out.set(i, j, c(i, 0));
    }
    return out;
}

FpMatrix tate_induced_map(const ModuleMap& f, int i)
{
    const TrivialShifts shifts(f.source().group(), std::min(i, 0), std::max(i, 0));
    return tate_induced_map(f, tate_space(f.source(), i, shifts), tate_space(f.target(), i, shifts));
}

namespace {

// Two commuting elements of order p generating a group of order p^2.
std::optional<std::pair<std::size_t, std::size_t>> rank_two_elementary(const Group& g)
{
    const std::uint32_t p = g.p();
    std::vector<std::size_t> order_p;
    for (std::size_t a = 1; a < g.order(); ++a)
        if (g.element_order(a) == p)
            order_p.push_back(a);
    for (std::size_t i = 0; i < order_p.size(); ++i)
        for (std::size_t j = i + 1; j < order_p.size(); ++j) {
            const auto a = order_p[i], b = order_p[j];
            if (g.mul(a, b) != g.mul(b, a))
                continue;
            bool inside = false;
            for (std::uint32_t e = 1; e < p && !inside; ++e)
                inside = g.power(a, e) == b;
            if (!inside)
                return std::make_pair(a, b);
        }
    return std::nullopt;
}

}  // namespace

Periodicity trivial_period(const GroupPtr& g, int cap)
{
    Periodicity out;
    if (auto e = rank_two_elementary(*g)) {
        out.reason = "not periodic: contains the elementary abelian subgroup <" + g->element_label(e->first) + ", " +
                     g->element_label(e->second) + ">";
        return out;
    }
    const auto k = trivial_module(g);
    auto cur = projective_free_part(k);
    out.dims.push_back(cur.dim());
    for (int d = 1; d <= cap; ++d) {
        cur = heller_shift(cur, 1);
        out.dims.push_back(cur.dim());
        if (cur.dim() == 1 && iso_test(cur, k).status == IsoStatus::isomorphic) {
            out.period = d;
            out.reason = "Omega~^" + std::to_string(d) + " k is isomorphic to k";
            return out;
        }
    }
    out.reason = "no period up to " + std::to_string(cap);
    return out;
}

std::string to_string(GhostStatus s)
{
    switch (s) {
    case GhostStatus::ghost_exact:
        return "ghost-exact";
    case GhostStatus::ghost_in_window:
        return "ghost-in-window";
    case GhostStatus::not_ghost:
        return "not-ghost";
    }
    return "unknown";
}

namespace {

// First representative r of the space whose composite with f does not factor.
std::optional<ModuleMap> degree_witness(const ModuleMap& f, const TateSpace& space)
{
    if (space.dim() == 0)
        return std::nullopt;
    const auto factoring = column_basis(projective_factoring_span(space.hom.source, f.target()));
    for (const auto& r : space.hom.representatives())
        if (!span_contains(factoring, (f.matrix() * r.matrix()).vec()))
            return r;
    return std::nullopt;
}

// Degrees ordered 0, -1, 1, -2, 2, ... so witnesses sit in the smallest degree.
std::vector<int> scan_order(int lo, int hi)
{
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i)
        out.push_back(i);
    std::stable_sort(out.begin(), out.end(), [](int a, int b) {
        const int ka = a >= 0 ? 2 * a : -2 * a - 1, kb = b >= 0 ? 2 * b : -2 * b - 1;
        return ka < kb;
    });
    return out;
}

GhostVerdict finish(GhostVerdict v, std::optional<int> period)
{
    v.period = period;
    if (!v.witness)
        v.status = period && *period <= v.hi - v.lo + 1 ? GhostStatus::ghost_exact : GhostStatus::ghost_in_window;
    return v;
}

}  // namespace

GhostVerdict is_ghost(const ModuleMap& f, const TateWindow& source_window, std::optional<int> period)
{
    if (!source_window.module.same_as(f.source()))
        throw InputError("is_ghost: window computed for a different module");
    GhostVerdict v{GhostStatus::not_ghost, source_window.lo, source_window.hi, std::nullopt, std::nullopt};
    for (int i : scan_order(v.lo, v.hi)) {
        if (auto r = degree_witness(f, source_window.at(i))) {
            v.witness = GhostWitness{i, *r, false};
            break;
        }
    }
    return finish(std::move(v), period);
}

GhostVerdict is_ghost(const ModuleMap& f, int lo, int hi, GhostRoute route)
{
    const auto& g = f.source().group();
    const auto period = trivial_period(g).period;
    if (route == GhostRoute::direct) {
        const TrivialShifts shifts(g, lo, hi);
        return is_ghost(f, tate_window(f.source(), shifts), period);
    }
    const int top = std::max(hi, -lo - 1);
    const TrivialShifts shifts(g, 0, std::max(top, 0));
    GhostVerdict v{GhostStatus::not_ghost, lo, hi, std::nullopt, std::nullopt};
    const auto df = dual_map(f);
    for (int i : scan_order(lo, hi)) {
        if (v.witness)
            break;
        if (i >= 0) {
            if (auto r = degree_witness(f, tate_space(f.source(), i, shifts)))
                v.witness = GhostWitness{i, *r, false};
        } else if (auto r = degree_witness(df, tate_space(df.source(), -i - 1, shifts))) {
            v.witness = GhostWitness{i, *r, true};
        }
    }
    return finish(std::move(v), period);
}

bool check_witness(const ModuleMap& f, const GhostWitness& w)
{
    const auto composite = w.through_dual ? compose(dual_map(f), w.representative) : compose(f, w.representative);
    const auto shift = heller_shift(trivial_module(f.source().group()), w.through_dual ? -w.degree - 1 : w.degree);
    return iso_test(shift, w.representative.source()).status == IsoStatus::isomorphic && !is_stably_trivial(composite);
}

std::vector<FpMatrix> ghost_subspace(const Module& m, const Module& n, const TateWindow& source_window)
{
    if (!source_window.module.same_as(m))
        throw InputError("ghost_subspace: window computed for a different module");
    const auto hom = hom_basis(m, n);
    const std::uint32_t p = m.p();
    FpMatrix constraints(p, 0, hom.size());
    for (const auto& space : source_window.spaces) {
        if (space.dim() == 0 || hom.empty())
            continue;
        const auto& shift = space.hom.source;
        const auto q = annihilator(column_basis(projective_factoring_span(shift, n)));
        for (const auto& r : space.hom.representatives()) {
            std::vector<FpMatrix> cols;
            for (const auto& h : hom)
                cols.push_back(q * (h * r.matrix()).vec());
            constraints = FpMatrix::vstack(constraints, FpMatrix::hstack(cols, p, q.rows()));
        }
    }
    const auto coeffs = kernel_basis(constraints);
    std::vector<FpMatrix> out;
    for (std::size_t j = 0; j < coeffs.cols(); ++j) {
        FpMatrix x(p, n.dim(), m.dim());
        for (std::size_t l = 0; l < hom.size(); ++l)
            if (coeffs(l, j))
                x.add_scaled(hom[l], coeffs(l, j));
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace stmod
