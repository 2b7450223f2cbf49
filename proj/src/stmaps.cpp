#include "stmod/stmaps.hpp"

#include "stmod/error.hpp"

namespace stmod {

ModuleMap::ModuleMap(Module source, Module target, FpMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (source_.group() != target_.group())
        throw InputError("module map: source and target over different groups");
    if (matrix_.p() != source_.p() || matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw InputError("module map: matrix must be " + std::to_string(target_.dim()) + "x" +
                         std::to_string(source_.dim()) + " over F_" + std::to_string(source_.p()));
    const auto& names = source_.group()->generator_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!(target_.generator_action(i) * matrix_ == matrix_ * source_.generator_action(i)))
            throw InputError("module map: matrix does not commute with the action of " + names[i]);
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target)
{
    return {source, target, FpMatrix(source.p(), target.dim(), source.dim())};
}

ModuleMap ModuleMap::identity(const Module& m)
{
    return {m, m, FpMatrix::identity(m.p(), m.dim())};
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const
{
    if (!source_.same_as(o.source_) || !target_.same_as(o.target_))
        throw InputError("module map sum: different source or target");
    return {source_, target_, matrix_ + o.matrix_};
}

ModuleMap ModuleMap::scaled(std::uint32_t c) const
{
    return {source_, target_, matrix_.scaled(c)};
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g)
{
    if (!g.target().same_as(f.source()))
        throw InputError("compose: maps are not composable");
    return {g.source(), f.target(), f.matrix() * g.matrix()};
}

ModuleMap compose_chain(const std::vector<ModuleMap>& chain)
{
    if (chain.empty())
        throw InputError("compose_chain: empty chain");
    auto out = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i)
        out = compose(chain[i], out);
    return out;
}

ModuleMap theta_multiplication(const Module& m, const AlgebraElement& theta)
{
    if (theta.group() != m.group())
        throw InputError("theta_multiplication: element over a different group");
    if (!is_central(theta))
        throw PreconditionError("theta_multiplication: element is not central in kG");
    return {m, m, m.act(theta)};
}

ModuleMap dual_map(const ModuleMap& f)
{
    return {dual_module(f.target()), dual_module(f.source()), f.matrix().transpose()};
}

namespace {

FpMatrix top_generators(const Module& b)
{
    return complement_basis(radical_of(b, FpMatrix::identity(b.p(), b.dim())));
}

}  // namespace

FpMatrix projective_factoring_span(const Module& a, const Module& b)
{
    if (a.group() != b.group())
        throw InputError("projective_factoring_span: modules over different groups");
    const auto& g = *a.group();
    const std::uint32_t p = a.p();
    const std::size_t na = a.dim(), nb = b.dim();
    const auto top = top_generators(b);
    const std::size_t d = top.cols();
    // Column (t, j) is vec of sum_g (g v_t) (e_j^T g^{-1}).
    std::vector<std::uint32_t> acc(nb * na * d * na, 0);
    const std::size_t width = d * na;
    for (std::size_t t = 0; t < d; ++t) {
        const auto v = top.col(t);
        for (std::size_t h = 0; h < g.order(); ++h) {
            const auto u = b.element_action(h) * v;
            const auto& r = a.element_action(g.inv(h));
            for (std::size_t row = 0; row < nb; ++row) {
                const std::uint32_t ur = u(row, 0);
                if (!ur)
                    continue;
                for (std::size_t c = 0; c < na; ++c) {
                    std::uint32_t* out = acc.data() + (row * na + c) * width + t * na;
                    for (std::size_t j = 0; j < na; ++j)
                        out[j] += ur * r(j, c);
                }
            }
        }
    }
    FpMatrix s(p, nb * na, width);
    for (std::size_t i = 0; i < nb * na; ++i)
        for (std::size_t j = 0; j < width; ++j)
            s.set(i, j, acc[i * width + j]);
    return s;
}

TrivialityCertificate stable_triviality(const ModuleMap& f)
{
    const auto& a = f.source();
    const auto& b = f.target();
    const auto span = projective_factoring_span(a, b);
    const auto target = f.matrix().vec();
    TrivialityCertificate cert;
    auto sol = solve(span, target);
    if (!sol) {
        cert.rank_gap = rank(FpMatrix::hstack(span, target)) - rank(span);
        return cert;
    }
    // Coefficients c_(t,j) give lambda_t = sum_j c_(t,j) e_j^T and the lift
    // w -> sum_(t,g) lambda_t(g^{-1} w) (t, g) into the cover.
    const auto& g = *a.group();
    const std::size_t na = a.dim(), d = span.cols() / std::max<std::size_t>(na, 1);
    FpMatrix lift(a.p(), d * g.order(), na);
    for (std::size_t t = 0; t < d; ++t) {
        const auto lambda = sol->block(t * na, 0, na, 1).transpose();
        for (std::size_t h = 0; h < g.order(); ++h) {
            const auto row = lambda * a.element_action(g.inv(h));
            for (std::size_t c = 0; c < na; ++c)
                lift.set(t * g.order() + h, c, row(0, c));
        }
    }
    cert.stably_trivial = true;
    cert.lift = std::move(lift);
    return cert;
}

bool is_stably_trivial(const ModuleMap& f)
{
    return span_contains(projective_factoring_span(f.source(), f.target()), f.matrix().vec());
}

bool check_certificate(const ModuleMap& f, const TrivialityCertificate& cert)
{
    if (cert.stably_trivial) {
        if (!cert.lift)
            return false;
        const auto cover = projective_cover(f.target());
        return is_intertwiner(f.source(), cover.cover, *cert.lift) && cover.map * *cert.lift == f.matrix();
    }
    const auto span = projective_factoring_span(f.source(), f.target());
    const auto target = f.matrix().vec();
    return cert.rank_gap == 1 && rank(FpMatrix::hstack(span, target)) == rank(span) + 1;
}

std::vector<ModuleMap> StableHom::representatives() const
{
    std::vector<ModuleMap> out;
    for (std::size_t j = 0; j < reps.cols(); ++j)
        out.emplace_back(source, target, FpMatrix::unvec(reps, j, target.dim(), source.dim()));
    return out;
}

FpMatrix StableHom::coordinates(const FpMatrix& x) const
{
    const auto all = coords * x.vec();
    return all.block(factoring.cols(), 0, reps.cols(), 1);
}

bool StableHom::factors(const FpMatrix& x) const
{
    return span_contains(factoring, x.vec());
}

StableHom stable_hom(const Module& a, const Module& b)
{
    auto hom = hom_space(a, b);
    auto factoring = column_basis(projective_factoring_span(a, b));
    const auto joint = rref(FpMatrix::hstack(factoring, hom));
    if (joint.rank < factoring.cols() ||
        (factoring.cols() > 0 && joint.pivots[factoring.cols() - 1] != factoring.cols() - 1))
        throw InternalError("stable_hom: factoring maps are not independent");
    std::vector<std::size_t> picked;
    for (auto c : joint.pivots)
        if (c >= factoring.cols())
            picked.push_back(c - factoring.cols());
    if (joint.rank != hom.cols())
        throw InternalError("stable_hom: factoring maps are not intertwiners");
    auto reps = hom.select_columns(picked);
    auto coords = left_inverse(FpMatrix::hstack(factoring, reps));
    return {a, b, std::move(hom), std::move(factoring), std::move(reps), std::move(coords)};
}

Cone cone(const ModuleMap& f)
{
    const auto& a = f.source();
    const auto& m = f.target();
    const auto hull = injective_hull(a);
    const auto total = direct_sum(m, hull.hull);
    const auto j = FpMatrix::vstack(f.matrix(), hull.embedding);
    if (rank(j) != a.dim())
        throw InternalError("cone: (f, e) is not injective");
    auto q = quotient(total, j);
    const auto to_cokernel = q.projection.block(0, 0, q.module.dim(), m.dim());
    auto split = split_projective_free(q.module);
    ModuleMap map(m, split.core, split.projection * to_cokernel);
    return {q.module, split.core, to_cokernel, split.projection, split.inclusion, std::move(map)};
}

UniversalGhost universal_ghost(const Module& m, const TrivialShifts& shifts)
{
    const auto& g = m.group();
    std::vector<Module> parts;
    std::vector<FpMatrix> blocks;
    std::vector<int> degrees;
    for (int i = shifts.lo(); i <= shifts.hi(); ++i) {
        const auto space = tate_space(m, i, shifts);
        for (std::size_t j = 0; j < space.dim(); ++j) {
            parts.push_back(space.hom.source);
            blocks.push_back(FpMatrix::unvec(space.hom.reps, j, m.dim(), space.hom.source.dim()));
            degrees.push_back(i);
        }
    }
    auto gens = parts.empty() ? Module(g) : direct_sum(parts, g);
    auto r = blocks.empty() ? FpMatrix(m.p(), m.dim(), 0) : FpMatrix::hstack(blocks, m.p(), m.dim());
    ModuleMap assembled(gens, m, std::move(r));
    auto c = cone(assembled);
    return {c.map, gens, assembled, degrees};
}

UniversalGhost universal_ghost(const Module& m, int period)
{
    const auto per = trivial_period(m.group());
    if (!per.period || *per.period != period)
        throw PreconditionError("universal_ghost: trivial module of " + m.group()->name() + " does not have period " +
                                std::to_string(period) + " (" + per.reason + ")");
    return universal_ghost(m, TrivialShifts(m.group(), 0, period - 1));
}

bool factors_through(const ModuleMap& g, const ModuleMap& f)
{
    if (!g.source().same_as(f.source()))
        throw InputError("factors_through: maps have different sources");
    const auto hs = hom_basis(f.target(), g.target());
    std::vector<FpMatrix> cols;
    for (const auto& h : hs)
        cols.push_back((h * f.matrix()).vec());
    cols.push_back(projective_factoring_span(g.source(), g.target()));
    const auto span = FpMatrix::hstack(cols, g.source().p(), g.target().dim() * g.source().dim());
    return span_contains(span, g.matrix().vec());
}

}  // namespace stmod
