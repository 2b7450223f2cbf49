#include "stmod/modules.hpp"

#include "stmod/error.hpp"

#include <algorithm>
#include <deque>

namespace stmod {

namespace {

FpMatrix word_action(const std::vector<FpMatrix>& gens, const std::vector<FpMatrix>& inverses, const Word& w,
                     std::uint32_t p, std::size_t n)
{
    auto m = FpMatrix::identity(p, n);
    for (auto [gen, e] : w.letters) {
        const auto& step = e < 0 ? inverses[gen] : gens[gen];
        for (int k = 0; k < std::abs(e); ++k)
            m = m * step;
    }
    return m;
}

void require_same_group(const Module& a, const Module& b, const char* what)
{
    if (a.group() != b.group())
        throw InputError(std::string(what) + ": modules over different groups");
}

}  // namespace

Module::Module(GroupPtr group, std::vector<FpMatrix> generator_actions)
{
    if (!group)
        throw InputError("module: null group");
    const auto& g = *group;
    if (generator_actions.size() != g.generators().size())
        throw InputError("module: expected " + std::to_string(g.generators().size()) + " action matrices for " +
                         g.name() + ", got " + std::to_string(generator_actions.size()));
    const std::size_t n = generator_actions.empty() ? 0 : generator_actions[0].rows();
    std::vector<FpMatrix> inverses;
    for (std::size_t i = 0; i < generator_actions.size(); ++i) {
        const auto& a = generator_actions[i];
        const auto& name = g.generator_names()[i];
        if (a.p() != g.p())
            throw InputError("module: action of " + name + " is over F_" + std::to_string(a.p()) + ", group is over F_" +
                             std::to_string(g.p()));
        if (a.rows() != n || a.cols() != n)
            throw InputError("module: action of " + name + " is not " + std::to_string(n) + "x" + std::to_string(n));
        auto inv = inverse(a);
        if (!inv)
            throw InputError("module: action of " + name + " is not invertible");
        inverses.push_back(std::move(*inv));
    }
    for (const auto& rel : g.relations()) {
        if (!(word_action(generator_actions, inverses, rel.lhs, g.p(), n) ==
              word_action(generator_actions, inverses, rel.rhs, g.p(), n)))
            throw InputError("module: action violates the relation " + rel.text + " of " + g.name());
    }

    // Element matrices by breadth-first search over the Cayley graph; every
    // edge is checked, so g -> action(g) is a homomorphism.
    std::vector<FpMatrix> elements(g.order());
    std::vector<bool> seen(g.order(), false);
    elements[0] = FpMatrix::identity(g.p(), n);
    seen[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < g.generators().size(); ++i) {
            const std::size_t b = g.mul(g.generators()[i], a);
            auto m = generator_actions[i] * elements[a];
            if (seen[b]) {
                if (!(m == elements[b]))
                    throw InputError("module: action is not compatible with the multiplication table of " + g.name() +
                                     " (at " + g.generator_names()[i] + " * " + g.element_label(a) + ")");
            } else {
                seen[b] = true;
                elements[b] = std::move(m);
                queue.push_back(b);
            }
        }
    }

    auto d = std::make_shared<Data>();
    d->group = std::move(group);
    d->dim = n;
    d->generators = std::move(generator_actions);
    d->elements = std::move(elements);
    data_ = std::move(d);
}

Module::Module(GroupPtr group)
    : Module(group, std::vector<FpMatrix>(group ? group->generators().size() : 0, FpMatrix(group ? group->p() : 2, 0, 0)))
{
}

FpMatrix Module::act(const AlgebraElement& a) const
{
    if (a.group() != group())
        throw InputError("act: algebra element over a different group");
    FpMatrix out(p(), dim(), dim());
    for (std::size_t g = 0; g < a.coeffs().size(); ++g)
        if (a.coeff(g))
            out.add_scaled(element_action(g), a.coeff(g));
    return out;
}

FpMatrix Module::norm_action() const
{
    FpMatrix out(p(), dim(), dim());
    for (const auto& e : data_->elements)
        out += e;
    return out;
}

bool Module::same_as(const Module& o) const
{
    return group() == o.group() && generator_actions() == o.generator_actions();
}

Module trivial_module(const GroupPtr& g)
{
    return {g, std::vector<FpMatrix>(g->generators().size(), FpMatrix::identity(g->p(), 1))};
}

Module regular_module(const GroupPtr& g)
{
    std::vector<FpMatrix> gens;
    for (auto h : g->generators()) {
        FpMatrix m(g->p(), g->order(), g->order());
        for (std::size_t x = 0; x < g->order(); ++x)
            m.set(g->mul(h, x), x, 1);
        gens.push_back(std::move(m));
    }
    return {g, std::move(gens)};
}

Module free_module(const GroupPtr& g, std::size_t rank)
{
    std::vector<Module> parts(rank, regular_module(g));
    return direct_sum(parts, g);
}

Module direct_sum(const Module& a, const Module& b)
{
    require_same_group(a, b, "direct_sum");
    std::vector<FpMatrix> gens;
    for (std::size_t i = 0; i < a.generator_actions().size(); ++i)
        gens.push_back(FpMatrix::block_diagonal(a.generator_action(i), b.generator_action(i)));
    return {a.group(), std::move(gens)};
}

Module direct_sum(const std::vector<Module>& parts, const GroupPtr& g)
{
    std::size_t n = 0;
    for (const auto& m : parts) {
        if (m.group() != g)
            throw InputError("direct_sum: modules over different groups");
        n += m.dim();
    }
    std::vector<FpMatrix> gens;
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        FpMatrix a(g->p(), n, n);
        std::size_t off = 0;
        for (const auto& m : parts) {
            const auto& b = m.generator_action(i);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    a.set(off + r, off + c, b(r, c));
            off += m.dim();
        }
        gens.push_back(std::move(a));
    }
    return {g, std::move(gens)};
}

bool is_cyclic_group(const Group& g)
{
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order())
            return true;
    return false;
}

namespace {

// An element generating the cyclic group, preferring a declared generator.
std::size_t cyclic_generator(const Group& g)
{
    for (auto gen : g.generators())
        if (g.element_order(gen) == g.order())
            return gen;
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order())
            return a;
    throw PreconditionError(g.name() + " is not cyclic");
}

}  // namespace

Module jordan_module(const GroupPtr& cyclic, std::size_t size)
{
    const auto& g = *cyclic;
    if (g.generators().size() != 1 || g.element_order(g.generators()[0]) != g.order())
        throw PreconditionError("jordan_module: " + g.name() + " is not presented as a cyclic group");
    if (size < 1 || size > g.order())
        throw InputError("jordan_module: size " + std::to_string(size) + " outside [1, " + std::to_string(g.order()) + "]");
    auto s = FpMatrix::identity(g.p(), size);
    for (std::size_t j = 0; j + 1 < size; ++j)
        s.set(j + 1, j, 1);
    return {cyclic, {s}};
}

Module dual_module(const Module& m)
{
    const auto& g = *m.group();
    std::vector<FpMatrix> gens;
    for (auto gen : g.generators())
        gens.push_back(m.element_action(g.inv(gen)).transpose());
    return {m.group(), std::move(gens)};
}

Module induce(const Module& m, const Subgroup& h)
{
    if (m.group() != h.group)
        throw InputError("induce: module is not over the subgroup");
    const auto& g = *h.parent;
    const std::size_t r = h.transversal.size();
    const std::size_t n = m.dim();
    std::vector<std::size_t> coset_of(g.order(), r);
    for (std::size_t i = 0; i < r; ++i)
        for (auto e : h.embedding)
            coset_of[g.mul(h.transversal[i], e)] = i;
    if (std::count(coset_of.begin(), coset_of.end(), r) != 0)
        throw InputError("induce: invalid transversal");

    std::vector<FpMatrix> gens;
    for (auto gen : g.generators()) {
        FpMatrix a(g.p(), r * n, r * n);
        for (std::size_t i = 0; i < r; ++i) {
            const std::size_t x = g.mul(gen, h.transversal[i]);
            const std::size_t j = coset_of[x];
            const std::size_t local = h.restrict(g.mul(g.inv(h.transversal[j]), x));
            if (local == static_cast<std::size_t>(-1))
                throw InternalError("induce: coset computation left the subgroup");
            const auto& b = m.element_action(local);
            for (std::size_t rr = 0; rr < n; ++rr)
                for (std::size_t cc = 0; cc < n; ++cc)
                    a.set(j * n + rr, i * n + cc, b(rr, cc));
        }
        gens.push_back(std::move(a));
    }
    return {h.parent, std::move(gens)};
}

Module induced_module(const GroupPtr& g, const Subgroup& h)
{
    if (h.parent != g)
        throw InputError("induced_module: subgroup of a different group");
    return induce(trivial_module(h.group), h);
}

Module restrict_module(const Module& m, const Subgroup& h)
{
    if (m.group() != h.parent)
        throw InputError("restrict_module: module is not over the parent group");
    std::vector<FpMatrix> gens;
    for (auto gen : h.group->generators())
        gens.push_back(m.element_action(h.embedding[gen]));
    return {h.group, std::move(gens)};
}

FpMatrix generated_submodule(const Module& m, const FpMatrix& vectors)
{
    if (vectors.rows() != m.dim())
        throw InputError("generated_submodule: vectors have the wrong length");
    std::vector<FpMatrix> images;
    for (std::size_t g = 0; g < m.group()->order(); ++g)
        images.push_back(m.element_action(g) * vectors);
    return column_basis(FpMatrix::hstack(images, m.p(), m.dim()));
}

bool is_submodule(const Module& m, const FpMatrix& basis)
{
    for (const auto& a : m.generator_actions())
        if (!span_contains(basis, a * basis))
            return false;
    return true;
}

Submodule submodule(const Module& m, const FpMatrix& basis)
{
    if (basis.rows() != m.dim())
        throw InputError("submodule: basis vectors have the wrong length");
    if (rank(basis) != basis.cols())
        throw InputError("submodule: basis is not linearly independent");
    const auto left = left_inverse(basis);
    std::vector<FpMatrix> gens;
    for (const auto& a : m.generator_actions()) {
        auto image = a * basis;
        auto coords = left * image;
        if (!(basis * coords == image))
            throw InputError("submodule: span is not stable under the group action");
        gens.push_back(std::move(coords));
    }
    return {m, basis, Module(m.group(), std::move(gens))};
}

QuotientModule quotient(const Module& m, const FpMatrix& sub_basis)
{
    if (sub_basis.rows() != m.dim())
        throw InputError("quotient: basis vectors have the wrong length");
    if (!is_submodule(m, sub_basis))
        throw InputError("quotient: span is not a submodule");
    const auto sub = column_basis(sub_basis);
    const auto comp = complement_basis(sub);
    auto full = inverse(FpMatrix::hstack(sub, comp));
    if (!full)
        throw InternalError("quotient: complement does not complete the basis");
    const auto proj = full->block(sub.cols(), 0, comp.cols(), m.dim());
    std::vector<FpMatrix> gens;
    for (const auto& a : m.generator_actions())
        gens.push_back(proj * a * comp);
    return {m, Module(m.group(), std::move(gens)), proj, comp};
}

Module change_basis(const Module& m, const FpMatrix& basis)
{
    auto inv = inverse(basis);
    if (!inv || basis.rows() != m.dim())
        throw InputError("change_basis: basis matrix is not invertible");
    std::vector<FpMatrix> gens;
    for (const auto& a : m.generator_actions())
        gens.push_back(*inv * a * basis);
    return {m.group(), std::move(gens)};
}

namespace {

FpMatrix stacked_minus_identity(const Module& m)
{
    const auto id = FpMatrix::identity(m.p(), m.dim());
    FpMatrix out(m.p(), 0, m.dim());
    for (const auto& a : m.generator_actions())
        out = FpMatrix::vstack(out, a - id);
    return out;
}

}  // namespace

Submodule invariants(const Module& m)
{
    return submodule(m, kernel_basis(stacked_minus_identity(m)));
}

FpMatrix radical_of(const Module& m, const FpMatrix& sub_basis)
{
    const auto id = FpMatrix::identity(m.p(), m.dim());
    std::vector<FpMatrix> images;
    for (const auto& a : m.generator_actions())
        images.push_back((a - id) * sub_basis);
    return column_basis(FpMatrix::hstack(images, m.p(), m.dim()));
}

std::size_t coinvariants_dim(const Module& m)
{
    return m.dim() - radical_of(m, FpMatrix::identity(m.p(), m.dim())).cols();
}

std::vector<FpMatrix> socle_series(const Module& m)
{
    const auto stacked = stacked_minus_identity(m);
    std::vector<FpMatrix> out;
    FpMatrix current(m.p(), m.dim(), 0);
    while (current.cols() < m.dim()) {
        // Soc^{i+1} = {v : (g - 1) v in Soc^i for all generators g}
        const auto q = annihilator(current);
        const std::size_t gens = m.generator_actions().size();
        FpMatrix system(m.p(), 0, m.dim());
        for (std::size_t i = 0; i < gens; ++i)
            system = FpMatrix::vstack(system, q * stacked.block(i * m.dim(), 0, m.dim(), m.dim()));
        auto next = kernel_basis(system);
        if (next.cols() <= current.cols())
            throw InternalError("socle_series: socle layers failed to increase");
        current = next;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<FpMatrix> radical_series(const Module& m)
{
    std::vector<FpMatrix> out{FpMatrix::identity(m.p(), m.dim())};
    while (out.back().cols() > 0) {
        auto next = radical_of(m, out.back());
        if (next.cols() >= out.back().cols())
            throw InternalError("radical_series: radical layers failed to decrease");
        out.push_back(std::move(next));
    }
    return out;
}

SeriesReport socle_radical_series(const Module& m)
{
    SeriesReport r;
    for (const auto& s : socle_series(m))
        r.socle_dims.push_back(s.cols());
    for (const auto& s : radical_series(m))
        r.radical_dims.push_back(s.cols());
    r.radical_length = r.radical_dims.size() - 1;
    return r;
}

std::size_t radical_length(const Module& m)
{
    return radical_series(m).size() - 1;
}

FpMatrix hom_space(const Module& a, const Module& b)
{
    require_same_group(a, b, "hom_space");
    const std::uint32_t p = a.p();
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    // Kernel of X -> rho_B(g) X - X rho_A(g), one generator at a time, with
    // vec(X) row-major so both products are plain block products.
    auto k = FpMatrix::identity(p, n);
    for (std::size_t i = 0; i < a.generator_actions().size() && k.cols() > 0; ++i) {
        const std::size_t kc = k.cols();
        auto left = (b.generator_action(i) * k.reshaped(nb, na * kc)).reshaped(n, kc);
        const auto at = a.generator_action(i).transpose();
        FpMatrix right(p, n, kc);
        for (std::size_t r = 0; r < nb; ++r) {
            auto blk = at * k.block(r * na, 0, na, kc);
            for (std::size_t c = 0; c < na; ++c)
                for (std::size_t j = 0; j < kc; ++j)
                    right.set(r * na + c, j, blk(c, j));
        }
        k = k * kernel_basis(left - right);
    }
    return k;
}

std::vector<FpMatrix> hom_basis(const Module& a, const Module& b)
{
    const auto h = hom_space(a, b);
    std::vector<FpMatrix> out;
    for (std::size_t j = 0; j < h.cols(); ++j)
        out.push_back(FpMatrix::unvec(h, j, b.dim(), a.dim()));
    return out;
}

bool is_intertwiner(const Module& a, const Module& b, const FpMatrix& x)
{
    if (a.group() != b.group() || x.rows() != b.dim() || x.cols() != a.dim() || x.p() != a.p())
        return false;
    for (std::size_t i = 0; i < a.generator_actions().size(); ++i)
        if (!(b.generator_action(i) * x == x * a.generator_action(i)))
            return false;
    return true;
}

std::vector<std::size_t> jordan_rank_profile(const Module& m)
{
    const auto& g = *m.group();
    const auto x = m.element_action(cyclic_generator(g)) - FpMatrix::identity(m.p(), m.dim());
    std::vector<std::size_t> ranks;
    auto power = FpMatrix::identity(m.p(), m.dim());
    for (std::size_t j = 0; j <= g.order(); ++j) {
        ranks.push_back(rank(power));
        power = power * x;
    }
    return ranks;
}

std::vector<std::size_t> jordan_type(const Module& m)
{
    const auto ranks = jordan_rank_profile(m);
    // blocks of size >= j: ranks[j-1] - ranks[j]
    std::vector<std::size_t> sizes;
    for (std::size_t j = ranks.size() - 1; j >= 1; --j) {
        const std::size_t at_least = ranks[j - 1] - ranks[j];
        const std::size_t at_least_next = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
        for (std::size_t c = 0; c < at_least - at_least_next; ++c)
            sizes.push_back(j);
    }
    return sizes;
}

}  // namespace stmod
