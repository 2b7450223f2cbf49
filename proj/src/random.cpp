#include "stmod/random.hpp"

#include "stmod/error.hpp"

namespace stmod {

FpMatrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, Rng& rng)
{
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    FpMatrix m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, coeff(rng));
    return m;
}

FpMatrix random_invertible(std::uint32_t p, std::size_t n, Rng& rng)
{
    while (true) {
        auto m = random_matrix(p, n, n, rng);
        if (rank(m) == n)
            return m;
    }
}

Module random_layered_module(const GroupPtr& g, std::size_t top, std::size_t bottom, Rng& rng)
{
    const std::size_t n = top + bottom;
    std::vector<FpMatrix> gens;
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        auto a = FpMatrix::identity(g->p(), n);
        const auto block = random_matrix(g->p(), bottom, top, rng);
        for (std::size_t r = 0; r < bottom; ++r)
            for (std::size_t c = 0; c < top; ++c)
                a.set(top + r, c, block(r, c));
        gens.push_back(std::move(a));
    }
    return {g, std::move(gens)};
}

Module random_basis_change(const Module& m, Rng& rng)
{
    return change_basis(m, random_invertible(m.p(), m.dim(), rng));
}

namespace {

std::size_t pick(Rng& rng, std::size_t n)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// A random vector of kG^t lying in J^depth (kG^t).
FpMatrix random_deep_vectors(const GroupPtr& g, std::size_t t, std::size_t count, Rng& rng)
{
    const auto filt = radical_filtration(g);
    const std::size_t depth = pick(rng, filt.nilpotency_index());
    const auto& layer = filt.bases[depth];
    FpMatrix out(g->p(), t * g->order(), count);
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t block = pick(rng, t);
        const auto v = layer * random_matrix(g->p(), layer.cols(), 1, rng);
        for (std::size_t r = 0; r < g->order(); ++r)
            out.set(block * g->order() + r, c, v(r, 0));
    }
    return out;
}

Module candidate(const GroupPtr& g, std::size_t max_dim, Rng& rng, int depth)
{
    const std::size_t order = g->order();
    switch (pick(rng, depth > 0 ? 6 : 5)) {
    case 0: {  // submodule of a free module
        const std::size_t t = 1 + pick(rng, 2);
        const auto free = free_module(g, t);
        const auto basis = generated_submodule(free, random_deep_vectors(g, t, 1 + pick(rng, 2), rng));
        return submodule(free, basis).module;
    }
    case 1: {  // quotient of a free module
        const std::size_t t = 1 + pick(rng, 2);
        const auto free = free_module(g, t);
        const auto basis = generated_submodule(free, random_deep_vectors(g, t, 1 + pick(rng, 3), rng));
        return quotient(free, basis).module;
    }
    case 2: {  // permutation module on the cosets of a cyclic subgroup
        const std::size_t e = 1 + pick(rng, order - 1);
        const auto h = make_subgroup(g, cyclic_subgroup(*g, e).elements);
        return induced_module(g, h);
    }
    case 3: {
        const int shift = static_cast<int>(pick(rng, 5)) - 2;
        return heller_shift(trivial_module(g), shift);
    }
    case 4: {
        const std::size_t top = 1 + pick(rng, std::max<std::size_t>(1, max_dim / 2));
        const std::size_t bottom = 1 + pick(rng, std::max<std::size_t>(1, max_dim - top));
        return random_layered_module(g, top, bottom, rng);
    }
    default: {
        auto a = candidate(g, max_dim, rng, depth - 1);
        auto b = candidate(g, max_dim, rng, depth - 1);
        return direct_sum(a, b);
    }
    }
}

}  // namespace

Module random_module(const GroupPtr& g, std::size_t max_dim, Rng& rng, bool projective_free)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto m = candidate(g, max_dim, rng, 1);
        if (projective_free)
            m = projective_free_part(m);
        if (m.dim() == 0 || m.dim() > max_dim)
            continue;
        return random_basis_change(m, rng);
    }
    throw InternalError("random_module: no module of dimension at most " + std::to_string(max_dim) + " over " +
                        g->name());
}

ModuleMap random_combination(const Module& a, const Module& b, const std::vector<FpMatrix>& basis, Rng& rng)
{
    std::uniform_int_distribution<std::uint32_t> coeff(0, a.p() - 1);
    FpMatrix x(a.p(), b.dim(), a.dim());
    for (const auto& h : basis)
        x.add_scaled(h, coeff(rng));
    return {a, b, std::move(x)};
}

ModuleMap random_hom(const Module& a, const Module& b, Rng& rng)
{
    return random_combination(a, b, hom_basis(a, b), rng);
}

}  // namespace stmod
