#include "oracles.hpp"

#include "stmod/error.hpp"

using namespace stmod;
using oracle::grp;

namespace {

Subgroup cyclic_sub(const GroupPtr& g, std::size_t generator)
{
    return make_subgroup(g, cyclic_subgroup(*g, generator).elements);
}

}  // namespace

TEST_CASE("ghost length examples")
{
    CHECK(ghost_length(trivial_module(grp("C4"))) == 1);
    CHECK(ghost_length(regular_module(grp("C4"))) == 0);
    CHECK(ghost_length(jordan_module(grp("C5"), 2)) == 2);
    for (const auto* name : {"C2", "C3", "C4", "C5", "C7", "C8", "C9"}) {
        const auto g = grp(name);
        const std::size_t n = g->order();
        for (std::size_t i = 1; i < n; ++i)
            CHECK(ghost_length(jordan_module(g, i)) == std::min(i, n - i));
    }
    CHECK_THROWS_AS(ghost_length(trivial_module(grp("V4"))), PreconditionError);
}

TEST_CASE("ghost number of C5 by brute force")
{
    // Ghost endomorphisms of the sum of all non-projective indecomposables:
    // some single one is stably nontrivial, every composite of two is trivial.
    const auto g = grp("C5");
    std::vector<Module> blocks;
    for (std::size_t i = 1; i < 5; ++i)
        blocks.push_back(jordan_module(g, i));
    const auto m = direct_sum(blocks, g);
    const TrivialShifts shifts(g, -2, 2);
    const auto basis = ghost_subspace(m, m, tate_window(m, shifts));
    bool nontrivial = false;
    for (const auto& a : basis)
        nontrivial = nontrivial || !is_stably_trivial(ModuleMap(m, m, a));
    CHECK(nontrivial);
    for (const auto& a : basis)
        for (const auto& b : basis)
            CHECK(is_stably_trivial(ModuleMap(m, m, b * a)));
}

TEST_CASE("ghost length is invariant under Heller shifts")
{
    for (const auto* name : {"C4", "C5", "C7", "C8", "C9"}) {
        const auto g = grp(name);
        for (std::size_t i = 1; i < g->order(); ++i) {
            const auto m = jordan_module(g, i);
            const auto len = ghost_length(m);
            for (int s : {-1, 1})
                CHECK(ghost_length(heller_shift(m, s)) == len);
        }
    }
    CHECK(ghost_length(heller_shift(trivial_module(grp("Q8")), 3)) == 1);
}

TEST_CASE("generating length bounds")
{
    CHECK(generating_length_upper(jordan_module(grp("C8"), 3)).bound == 3);
    const auto v4 = grp("V4");
    const auto om = heller_shift(trivial_module(v4), 1);
    CHECK(om.dim() == 3);
    const auto gb = generating_length_upper(om);
    CHECK(gb.bound == 1);
    CHECK(gb.heller_degree == 1);
    CHECK(generating_length_upper(regular_module(v4)).bound == 0);

    // A 6-dimensional projective-free module over V4 with a 3-dimensional top and socle.
    Rng rng(61);
    const auto h = cyclic_sub(v4, v4->generators()[0]);
    const auto six = direct_sum(std::vector<Module>{induced_module(v4, h), induced_module(v4, h), induced_module(v4, h)}, v4);
    CHECK(six.dim() == 6);
    CHECK(generating_length_upper(six).bound == 2);
    for (int t = 0; t < 20; ++t) {
        const auto m = random_layered_module(v4, 3, 3, rng);
        const auto pf = projective_free_part(m);
        if (pf.dim() == 6 && !is_heller_of_trivial(pf, 4))
            CHECK(generating_length_upper(pf).bound == 2);
    }
}

TEST_CASE("length inequalities over cyclic groups")
{
    Rng rng(62);
    for (const auto* name : {"C4", "C8", "C9", "C5", "C7"}) {
        const auto g = grp(name);
        const auto m_index = nilpotency_index(g, g->p());
        for (int t = 0; t < 8; ++t) {
            const auto m = random_module(g, 8, rng);
            const auto r = length_report(m);
            REQUIRE(r.ghost_length);
            CHECK(*r.ghost_length <= r.generating.bound);
            CHECK(r.generating.bound <= r.series.radical_length);
            CHECK(r.series.radical_length < m_index);
            CHECK(m_index <= g->order());
        }
    }
}

TEST_CASE("cyclic ghost numbers")
{
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>> cases{
        {2, 1, 1}, {3, 1, 1}, {2, 2, 2}, {5, 1, 2}, {7, 1, 3}, {2, 3, 4}, {3, 2, 4}, {2, 4, 8}, {11, 1, 5}};
    for (auto [p, r, expected] : cases) {
        const auto rep = ghost_number_cyclic(p, r);
        CHECK(rep.ghost_number == expected);
        CHECK(rep.formula == expected);
        CHECK(rep.witness_nontrivial);
        CHECK(rep.witness_certificate_ok);
    }
    CHECK_THROWS_AS(ghost_number_cyclic(2, 5), CapError);
    CHECK_THROWS_AS(ghost_number_cyclic(4, 1), InputError);
}

TEST_CASE("Benson witnesses")
{
    const auto c4 = grp("C4");
    auto cert = benson_witness(cyclic_sub(c4, 2), AlgebraElement::minus_one(c4, 1));
    CHECK(cert.certified);
    CHECK_FALSE(cert.factoring.stably_trivial);
    CHECK(is_ghost(cert.map, -2, 2).status != GhostStatus::not_ghost);

    const auto v4 = grp("V4");
    cert = benson_witness(cyclic_sub(v4, v4->generators()[0]), AlgebraElement::minus_one(v4, v4->generators()[1]));
    CHECK(cert.certified);
    CHECK(is_ghost(cert.map, -2, 2).status == GhostStatus::ghost_in_window);

    const auto c24 = grp("C2xC4");
    const std::size_t g0 = c24->generators()[0], g1 = c24->generators()[1];
    const auto theta = AlgebraElement::minus_one(c24, g1).pow(3);
    cert = benson_witness(cyclic_sub(c24, g0), theta);
    CHECK(cert.certified);
    const auto x = theta_multiplication(cert.module, AlgebraElement::minus_one(c24, g1));
    CHECK(is_ghost(x, -2, 2).status != GhostStatus::not_ghost);
    CHECK_FALSE(is_stably_trivial(compose_chain(std::vector<ModuleMap>{x, x, x})));
}

TEST_CASE("abelian bounds")
{
    const std::vector<std::tuple<const char*, std::size_t, std::size_t, std::size_t>> cases{
        {"C2xC2", 3, 2, 2}, {"C2xC4", 5, 4, 4}, {"C3xC3", 5, 3, 4}, {"C2^3", 4, 3, 3}, {"C8", 8, 4, 7},
        {"C4xC4", 7, 5, 6}, {"C2", 2, 1, 1}};
    for (auto [name, m, lower, upper] : cases) {
        CAPTURE(name);
        const auto b = abelian_bounds(grp(name));
        CHECK(b.nilpotency == m);
        CHECK(b.lower == lower);
        CHECK(b.upper == upper);
        CHECK(b.certified);
        CHECK(b.factors_are_ghosts);
        CHECK(b.chain_length + 1 == b.lower);
    }
    CHECK_THROWS_AS(abelian_bounds(grp("Q8")), PreconditionError);
}

TEST_CASE("ghost number two classification")
{
    const auto cls = classify_ghost_number_two();
    CHECK(cls.matches);
    const std::set<std::string> two(cls.ghost_number_two.begin(), cls.ghost_number_two.end());
    CHECK(two == std::set<std::string>{"C4", "C2xC2", "C5"});
    for (const auto& e : cls.entries)
        if (e.group == "C8" || e.group == "C2xC2xC2")
            CHECK(e.lower >= 3);
}

TEST_CASE("composite bound")
{
    Rng rng(63);
    for (const auto* name : {"C2", "V4", "Q8"}) {
        const auto g = grp(name);
        const std::size_t len = nilpotency_index(g, g->p()) - 1;
        const TrivialShifts shifts(g, -4, 4);
        for (int t = 0; t < 5; ++t) {
            const auto m = random_module(g, 6, rng);
            const auto w = tate_window(m, shifts);
            const auto basis = ghost_subspace(m, m, w);
            std::vector<ModuleMap> chain;
            for (std::size_t j = 0; j < len; ++j)
                chain.push_back(random_combination(m, m, basis, rng));
            const auto rep = composite_bound_check(chain);
            CHECK(rep.ok);
            CHECK(rep.bound_applies);
            CHECK(rep.prefixes.size() == len);
            CHECK(rep.prefixes.back().stably_trivial);
        }
    }
}

TEST_CASE("quaternion example")
{
    const auto q = q8_example();
    CHECK(q.module.dim() == 3);
    CHECK(q.spans_radical_cube);
    CHECK(q.invariants_dim == 1);
    CHECK(q.dim_mod_8 == 3);
    CHECK(q.projective_free);
    CHECK(q.extension_of_trivials);
    CHECK(q.ghost_length == 2);
    CHECK(q.generating_upper == 2);
    CHECK(q.group_lower == 2);
    CHECK(q.group_upper == 4);
}

TEST_CASE("induction preserves nontrivial ghosts")
{
    const auto c8 = grp("C8");
    const auto h = cyclic_sub(c8, 2);
    const auto x = theta_multiplication(jordan_module(h.group, 2), AlgebraElement::minus_one(h.group, 1));
    auto r = induction_check(h, x);
    CHECK(r.ok);
    CHECK_FALSE(r.induced_trivial);
    CHECK(r.verdict.status != GhostStatus::not_ghost);

    const auto c24 = grp("C2xC4");
    const auto h4 = cyclic_sub(c24, c24->generators()[1]);
    const auto y = theta_multiplication(jordan_module(h4.group, 2), AlgebraElement::minus_one(h4.group, 1));
    r = induction_check(h4, y);
    CHECK(r.ok);
    CHECK_FALSE(r.induced_trivial);

    // Stably trivial maps induce stably trivial maps.
    const auto c4 = grp("C4");
    const auto h2 = cyclic_sub(c4, 2);
    const auto reg = regular_module(h2.group);
    r = induction_check(h2, ModuleMap(reg, reg, FpMatrix::from_rows(2, {{1, 1}, {1, 1}})));
    CHECK(r.source_trivial);
    CHECK(r.induced_trivial);

    const auto v4 = grp("V4");
    const auto ha = cyclic_sub(v4, v4->generators()[0]);
    const auto ra = regular_module(ha.group);
    r = induction_check(ha, ModuleMap(ra, ra, FpMatrix::from_rows(2, {{1, 1}, {1, 1}})));
    CHECK(r.ok);
    CHECK(r.induced_trivial);
    // Over C2 every ghost is stably trivial, so the identity on k is refused.
    const auto ka = trivial_module(ha.group);
    CHECK_THROWS_AS(induction_check(ha, ModuleMap::identity(ka)), PreconditionError);
}

TEST_CASE("ghost numbers grow along subgroups")
{
    const auto c2 = ghost_number_cyclic(2, 1).ghost_number;
    CHECK(c2 <= ghost_number_cyclic(2, 2).ghost_number);
    const auto v4 = abelian_bounds(grp("V4"));
    CHECK(v4.lower == v4.upper);
    CHECK(c2 <= v4.lower);
}
