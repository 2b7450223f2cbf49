#include "oracles.hpp"

#include "stmod/error.hpp"

using namespace stmod;
using oracle::grp;

namespace {

std::vector<GroupSpec> abelian_groups_up_to(std::uint32_t max_order)
{
    std::vector<GroupSpec> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        // Factor lists with non-decreasing prime powers, product <= max_order.
        std::vector<std::vector<std::uint32_t>> stack{{}};
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            std::uint32_t prod = 1;
            for (auto f : cur)
                prod *= f;
            if (!cur.empty())
                out.push_back(GroupSpec::abelian(p, cur));
            for (std::uint32_t f = cur.empty() ? p : cur.back(); prod * f <= max_order; f *= p) {
                auto next = cur;
                next.push_back(f);
                stack.push_back(next);
            }
        }
    }
    return out;
}

std::vector<GroupSpec> two_generator_families(std::uint32_t max_n)
{
    std::vector<GroupSpec> out;
    for (std::uint32_t n = 3; n <= max_n; ++n)
        for (auto s : {GroupSpec::quaternion(n), GroupSpec::dihedral(n), GroupSpec::semidihedral(n),
                       GroupSpec::modular(n)})
            out.push_back(s);
    return out;
}

std::size_t involutions(const Group& g)
{
    std::size_t n = 0;
    for (std::size_t a = 1; a < g.order(); ++a)
        n += g.element_order(a) == 2;
    return n;
}

}  // namespace

TEST_CASE("group construction examples")
{
    const auto c4 = grp("C4");
    CHECK(c4->order() == 4);
    CHECK(c4->generators().size() == 1);
    const auto v4 = grp("V4");
    CHECK(v4->order() == 4);
    CHECK(v4->generators().size() == 2);
    CHECK(v4->name() == "C2xC2");

    const auto q8 = grp("Q8");
    REQUIRE(q8->order() == 8);
    const std::size_t x = q8->generators()[0], y = q8->generators()[1];
    CHECK(q8->power(x, 4) == 0);
    CHECK(q8->power(y, 2) == q8->power(x, 2));
    CHECK(q8->mul(q8->mul(y, x), q8->inv(y)) == q8->inv(x));
    CHECK(q8->element_order(x) == 4);
}

TEST_CASE("parsing and names")
{
    for (const auto* name : {"C2", "C9", "C2xC4", "C3xC3", "Q8", "D16", "SD16", "M16", "Q32", "C2xC2xC2"})
        CHECK(GroupSpec::parse(name).name() == name);
    CHECK(GroupSpec::parse("C2^3").name() == "C2xC2xC2");
    CHECK(GroupSpec::parse("C2^2xC4").name() == "C2xC2xC4");
    CHECK(GroupSpec::parse("C4xC2") == GroupSpec::parse("C2xC4"));
    for (const auto* bad : {"C6", "C1", "Q4", "D2", "C2xC3", "X8", "", "C"})
        CHECK_THROWS_AS(GroupSpec::parse(bad), InputError);
}

TEST_CASE("centers")
{
    for (const auto* name : {"C8", "C2xC4", "C3xC3"}) {
        const auto g = grp(name);
        CHECK(center(*g).size() == g->order());
        CHECK(g->is_abelian());
    }
    for (const auto* name : {"Q8", "D8"}) {
        const auto g = grp(name);
        CHECK_FALSE(g->is_abelian());
        CHECK(center(*g) == std::vector<std::size_t>{0, g->power(g->generators()[0], 2)});
    }
}

TEST_CASE("family tables have the right involution counts")
{
    for (std::uint32_t n = 3; n <= 6; ++n) {
        const std::size_t half = std::size_t{1} << (n - 1);
        CHECK(involutions(*build_group(GroupSpec::quaternion(n))) == 1);
        CHECK(involutions(*build_group(GroupSpec::dihedral(n))) == half + 1);
        if (n >= 4) {
            CHECK(involutions(*build_group(GroupSpec::semidihedral(n))) == half / 2 + 1);
            CHECK(involutions(*build_group(GroupSpec::modular(n))) == 3);
        }
    }
}

TEST_CASE("relations hold in every table")
{
    auto specs = two_generator_families(6);
    for (const auto& s : abelian_groups_up_to(64))
        specs.push_back(s);
    for (const auto& s : specs) {
        const auto g = build_group(s);
        CHECK(g->order() == s.order());
        for (const auto& rel : g->relations())
            CHECK(g->evaluate(rel.lhs) == g->evaluate(rel.rhs));
        CHECK(generated_subgroup(*g, g->generators()).size() == g->order());
        for (std::size_t a = 0; a < g->order(); ++a) {
            CHECK(g->order() % g->element_order(a) == 0);
            CHECK(g->evaluate(g->word_for(a)) == a);
        }
    }
}

TEST_CASE("cyclic subgroups and transversals")
{
    const auto c4 = grp("C4");
    auto h = cyclic_subgroup(*c4, 2);
    CHECK(h.elements.size() == 2);
    CHECK(h.transversal.size() == 2);

    const auto v4 = grp("V4");
    const std::size_t a = v4->generators()[0], b = v4->generators()[1];
    h = cyclic_subgroup(*v4, a);
    CHECK(h.elements == std::vector<std::size_t>{0, a});
    CHECK(h.transversal == std::vector<std::size_t>{0, b});

    const auto q8 = grp("Q8");
    h = cyclic_subgroup(*q8, q8->generators()[0]);
    CHECK(h.elements.size() == 4);
    CHECK(h.transversal == std::vector<std::size_t>{0, q8->generators()[1]});
    CHECK(is_normal(*q8, h.elements));

    const auto sub = make_subgroup(q8, h.elements);
    CHECK(sub.group->order() == 4);
    for (std::size_t e = 0; e < sub.group->order(); ++e)
        CHECK(sub.restrict(sub.embedding[e]) == e);
}

TEST_CASE("dimension subgroup examples")
{
    const auto e8 = grp("C2^3");
    auto chain = jennings_chain(*e8, 2);
    CHECK(chain.exponents == std::vector<std::uint32_t>{3});
    CHECK(chain.subgroups.front().size() == 8);
    CHECK(chain.subgroups.back() == std::vector<std::size_t>{0});

    const auto c4 = grp("C4");
    chain = jennings_chain(*c4, 2);
    CHECK(chain.exponents == std::vector<std::uint32_t>{1, 1});
    CHECK(chain.subgroups[1] == std::vector<std::size_t>{0, 2});

    chain = jennings_chain(*grp("Q8"), 2);
    CHECK(chain.exponents == std::vector<std::uint32_t>{2, 1});
}

TEST_CASE("nilpotency index examples")
{
    CHECK(nilpotency_index(grp("Q8"), 2) == 5);
    for (std::uint32_t l = 1; l <= 5; ++l)
        CHECK(nilpotency_index(build_group(GroupSpec::abelian(2, std::vector<std::uint32_t>(l, 2))), 2) == l + 1);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u})
        CHECK(nilpotency_index(build_group(GroupSpec::cyclic(q)), build_group(GroupSpec::cyclic(q))->p()) == q);
    for (const auto* name : {"D16", "SD16", "M16"})
        CHECK(nilpotency_index(grp(name), 2) == 9);
}

TEST_CASE("abelian nilpotency formula up to order 81")
{
    for (const auto& s : abelian_groups_up_to(81)) {
        std::size_t m = 1;
        for (auto f : s.factors)
            m += f - 1;
        CAPTURE(s.name());
        CHECK(nilpotency_index(build_group(s), s.p) == m);
    }
}

TEST_CASE("dimension subgroups agree with the definition up to order 32")
{
    auto specs = two_generator_families(5);
    for (const auto& s : abelian_groups_up_to(32))
        specs.push_back(s);
    for (const auto& s : specs) {
        CAPTURE(s.name());
        const auto g = build_group(s);
        const auto oracle_chain = oracle::dimension_subgroups(g);
        const auto chain = jennings_chain(*g, g->p());
        const auto direct = dimension_subgroups_direct(g);
        // The oracle lists F_1..F_m; the chain stops at the first trivial term.
        for (std::size_t i = 0; i < chain.subgroups.size(); ++i) {
            REQUIRE(i < oracle_chain.size());
            CHECK(chain.subgroups[i] == oracle_chain[i]);
        }
        CHECK(direct.subgroups == chain.subgroups);
        CHECK(chain.nilpotency_index(g->p()) == oracle::radical_powers_pairwise(g).size() - 1);
    }
}
