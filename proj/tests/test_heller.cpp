#include "oracles.hpp"

using namespace stmod;
using oracle::grp;

TEST_CASE("projective-free split examples")
{
    const auto c4 = grp("C4");
    auto s = split_projective_free(regular_module(c4));
    CHECK(s.free_rank == 1);
    CHECK(s.core.dim() == 0);

    const auto c2 = grp("C2");
    s = split_projective_free(direct_sum(trivial_module(c2), regular_module(c2)));
    CHECK(s.free_rank == 1);
    CHECK(iso_test(s.core, trivial_module(c2)).status == IsoStatus::isomorphic);

    s = split_projective_free(direct_sum(jordan_module(c4, 4), jordan_module(c4, 3)));
    CHECK(s.free_rank == 1);
    CHECK(iso_test(s.core, jordan_module(c4, 3)).status == IsoStatus::isomorphic);
}

TEST_CASE("projective-free split agrees with Higman's criterion")
{
    Rng rng(31);
    for (const auto* name : {"C4", "C9", "V4", "Q8", "C2xC4", "D8"}) {
        const auto g = grp(name);
        for (int t = 0; t < 10; ++t) {
            auto m = random_module(g, 10, rng, false);
            if (t % 3 == 0)
                m = random_basis_change(direct_sum(m, regular_module(g)), rng);
            const auto s = split_projective_free(m);
            CAPTURE(name);
            CHECK(s.core.dim() + s.free_rank * g->order() == m.dim());
            CHECK(is_intertwiner(s.core, m, s.inclusion));
            CHECK(is_intertwiner(m, s.core, s.projection));
            CHECK(s.projection * s.inclusion == FpMatrix::identity(g->p(), s.core.dim()));
            CHECK(oracle::higman_projective(m) == (s.core.dim() == 0));
            CHECK((s.core.dim() == 0 || !oracle::higman_projective(s.core)));
            // A projective-free module is killed by the norm element.
            CHECK(s.core.norm_action().is_zero());
        }
    }
}

TEST_CASE("projective covers and injective hulls")
{
    const auto c4 = grp("C4");
    auto cov = projective_cover(trivial_module(c4));
    CHECK(cov.rank == 1);
    CHECK(rank(cov.map) == 1);

    cov = projective_cover(jordan_module(grp("C8"), 3));
    CHECK(cov.rank == 1);

    const auto v4 = grp("V4");
    cov = projective_cover(direct_sum(trivial_module(v4), trivial_module(v4)));
    CHECK(cov.rank == 2);
    CHECK(cov.cover.dim() == 8);

    Rng rng(32);
    for (const auto* name : {"C9", "V4", "Q8", "C3xC3"}) {
        const auto g = grp(name);
        for (int t = 0; t < 8; ++t) {
            const auto m = random_module(g, 8, rng);
            const auto c = projective_cover(m);
            CHECK(rank(c.map) == m.dim());
            CHECK(is_intertwiner(c.cover, m, c.map));
            CHECK(c.rank == coinvariants_dim(m));
            const auto h = injective_hull(m);
            CHECK(rank(h.embedding) == m.dim());
            CHECK(is_intertwiner(m, h.hull, h.embedding));
            CHECK(h.rank == invariants(m).basis.cols());
        }
    }
}

TEST_CASE("Heller shift examples")
{
    const auto c4 = grp("C4");
    const auto k4 = trivial_module(c4);
    const auto om = heller_shift(k4, 1);
    CHECK(om.dim() == 3);
    CHECK(iso_test(om, jordan_module(c4, 3)).status == IsoStatus::isomorphic);

    for (const auto* name : {"C2", "C3", "C4", "C5", "C7", "C8", "C9"}) {
        const auto g = grp(name);
        const std::size_t n = g->order();
        for (std::size_t i = 1; i < n; ++i)
            CHECK(iso_test(heller_shift(jordan_module(g, i), 1), jordan_module(g, n - i)).status ==
                  IsoStatus::isomorphic);
        CHECK(iso_test(heller_shift(trivial_module(g), 2), trivial_module(g)).status == IsoStatus::isomorphic);
        CHECK(heller_shift(regular_module(g), 1).dim() == 0);
    }

    const auto c8 = grp("C8");
    CHECK(iso_test(jordan_module(c8, 5), heller_shift(jordan_module(c8, 3), 1)).status == IsoStatus::isomorphic);
}

TEST_CASE("Heller shift dimensions of k")
{
    for (const auto* name : {"C2", "C4", "C8", "C16", "V4", "C2xC4", "C2^3", "C4xC4", "C2^4", "C2xC8", "C2^2xC4",
                             "D8", "Q8", "D16", "Q16", "SD16", "M16", "C3", "C9", "C3xC3", "C5", "C7", "C11", "C13"}) {
        CAPTURE(name);
        const auto g = grp(name);
        const TrivialShifts shifts(g, -4, 4);
        for (int i = -4; i <= 4; ++i) {
            const std::size_t d = shifts.at(i).dim();
            const std::size_t expected = i % 2 == 0 ? 1 : g->order() - 1;
            CHECK(d % g->order() == expected % g->order());
        }
    }
    // kV4: dim Omega~^i k = 2|i| + 1.
    const TrivialShifts v4(grp("V4"), -4, 4);
    for (int i = -4; i <= 4; ++i)
        CHECK(v4.at(i).dim() == static_cast<std::size_t>(2 * std::abs(i) + 1));
}

TEST_CASE("Heller shift properties")
{
    Rng rng(33);
    for (const auto* name : {"C4", "C8", "V4", "Q8", "C9", "C3xC3", "D8"}) {
        const auto g = grp(name);
        for (int t = 0; t < 6; ++t) {
            const auto m = random_module(g, 6, rng, false);
            const auto pf = projective_free_part(m);
            const auto up = heller_shift(heller_shift(m, 1), -1);
            const auto down = heller_shift(heller_shift(m, -1), 1);
            CAPTURE(name);
            CHECK(iso_test(up, pf).status == IsoStatus::isomorphic);
            CHECK(iso_test(down, pf).status == IsoStatus::isomorphic);
            const auto om = heller_shift(m, 1);
            CHECK((om.dim() + pf.dim()) % g->order() == 0);
            CHECK(iso_test(dual_module(heller_shift(m, 1)), heller_shift(dual_module(m), -1)).status ==
                  IsoStatus::isomorphic);
        }
    }
}

TEST_CASE("recognising shifts of k")
{
    const auto c4 = grp("C4");
    CHECK(is_heller_of_trivial(trivial_module(c4), 4) == 0);
    CHECK(is_heller_of_trivial(jordan_module(c4, 3), 4) == 1);

    const auto v4 = grp("V4");
    const auto h = make_subgroup(v4, cyclic_subgroup(*v4, v4->generators()[0]).elements);
    CHECK_FALSE(is_heller_of_trivial(induced_module(v4, h), 4));
    for (int i = -3; i <= 3; ++i)
        CHECK(is_heller_of_trivial(heller_shift(trivial_module(v4), i), 4) == i);
}
