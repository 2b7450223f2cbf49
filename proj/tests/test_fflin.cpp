#include "oracles.hpp"

#include "stmod/error.hpp"

using namespace stmod;

TEST_CASE("rref examples")
{
    const auto id = FpMatrix::identity(2, 2);
    const auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);

    const FpMatrix zero(3, 3, 3);
    const auto z = rref(zero);
    CHECK(z.reduced == zero);
    CHECK(z.pivots.empty());
    CHECK(z.rank == 0);

    CHECK(rank(FpMatrix::from_rows(5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve examples")
{
    Rng rng(1);
    const auto b = random_matrix(7, 3, 2, rng);
    const auto x = solve(FpMatrix::identity(7, 3), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(solve(FpMatrix(3, 2, 2), FpMatrix::from_rows(3, {{1}, {0}})));
    CHECK_FALSE(solve(FpMatrix::from_rows(2, {{1, 1}, {0, 0}}), FpMatrix::from_rows(2, {{1}, {1}})));
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(FpMatrix::identity(3, 4)).cols() == 0);
    const auto k = kernel_basis(FpMatrix(5, 3, 3));
    CHECK(k.cols() == 3);
    CHECK(rank(k) == 3);
    const auto one = kernel_basis(FpMatrix::from_rows(2, {{1, 1}}));
    REQUIRE(one.cols() == 1);
    CHECK(one == FpMatrix::from_rows(2, {{1}, {1}}));
}

TEST_CASE("entries are reduced and shapes are checked")
{
    const auto m = FpMatrix::from_rows(5, {{-1, 7}, {10, 3}});
    CHECK(m(0, 0) == 4);
    CHECK(m(0, 1) == 2);
    CHECK(m(1, 0) == 0);
    CHECK_THROWS_AS(FpMatrix::from_rows(5, {{1, 2}, {3}}), InputError);
    CHECK_THROWS(FpMatrix::identity(2, 2) * FpMatrix::identity(2, 3));
    CHECK(inverse_mod(3, 7) == 5);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(15));
}

TEST_CASE("kernel size matches brute-force counting")
{
    Rng rng(2);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 4;
            const auto a = random_matrix(p, rows, cols, rng);
            std::size_t total = 1, solutions = 0;
            for (std::size_t i = 0; i < cols; ++i)
                total *= p;
            for (std::size_t code = 0; code < total; ++code) {
                FpMatrix x(p, cols, 1);
                std::size_t c = code;
                for (std::size_t i = 0; i < cols; ++i, c /= p)
                    x.set(i, 0, static_cast<std::int64_t>(c % p));
                solutions += (a * x).is_zero();
            }
            std::size_t expected = 1;
            for (std::size_t i = 0; i < kernel_basis(a).cols(); ++i)
                expected *= p;
            CHECK(solutions == expected);
        }
    }
}

TEST_CASE("linear algebra properties on random matrices")
{
    Rng rng(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
            auto a = random_matrix(p, rows, cols, rng);
            if (trial % 3 == 0 && rows > 1)  // force dependencies
                for (std::size_t c = 0; c < cols; ++c)
                    a.set(rows - 1, c, a(0, c) * 2);
            const auto k = kernel_basis(a);
            CHECK((a * k).is_zero());
            CHECK(rank(a) + k.cols() == cols);
            CHECK(rank(k) == k.cols());

            const auto r = rref(a);
            CHECK(rref(r.reduced).reduced == r.reduced);
            CHECK(rank(a.transpose()) == rank(a));

            const auto b = random_matrix(p, rows, 2, rng);
            if (const auto x = solve(a, b))
                CHECK(a * *x == b);
            else
                CHECK(rank(FpMatrix::hstack(a, b)) > rank(a));
            const auto reachable = a * random_matrix(p, cols, 2, rng);
            const auto y = solve(a, reachable);
            REQUIRE(y);
            CHECK(a * *y == reachable);

            const auto basis = column_basis(a);
            CHECK(basis.cols() == rank(a));
            CHECK(span_contains(basis, a));
            const auto comp = complement_basis(basis);
            CHECK(rank(FpMatrix::hstack(basis, comp)) == rows);
            const auto ann = annihilator(basis);
            CHECK((ann * a).is_zero());
            CHECK(ann.rows() + rank(a) == rows);
        }
    }
}

TEST_CASE("inverse, left inverse and intersections")
{
    Rng rng(4);
    for (std::uint32_t p : {2u, 3u, 11u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            const auto a = random_invertible(p, n, rng);
            const auto inv = inverse(a);
            REQUIRE(inv);
            CHECK(a * *inv == FpMatrix::identity(p, n));
            CHECK(*inv * a == FpMatrix::identity(p, n));

            const auto tall = FpMatrix::vstack(random_matrix(p, 2, n, rng), a);
            CHECK(left_inverse(tall) * tall == FpMatrix::identity(p, n));

            const auto u = random_matrix(p, 6, 1 + rng() % 4, rng), v = random_matrix(p, 6, 1 + rng() % 4, rng);
            const auto both = intersect_spans(u, v);
            CHECK(span_contains(u, both));
            CHECK(span_contains(v, both));
            CHECK(rank(both) + rank(FpMatrix::hstack(u, v)) == rank(u) + rank(v));
        }
    }
    CHECK_FALSE(inverse(FpMatrix::from_rows(3, {{1, 2}, {2, 4}})));
}

TEST_CASE("vec, unvec and reshape agree")
{
    Rng rng(5);
    const auto a = random_matrix(5, 3, 4, rng);
    CHECK(FpMatrix::unvec(a.vec(), 0, 3, 4) == a);
    CHECK(a.reshaped(4, 3).reshaped(3, 4) == a);
    CHECK_THROWS_AS(a.reshaped(5, 3), InternalError);
}
