#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <e6ag/linalg.hpp>
#include <e6ag/rng.hpp>

using namespace e6ag;

TEST_CASE("rationals: canonical form and round trip") {
    Rat a(2, -4);
    CHECK(a == Rat(-1, 2));
    CHECK(a.str() == "-1/2");
    CHECK(Rat(6, 3).str() == "2/1");
    CHECK(*Rat::parse("-1/2") == a);
    CHECK(*Rat::parse("7/1") == Rat(7));
    CHECK(!Rat::parse("1/0").has_value());
    CHECK(!Rat::parse("x").has_value());
    SmallRng rng(3);
    for (int t = 0; t < 50; ++t) {
        const Rat r(rng.small_int() * 97 + rng.small_int(), rng.small_int() * 13 + 1);
        CHECK(*Rat::parse(r.str()) == r);
    }
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("gaussian rationals: arithmetic and text form") {
    const GaussRat i = GaussRat::i();
    CHECK(i * i == -GaussRat::one());
    const GaussRat z(Rat(1, 2), Rat(-3, 4));
    CHECK(z.str() == "1/2+-3/4*i");
    CHECK(*GaussRat::parse(z.str()) == z);
    CHECK(z * z.inv() == GaussRat::one());
    CHECK((z / z) == GaussRat::one());
}

TEST_CASE("prime field: modulus contract") {
    CHECK_THROWS_AS(FpContext(13), std::invalid_argument);   // excluded characteristic
    CHECK_THROWS_AS(FpContext(15), std::invalid_argument);   // composite
    CHECK_THROWS_AS(FpContext(10008), std::invalid_argument);
    FpContext ctx(10007);
    const Fp x = Fp::of(-3);
    CHECK(x.residue() == 10004);
    CHECK(x * x.inv() == Fp::one());
    CHECK(Fp::ratio(1, 2) + Fp::ratio(1, 2) == Fp::one());
    CHECK(*Fp::parse("10010") == Fp::of(3));
    {
        FpContext inner(17);
        CHECK(Fp::of(20).residue() == 3);
    }
    CHECK(Fp::modulus() == 10007);  // restored
    // sqrt: 10007 = 3 mod 4, so -1 is a non-residue
    CHECK(!(-Fp::one()).sqrt().has_value());
    FpContext c2(10009);
    auto r = (-Fp::one()).sqrt();
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == -Fp::one());
}

TEST_CASE("rank_and_basis: spec examples") {
    SUBCASE("identity rows") {
        std::vector<std::vector<Rat>> rows(27, std::vector<Rat>(27, Rat()));
        for (int i = 0; i < 27; ++i) rows[i][i] = Rat(1);
        CHECK(rank_and_basis(rows).rank == 27);
    }
    SUBCASE("all-zero set") {
        std::vector<std::vector<Rat>> rows(4, std::vector<Rat>(5, Rat()));
        CHECK(rank_and_basis(rows).rank == 0);
    }
    SUBCASE("proportional rows") {
        std::vector<std::vector<Rat>> rows = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
        const auto rr = rank_and_basis(rows);
        CHECK(rr.rank == 1);
        CHECK(rr.pivot_rows == std::vector<std::size_t>{0});
    }
    SUBCASE("ragged input rejected") {
        std::vector<std::vector<Rat>> rows = {{Rat(1), Rat(2)}, {Rat(2)}};
        CHECK_THROWS_AS(rank_and_basis(rows), std::invalid_argument);
    }
}

TEST_CASE("rank: fraction-free vs plain elimination oracle over F_p") {
    FpContext ctx(10007);
    SmallRng rng(11);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 3 + rng.nonneg(5), m = 3 + rng.nonneg(5);
        std::vector<std::vector<Fp>> a(n, std::vector<Fp>(m));
        for (auto& row : a)
            for (auto& x : row) x = Fp::of(rng.small_int());
        auto a1 = a;
        auto a2 = a;
        const auto plain = plain_rank_inplace(a1);
        const auto ff = bareiss_rank(a2);  // divexact is field division here
        CHECK(plain.rank == ff.rank);
        CHECK(plain.pivot_rows == ff.pivot_rows);
    }
}

TEST_CASE("rank is invariant under row permutation") {
    SmallRng rng(5);
    FpContext ctx(10007);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Fp>> a(6, std::vector<Fp>(8));
        for (auto& row : a)
            for (auto& x : row) x = Fp::of(rng.small_int());
        auto b = a;
        std::swap(b[0], b[3]);
        std::swap(b[1], b[5]);
        CHECK(rank_and_basis(a).rank == rank_and_basis(b).rank);
    }
}

TEST_CASE("solve_in_span: spec examples") {
    std::vector<std::vector<Rat>> basis = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    auto c = solve_in_span(basis, {Rat(3), Rat(5)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rat(3));
    CHECK((*c)[1] == Rat(5));
    std::vector<std::vector<Rat>> one = {{Rat(1), Rat(1)}};
    CHECK(!solve_in_span(one, {Rat(1), Rat(2)}).has_value());
    SpanSolver<Rat> s(basis);
    CHECK_THROWS_AS(s.solve({Rat(1)}), std::invalid_argument);
    // dependent basis rejected
    std::vector<std::vector<Rat>> dep = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(SpanSolver<Rat>(dep), std::invalid_argument);
}

TEST_CASE("solve coefficients reproduce the target exactly") {
    SmallRng rng(17);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Rat>> basis;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rat> row(6);
            for (auto& x : row) x = Rat(rng.small_int(), 1 + std::abs(rng.small_int()) % 3 + 1);
            basis.push_back(std::move(row));
        }
        if (rank_and_basis(basis).rank != 4) continue;
        std::vector<Rat> target(6, Rat());
        std::vector<Rat> lam(4);
        for (int i = 0; i < 4; ++i) lam[i] = Rat(rng.small_int());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) target[j] += lam[i] * basis[i][j];
        auto c = solve_in_span(basis, target);
        REQUIRE(c.has_value());
        CHECK(*c == lam);
    }
}

TEST_CASE("gaussian-rational rank through Z[i] fraction-free elimination") {
    const GaussRat i = GaussRat::i();
    std::vector<std::vector<GaussRat>> rows = {
        {i, GaussRat::one(), GaussRat::zero()},
        {GaussRat::one(), -i, GaussRat::zero()},   // = -i * row 0
        {GaussRat::zero(), GaussRat::one(), GaussRat(Rat(1, 2), Rat(1, 3))}};
    const auto rr = rank_and_basis(rows);
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_rows == std::vector<std::size_t>{0, 2});
}
