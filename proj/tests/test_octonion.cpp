#include <doctest.h>

#include <e6ag/octonion.hpp>
#include <e6ag/rng.hpp>

using namespace e6ag;

TEST_CASE("octonion unit and basis squares") {
    using O = Octonion<Rat>;
    SmallRng rng(2);
    for (int t = 0; t < 10; ++t) {
        const auto x = rng.octonion<Rat>();
        CHECK(oct_mul(O::unit(), x) == x);
        CHECK(oct_mul(x, O::unit()) == x);
    }
    CHECK(oct_mul(O::basis(1), O::basis(1)) == -Rat(1) * O::unit());
    CHECK(oct_mul(O::basis(1), O::basis(2)) == O::basis(3));
    // anti-commutation off the diagonal
    CHECK(oct_mul(O::basis(2), O::basis(1)) == -Rat(1) * O::basis(3));
}

TEST_CASE("composition law exhaustively on basis pairs and randomly") {
    using O = Octonion<Rat>;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const auto p = oct_mul(O::basis(i), O::basis(j));
            CHECK(oct_norm(p) == Rat(1));
        }
    SmallRng rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto x = rng.octonion<Rat>(), y = rng.octonion<Rat>();
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
    }
}

TEST_CASE("alternativity and the standard involution") {
    SmallRng rng(6);
    using O = Octonion<GaussRat>;
    for (int t = 0; t < 40; ++t) {
        const auto x = rng.octonion<GaussRat>(), y = rng.octonion<GaussRat>();
        CHECK(oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y));
        CHECK(oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)));
        CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
        const GaussRat tr = oct_bilinear(x, O::unit());
        CHECK(x + oct_conj(x) == tr * O::unit());
        CHECK(oct_mul(x, oct_conj(x)) == oct_norm(x) * O::unit());
        const auto z = rng.octonion<GaussRat>();
        CHECK(oct_bilinear(oct_mul(x, y), oct_mul(x, z)) == oct_norm(x) * oct_bilinear(y, z));
    }
}

TEST_CASE("bilinear form anchors") {
    using O = Octonion<Rat>;
    CHECK(oct_norm(O::unit()) == Rat(1));
    CHECK(oct_conj(O::basis(1)) == -Rat(1) * O::basis(1));
    CHECK(oct_bilinear(O::basis(1), O::basis(1)) == Rat(2));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(oct_bilinear(O::basis(i), O::basis(j)) == (i == j ? Rat(2) : Rat(0)));
}

TEST_CASE("isotropy") {
    using OQ = Octonion<Rat>;
    CHECK(!is_isotropic(OQ::basis(1)));
    CHECK(is_isotropic(OQ::zero()));
    using OG = Octonion<GaussRat>;
    OG a;
    a.c[1] = GaussRat::one();
    a.c[2] = GaussRat::i();
    CHECK(is_isotropic(a));
    CHECK(oct_mul(a, a).is_zero());
    SmallRng rng(9);
    for (int t = 0; t < 10; ++t) {
        auto s = rng.isotropic_octonion<GaussRat>();
        REQUIRE(s.has_value());
        CHECK(is_isotropic(*s));
    }
    // F_p sampler works regardless of p mod 4
    FpContext ctx(10007);
    for (int t = 0; t < 10; ++t) {
        auto s = rng.isotropic_octonion<Fp>();
        REQUIRE(s.has_value());
        CHECK(is_isotropic(*s));
        CHECK(oct_mul(*s, *s).is_zero());
    }
    CHECK(!rng.isotropic_octonion<Rat>().has_value());
}
