#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgd/poly.hpp"
#include "dgd/groebner.hpp"

using namespace dgd;

namespace {

RingRef kxy(MonomialOrder::Kind kind = MonomialOrder::Kind::grevlex) {
    MonomialOrder ord;
    ord.kind = kind;
    return Ring::poly_ring(Field::Fp(32003), {"x", "y"}, ord);
}

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

Expo rand_mono(Rng& rng, int nv, int maxdeg) {
    Expo e;
    for (int i = 0; i < nv; ++i) e.e[(size_t)i] = (uint16_t)(rng.next() % (uint64_t)(maxdeg + 1));
    return e;
}

} // namespace

TEST_CASE("parser round trip") {
    auto R = kxy();
    Poly p = parse_poly(R, "3*x^2*y - y + 1");
    CHECK(p.to_string() == "3*x^2*y - y + 1");
    CHECK(parse_poly(R, p.to_string()) == p);
    CHECK(parse_poly(R, "x - x").is_zero());
    CHECK(parse_poly(R, "(x + y)^2") == parse_poly(R, "x^2 + 2*x*y + y^2"));
    CHECK_THROWS_AS(parse_poly(R, "x + z"), Error);
}

TEST_CASE("rational coefficients parse in Fp via inverse") {
    auto R = kxy();
    Poly p = parse_poly(R, "1/2*x");
    Poly two_p = p + p;
    CHECK(two_p == parse_poly(R, "x"));
}

TEST_CASE("monomial orders are total, multiplicative, with 1 minimal") {
    Rng rng(5);
    for (auto kind : {MonomialOrder::Kind::lex, MonomialOrder::Kind::grlex,
                      MonomialOrder::Kind::grevlex}) {
        MonomialOrder ord;
        ord.kind = kind;
        int nv = 3;
        for (int it = 0; it < 500; ++it) {
            Expo a = rand_mono(rng, nv, 6), b = rand_mono(rng, nv, 6), c = rand_mono(rng, nv, 6);
            int ab = ord.compare(a, b, nv);
            CHECK(ab == -ord.compare(b, a, nv));
            if (!(a == b)) CHECK(ab != 0);
            if (ab < 0) CHECK(ord.compare(a * c, b * c, nv) < 0); // multiplicative
            Expo one;
            if (!(a == one)) CHECK(ord.compare(one, a, nv) < 0); // 1 minimal
        }
    }
}

TEST_CASE("elimination block order dominates") {
    MonomialOrder ord;
    ord.kind = MonomialOrder::Kind::grevlex;
    ord.n_elim = 1;
    // any power of x beats any monomial in y alone
    Expo x = Expo::var(0), y5 = Expo::var(1, 5);
    CHECK(ord.compare(x, y5, 2) > 0);
}

TEST_CASE("grevlex vs lex disagree as expected") {
    // x^2 vs x*y^2: lex says x^2 > x*y^2 is false (x^2 has higher x-power)
    MonomialOrder lex;
    lex.kind = MonomialOrder::Kind::lex;
    MonomialOrder grevlex;
    Expo x2 = Expo::var(0, 2);
    Expo xy2 = Expo::var(0) * Expo::var(1, 2);
    CHECK(lex.compare(x2, xy2, 2) > 0);      // lex: compares x power first
    CHECK(grevlex.compare(x2, xy2, 2) < 0);  // grevlex: total degree first
}

TEST_CASE("poly arithmetic is a commutative ring") {
    auto R = kxy();
    Rng rng(11);
    auto rand_poly = [&](int terms) {
        Poly p(R);
        for (int t = 0; t < terms; ++t) {
            p = p + Poly::monomial(R, rand_mono(rng, 2, 4),
                                   FieldElem::of_int(R->field(), (long long)(rng.next() % 7) - 3));
        }
        return p;
    };
    for (int it = 0; it < 200; ++it) {
        Poly a = rand_poly(3), b = rand_poly(3), c = rand_poly(2);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("quotient ring arithmetic uses normal-form representatives") {
    auto R = kxy();
    auto B = Ring::quotient(R, {parse_poly(R, "x^2")});
    Poly x = parse_poly(B, "x");
    CHECK((x * x).is_zero());
    Poly p = parse_poly(B, "x^2 + x");
    CHECK(p == parse_poly(B, "x"));
}

TEST_CASE("16 variable cap enforced") {
    std::vector<std::string> vars;
    for (int i = 0; i < 17; ++i) vars.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(Ring::poly_ring(Field::Fp(5), vars, MonomialOrder{}), Error);
}
