#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgd/groebner.hpp"

#include <algorithm>

using namespace dgd;

namespace {

RingRef ring_lex_xy() {
    MonomialOrder ord;
    ord.kind = MonomialOrder::Kind::lex;
    return Ring::poly_ring(Field::Fp(32003), {"x", "y"}, ord);
}

RingRef ring_grevlex(std::vector<std::string> vars) {
    return Ring::poly_ring(Field::Fp(32003), std::move(vars), MonomialOrder{});
}

// brute-force check that every S-polynomial reduces to zero
bool all_spolys_reduce(const std::vector<Poly>& gb) {
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            Expo l = Expo::lcm(gb[i].lead().mon, gb[j].lead().mon);
            Poly s = gb[i].times_monomial(l / gb[i].lead().mon, gb[j].lead().coeff) -
                     gb[j].times_monomial(l / gb[j].lead().mon, gb[i].lead().coeff);
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

bool gb_is_reduced(const std::vector<Poly>& gb) {
    for (size_t i = 0; i < gb.size(); ++i) {
        if (!gb[i].lead().coeff.is_one()) return false;
        for (size_t j = 0; j < gb.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : gb[i].terms())
                if (gb[j].lead().mon.divides(t.mon)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("normal form examples") {
    auto R = ring_grevlex({"x", "y"});
    // membership
    CHECK(normal_form(parse_poly(R, "x^2"), {parse_poly(R, "x")}).is_zero());
    // empty basis
    CHECK(normal_form(parse_poly(R, "x + 1"), {}) == parse_poly(R, "x + 1"));
    // one division step in lex: x mod {x - y, y^2 - 1} -> y
    auto L = ring_lex_xy();
    Poly nf = normal_form(parse_poly(L, "x"), {parse_poly(L, "x - y"), parse_poly(L, "y^2 - 1")});
    CHECK(nf == parse_poly(L, "y"));
}

TEST_CASE("normal form is idempotent and additive") {
    auto R = ring_grevlex({"x", "y", "z"});
    std::vector<Poly> gb = buchberger(
        {parse_poly(R, "x*y - z"), parse_poly(R, "y^2 - 1"), parse_poly(R, "z^3 - x")}, R);
    for (const char* s : {"x^4*y - z*x + 1", "x*y*z - y^2*z^2", "z^5 - y^3 + x"}) {
        Poly f = parse_poly(R, s);
        Poly n = normal_form(f, gb);
        CHECK(normal_form(n, gb) == n);
        Poly g = parse_poly(R, "x^2 - y*z");
        CHECK(normal_form(f + g, gb) == normal_form(normal_form(f, gb) + normal_form(g, gb), gb));
    }
}

TEST_CASE("membership agrees with cofactor reconstruction") {
    auto R = ring_grevlex({"x", "y"});
    std::vector<Poly> gens = {parse_poly(R, "x^2 - y"), parse_poly(R, "x*y - 1")};
    auto gb = buchberger(gens, R);
    Poly f = gens[0] * parse_poly(R, "y^2 - x") + gens[1] * parse_poly(R, "x + y");
    std::vector<Poly> q;
    Poly r = divide_poly(f, gb, &q);
    CHECK(r.is_zero());
    Poly rebuilt(R);
    for (size_t i = 0; i < gb.size(); ++i) rebuilt = rebuilt + q[i] * gb[i];
    CHECK(rebuilt == f);
}

TEST_CASE("buchberger trivial examples") {
    auto R = ring_lex_xy();
    auto gb1 = buchberger({parse_poly(R, "x"), parse_poly(R, "y")}, R);
    CHECK(gb1.size() == 2);
    CHECK(gb1[0] == parse_poly(R, "x"));
    CHECK(gb1[1] == parse_poly(R, "y"));
    auto gb2 = buchberger({parse_poly(R, "x^2")}, R);
    REQUIRE(gb2.size() == 1);
    CHECK(gb2[0] == parse_poly(R, "x^2"));
}

TEST_CASE("buchberger lex example {xy-1, y^2-1} -> {x-y, y^2-1}") {
    auto R = ring_lex_xy();
    auto gb = buchberger({parse_poly(R, "x*y - 1"), parse_poly(R, "y^2 - 1")}, R);
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == parse_poly(R, "x - y"));
    CHECK(gb[1] == parse_poly(R, "y^2 - 1"));
    CHECK(all_spolys_reduce(gb));
    CHECK(gb_is_reduced(gb));
}

TEST_CASE("reduced GB is canonical under generator permutation") {
    auto R = ring_grevlex({"x", "y", "z"});
    std::vector<Poly> gens = {parse_poly(R, "x^2 + y*z"), parse_poly(R, "x*z - y"),
                              parse_poly(R, "y^3 - z^2")};
    auto gb0 = buchberger(gens, R);
    std::vector<int> perm = {0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<Poly> shuffled;
        for (int i : perm) shuffled.push_back(gens[(size_t)i]);
        auto gb = buchberger(shuffled, R);
        REQUIRE(gb.size() == gb0.size());
        for (size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == gb0[i]);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("ideal equality with input and reducedness on a small suite") {
    auto R3 = ring_grevlex({"x", "y", "z"});
    std::vector<std::vector<Poly>> suite = {
        {parse_poly(R3, "x + y + z"), parse_poly(R3, "x*y + y*z + z*x"), parse_poly(R3, "x*y*z - 1")},
        {parse_poly(R3, "x^2 - y"), parse_poly(R3, "y^2 - z")},
        {parse_poly(R3, "x^3 - 2*x*y"), parse_poly(R3, "x^2*y - 2*y^2 + x")},
    };
    for (auto& gens : suite) {
        auto gb = buchberger(gens, R3);
        CHECK(all_spolys_reduce(gb));
        CHECK(gb_is_reduced(gb));
        for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
    }
}

TEST_CASE("module GB and syzygy-style reduction in a free module") {
    auto R = ring_grevlex({"x", "y"});
    FreeVec a(R, 2), b(R, 2);
    a.comps[0] = parse_poly(R, "x");
    a.comps[1] = parse_poly(R, "y");
    b.comps[0] = parse_poly(R, "y");
    b.comps[1] = parse_poly(R, "x");
    auto gb = buchberger_module({a, b}, R, 2, ModuleOrder{});
    CHECK(!gb.empty());
    // membership: x*a + y*b reduces to zero
    FreeVec v = a.times(parse_poly(R, "x")) + b.times(parse_poly(R, "y"));
    CHECK(normal_form(v, gb, ModuleOrder{}).is_zero());
    // non-member
    FreeVec e0 = FreeVec::basis(R, 2, 0);
    CHECK(!normal_form(e0, gb, ModuleOrder{}).is_zero());
}
