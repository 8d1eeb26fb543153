#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgd/cohomology.hpp"

using namespace dgd;

namespace {

RingRef R_x() { return Ring::poly_ring(Field::Fp(32003), {"x"}, MonomialOrder{}); }

// the Koszul complex K(A; f) as a semi-free module over A: gens u (deg 0),
// v (deg -1), d(v) = f u
SemiFreeDGMod koszul_module(const DGRingRef& A, const Poly& f) {
    SemiFreeDGMod m = SemiFreeDGMod::free_module(A, {{"u", 0}, {"v", -1}});
    m.set_entry(0, 1, DGElem::from_poly(A, f));
    validate_semifree(m);
    return m;
}

} // namespace

TEST_CASE("cohomology of the koszul complex over k[x]") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    // H^0 = k[x]/(x), H^-1 = 0
    ModulePres h0 = cohomology(K, 0);
    CHECK(k_dimension(h0) == 1);
    ModulePres hm1 = cohomology(K, -1);
    CHECK(hm1.is_zero_module());
    CHECK(fingerprint(K, -2, 1).to_string() == "{H^0: dim 1}");
}

TEST_CASE("zero differential: H^-1 of K(k[x]; 0) is free of rank 1") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod K = koszul_module(A, Poly(R));
    ModulePres hm1 = cohomology(K, -1);
    CHECK(k_dimension(hm1) == -1);
    FpEntry e = fingerprint_entry(hm1);
    CHECK(!e.finite);
    CHECK(e.mingens == 1);
    CHECK(e.ann.empty());
}

TEST_CASE("cohomology of the DG ring itself") {
    auto R = R_x();
    auto A = DGRing::koszul(R, {parse_poly(R, "x")});
    SemiFreeDGMod unit = SemiFreeDGMod::unit(A);
    CHECK(fingerprint(unit, -2, 0).to_string() == "{H^0: dim 1}");
}

TEST_CASE("shift moves cohomology and keeps d^2 = 0") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    SemiFreeDGMod K1 = shift(K, 1);
    validate_semifree(K1);
    CHECK(fingerprint(K1, -3, 2).entries.at(-1).dim == 1);
    SemiFreeDGMod K0 = shift(K, 0);
    CHECK(fingerprint(K0, -1, 1).agrees_on(fingerprint(K, -1, 1), -1, 1));
}

TEST_CASE("cone of the identity is contractible; cone of x is K(x)") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod unit = SemiFreeDGMod::unit(A);
    SemiFreeDGMod c_id = cone(scalar_map(unit, parse_poly(R, "1")));
    CHECK(fingerprint(c_id, -3, 3).is_zero());
    SemiFreeDGMod c_x = cone(scalar_map(unit, parse_poly(R, "x")));
    CHECK(fingerprint(c_x, -2, 2).to_string() == "{H^0: dim 1}");
}

TEST_CASE("not a chain map is rejected") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    // a degree-0 "map" K -> K sending u -> u, v -> 0 does not chain-commute
    ChainMap phi;
    phi.src = &K;
    phi.tgt = &K;
    phi.cols.resize(2);
    phi.cols[0].push_back({0, DGElem::one(A)});
    CHECK_THROWS_AS(cone(phi), Error);
}

TEST_CASE("hom complex: Hom(A, N) = N and Hom(K(x), A) = K(x)[-1]") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod unit = SemiFreeDGMod::unit(A);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    SemiFreeDGMod h1 = hom_complex(unit, K);
    CHECK(fingerprint(h1, -2, 2).agrees_on(fingerprint(K, -2, 2), -2, 2));
    SemiFreeDGMod h2 = hom_complex(K, unit);
    // K(x)[-1] has H^1 = k
    CHECK(fingerprint(h2, -2, 2).to_string() == "{H^1: dim 1}");
    // shift adjunction: Hom(A[n], N) = N[-n], so H^n(Hom) = H^0(N)
    SemiFreeDGMod h3 = hom_complex(shift(unit, 2), K);
    CHECK(fingerprint(h3, 0, 4).entries.at(2).dim == 1);
}

TEST_CASE("tensor complex: unit, Tor, and symmetry") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod unit = SemiFreeDGMod::unit(A);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    CHECK(fingerprint(tensor_complex(unit, K), -2, 1).agrees_on(fingerprint(K, -2, 1), -2, 1));
    SemiFreeDGMod KK = tensor_complex(K, K);
    // Tor_{k[x]}(k, k): H^0 = k, H^-1 = k
    auto fp = fingerprint(KK, -3, 1);
    CHECK(fp.entries.at(0).dim == 1);
    CHECK(fp.entries.at(-1).dim == 1);
    CHECK(fp.entries.at(-2).dim == 0);
    CHECK(fingerprint(tensor_complex(K, KK), -3, 1)
              .agrees_on(fingerprint(tensor_complex(KK, K), -3, 1), -3, 1));
}

TEST_CASE("hom tensor adjunction at fingerprint level") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    SemiFreeDGMod P = shift(koszul_module(A, parse_poly(R, "x^2")), -1);
    SemiFreeDGMod N = koszul_module(A, parse_poly(R, "x^3"));
    SemiFreeDGMod lhs = hom_complex(tensor_complex(K, P), N);
    SemiFreeDGMod rhs = hom_complex(K, hom_complex(P, N));
    CHECK(fingerprint(lhs, -3, 3).agrees_on(fingerprint(rhs, -3, 3), -3, 3));
}

TEST_CASE("base change of the koszul complex to k[x]/(x^2)") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    auto B0 = Ring::quotient(R, {parse_poly(R, "x^2")});
    auto B = DGRing::of_ring(B0);
    DGRingMap f(A, B, {parse_poly(B0, "x")}, {});
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    SemiFreeDGMod KB = base_change_module(K, f);
    auto fp = fingerprint(KB, -2, 1);
    CHECK(fp.entries.at(0).dim == 1);
    CHECK(fp.entries.at(-1).dim == 1);
    // base change along the identity is the identity
    SemiFreeDGMod KA = base_change_module(K, DGRingMap::identity(A));
    CHECK(fingerprint(KA, -2, 1).agrees_on(fingerprint(K, -2, 1), -2, 1));
}

TEST_CASE("restriction preserves k-dimensions") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    auto B0 = Ring::quotient(R, {parse_poly(R, "x")});
    auto B = DGRing::of_ring(B0);
    DGRingMap f(A, B, {parse_poly(B0, "x")}, {});
    SemiFreeDGMod unitB = SemiFreeDGMod::unit(B);
    CohFingerprint through = fingerprint_through(unitB, f, -1, 1);
    CHECK(through.entries.at(0).finite);
    CHECK(through.entries.at(0).dim == 1);
}

TEST_CASE("restricted fingerprints carry source-side annihilators") {
    // H = k[x,y]/(x - y) over k[x,y], restricted along x -> x: free rank 1
    auto Rxy = Ring::poly_ring(Field::Fp(32003), {"x", "y"}, MonomialOrder{});
    auto T = DGRing::of_ring(Rxy);
    auto A = DGRing::of_ring(R_x());
    DGRingMap inc(A, T, {parse_poly(Rxy, "x")}, {});
    SemiFreeDGMod diag = SemiFreeDGMod::free_module(T, {{"u", 0}});
    // relation (x - y) u via a cone: simpler as a one-relation module target:
    SemiFreeDGMod two = SemiFreeDGMod::free_module(T, {{"u", 0}, {"w", -1}});
    two.set_entry(0, 1, DGElem::from_poly(T, parse_poly(Rxy, "x - y")));
    validate_semifree(two);
    CohFingerprint through = fingerprint_through(two, inc, -1, 0);
    const FpEntry& e = through.entries.at(0);
    CHECK(!e.finite);
    CHECK(e.mingens == 1);
    CHECK(e.ann.empty()); // x acts freely on k[x,y]/(x-y) viewed over k[x]
    (void)diag;
}

TEST_CASE("external tensor over the base field") {
    auto R = R_x();
    auto A = DGRing::of_ring(R);
    DGTensor t = tensor_dgrings(A, A);
    SemiFreeDGMod K = koszul_module(A, parse_poly(R, "x"));
    SemiFreeDGMod KK = external_tensor(K, K, t.inc_left, t.inc_right);
    validate_semifree(KK);
    // K(x) (x)_k K(x) over k[x,x_2] is the Koszul complex on (x, x_2)
    auto fp = fingerprint(KK, -3, 1);
    CHECK(fp.entries.at(0).dim == 1);
    CHECK(fp.entries.at(-1).dim == 0);
    CHECK(fp.entries.at(-2).dim == 0);
}
