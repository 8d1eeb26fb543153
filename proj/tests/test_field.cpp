#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgd/field.hpp"

using namespace dgd;

namespace {
// deterministic splitmix64
struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long long small(long long lo, long long hi) {
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};
} // namespace

TEST_CASE("bigint arithmetic against int64 oracle") {
    Rng rng(42);
    for (int it = 0; it < 2000; ++it) {
        long long a = rng.small(-1000000, 1000000);
        long long b = rng.small(-1000000, 1000000);
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        CHECK((A * B).to_int64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_int64() == a / b);
            CHECK((A % B).to_int64() == a % b);
        }
        CHECK((A < B) == (a < b));
    }
}

TEST_CASE("bigint multi-limb division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321098765");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)).to_int64() == 12);
}

TEST_CASE("primality validation at field construction") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(32003));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(32001));
    CHECK(is_prime_u64(2147483647ULL));
    CHECK(!is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
    CHECK_THROWS_AS((void)Field::Fp(4), Error);
}

TEST_CASE("field_inv examples") {
    auto F5 = Field::Fp(5);
    CHECK(FieldElem::of_int(F5, 2).inv() == FieldElem::of_int(F5, 3));
    auto Fp = Field::Fp(32003);
    CHECK(FieldElem::one(Fp).inv() == FieldElem::one(Fp));
    auto Q = Field::Q();
    CHECK(FieldElem::of_fraction(Q, BigInt(3), BigInt(4)).inv() ==
          FieldElem::of_fraction(Q, BigInt(4), BigInt(3)));
    CHECK_THROWS_AS(FieldElem::zero(Fp).inv(), Error);
}

TEST_CASE("field_arith examples") {
    auto F5 = Field::Fp(5);
    CHECK(FieldElem::of_int(F5, 2) + FieldElem::of_int(F5, 4) == FieldElem::of_int(F5, 1));
    CHECK((FieldElem::of_int(F5, 3) * FieldElem::zero(F5)).is_zero());
    auto Q = Field::Q();
    CHECK(FieldElem::of_fraction(Q, BigInt(1), BigInt(2)) +
              FieldElem::of_fraction(Q, BigInt(1), BigInt(3)) ==
          FieldElem::of_fraction(Q, BigInt(5), BigInt(6)));
}

TEST_CASE("field axioms hold on random elements") {
    for (auto field : {Field::Fp(32003), Field::Q()}) {
        Rng rng(7);
        for (int it = 0; it < 500; ++it) {
            auto a = FieldElem::of_fraction(field, BigInt(rng.small(-50, 50)),
                                            BigInt(rng.small(1, 50)));
            auto b = FieldElem::of_fraction(field, BigInt(rng.small(-50, 50)),
                                            BigInt(rng.small(1, 50)));
            auto c = FieldElem::of_fraction(field, BigInt(rng.small(-50, 50)),
                                            BigInt(rng.small(1, 50)));
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FieldElem::zero(field));
            if (!a.is_zero()) {
                CHECK(a * a.inv() == FieldElem::one(field));
                CHECK(a.inv().inv() == a);
            }
        }
    }
}

TEST_CASE("canonical representations usable as keys") {
    auto Q = Field::Q();
    auto x = FieldElem::of_fraction(Q, BigInt(2), BigInt(4));
    auto y = FieldElem::of_fraction(Q, BigInt(-1), BigInt(-2));
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    CHECK(x.to_string() == "1/2");
    auto Fp = Field::Fp(32003);
    CHECK(FieldElem::of_int(Fp, -1) == FieldElem::of_int(Fp, 32002));
}

TEST_CASE("field mismatch is an error") {
    auto a = FieldElem::of_int(Field::Fp(5), 1);
    auto b = FieldElem::of_int(Field::Fp(7), 1);
    CHECK_THROWS_AS(a + b, Error);
}
