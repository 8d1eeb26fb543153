#include "dgd/field.hpp"

namespace dgd {

void Rational::normalize() {
    require(!den.is_zero(), errc::division_by_zero, "rational with zero denominator");
    if (num.is_zero()) {
        den = BigInt(1);
        return;
    }
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = BigInt::gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
}

std::string Rational::to_string() const {
    if (den.is_one()) return num.to_string();
    return num.to_string() + "/" + den.to_string();
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldRef Field::Fp(uint64_t p) {
    require(is_prime_u64(p), errc::invalid_argument,
            "field characteristic " + std::to_string(p) + " is not prime");
    return FieldRef(new Field(Kind::fp, p));
}

FieldRef Field::Q() { return FieldRef(new Field(Kind::rationals, 0)); }

std::string Field::name() const {
    return kind_ == Kind::fp ? "Fp(" + std::to_string(p_) + ")" : "QQ";
}

FieldElem FieldElem::zero(const FieldRef& f) {
    FieldElem e;
    e.field_ = f;
    return e;
}

FieldElem FieldElem::one(const FieldRef& f) { return of_int(f, 1); }

FieldElem FieldElem::of_int(const FieldRef& f, long long v) {
    FieldElem e;
    e.field_ = f;
    if (f->kind() == Field::Kind::fp) {
        long long p = (long long)f->characteristic();
        long long r = v % p;
        if (r < 0) r += p;
        e.fp_ = (uint64_t)r;
    } else {
        e.q_.num = BigInt(v);
        e.q_.den = BigInt(1);
    }
    return e;
}

FieldElem FieldElem::of_fraction(const FieldRef& f, const BigInt& n, const BigInt& d) {
    require(!d.is_zero(), errc::division_by_zero, "fraction with zero denominator");
    if (f->kind() == Field::Kind::rationals) {
        FieldElem e;
        e.field_ = f;
        e.q_.num = n;
        e.q_.den = d;
        e.q_.normalize();
        return e;
    }
    BigInt p((long long)f->characteristic());
    BigInt nr = n % p, dr = d % p;
    long long ni = nr.is_zero() ? 0 : nr.to_int64();
    long long di = dr.is_zero() ? 0 : dr.to_int64();
    FieldElem num = of_int(f, ni), den = of_int(f, di);
    return num / den;
}

bool FieldElem::is_zero() const {
    if (!field_) return true;
    return field_->kind() == Field::Kind::fp ? fp_ == 0 : q_.num.is_zero();
}

bool FieldElem::is_one() const {
    if (!field_) return false;
    return field_->kind() == Field::Kind::fp ? fp_ == 1
                                             : (q_.num.is_one() && q_.den.is_one());
}

void FieldElem::check_same(const FieldElem& o) const {
    require(field_ && o.field_ && field_->same(*o.field_), errc::field_mismatch,
            "operands live in different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.field_ = field_;
    if (field_->kind() == Field::Kind::fp) {
        uint64_t p = field_->characteristic();
        uint64_t s = fp_ + o.fp_;
        r.fp_ = s >= p ? s - p : s;
    } else {
        r.q_.num = q_.num * o.q_.den + o.q_.num * q_.den;
        r.q_.den = q_.den * o.q_.den;
        r.q_.normalize();
    }
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.field_ = field_;
    if (!field_) return r;
    if (field_->kind() == Field::Kind::fp) {
        r.fp_ = fp_ == 0 ? 0 : field_->characteristic() - fp_;
    } else {
        r.q_.num = -q_.num;
        r.q_.den = q_.den;
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.field_ = field_;
    if (field_->kind() == Field::Kind::fp) {
        r.fp_ = (uint64_t)((__uint128_t)fp_ * o.fp_ % field_->characteristic());
    } else {
        r.q_.num = q_.num * o.q_.num;
        r.q_.den = q_.den * o.q_.den;
        r.q_.normalize();
    }
    return r;
}

FieldElem FieldElem::inv() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero");
    FieldElem r;
    r.field_ = field_;
    if (field_->kind() == Field::Kind::fp) {
        // extended Euclid on int64 (p < 2^63)
        long long p = (long long)field_->characteristic();
        long long a = (long long)fp_, b = p, x0 = 1, x1 = 0;
        while (b) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        long long inv = x0 % p;
        if (inv < 0) inv += p;
        r.fp_ = (uint64_t)inv;
    } else {
        r.q_.num = q_.den;
        r.q_.den = q_.num;
        r.q_.normalize();
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!field_ || !o.field_) return is_zero() && o.is_zero();
    if (!field_->same(*o.field_)) return false;
    if (field_->kind() == Field::Kind::fp) return fp_ == o.fp_;
    return q_.num == o.q_.num && q_.den == o.q_.den;
}

std::string FieldElem::to_string() const {
    if (!field_) return "0";
    if (field_->kind() == Field::Kind::fp) {
        // balanced printing: residues above p/2 shown negative
        uint64_t p = field_->characteristic();
        if (fp_ > p / 2) return "-" + std::to_string(p - fp_);
        return std::to_string(fp_);
    }
    return q_.to_string();
}

size_t FieldElem::hash() const {
    if (!field_) return 0;
    if (field_->kind() == Field::Kind::fp) return (size_t)fp_ * 1099511628211ULL;
    return q_.num.hash() * 31 + q_.den.hash();
}

} // namespace dgd
