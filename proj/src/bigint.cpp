#include "dgd/bigint.hpp"

#include "dgd/error.hpp"

#include <algorithm>

namespace dgd {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (u) {
        mag_.push_back((uint32_t)(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    require(fits_int64(), errc::internal, "BigInt does not fit in int64");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return sign_ >= 0 ? (long long)u : -(long long)u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = (uint32_t)s;
        carry = s >> 32;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
        if (d < 0) {
            d += ((int64_t)1 << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (uint32_t)d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + (uint64_t)a[i] * b[j] + carry;
            r[i + j] = (uint32_t)cur;
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = (uint32_t)cur;
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division digit by digit with a 64-bit trial quotient.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    require(!b.empty(), errc::division_by_zero, "integer division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = (uint32_t)(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back((uint32_t)rem);
        return;
    }
    // General case: binary-refined trial quotient per position.
    std::vector<uint32_t> rem;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
        rem.insert(rem.begin(), a[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (cmp_mag(rem, b) < 0) continue;
        // Estimate rem / b using the top 64 bits of each.
        uint64_t lo = 1, hi = 0xffffffffULL;
        while (lo < hi) {
            uint64_t mid = lo + (hi - lo + 1) / 2;
            std::vector<uint32_t> t = mul_mag(b, {(uint32_t)mid});
            if (cmp_mag(t, rem) <= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        q[i] = (uint32_t)lo;
        rem = sub_mag(rem, mul_mag(b, {(uint32_t)lo}));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = rem;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.mag_ = qm;
    r.mag_ = rm;
    q.sign_ = qm.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = rm.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    int sg = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sg = -1;
        ++i;
    }
    require(i < s.size(), errc::invalid_argument, "empty integer literal");
    for (; i < s.size(); ++i) {
        require(s[i] >= '0' && s[i] <= '9', errc::invalid_argument, "bad digit in integer");
        r = r * BigInt(10) + BigInt(s[i] - '0');
    }
    if (sg < 0) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigInt t = abs(), ten(10);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, ten, q, r);
        out.push_back(char('0' + (r.is_zero() ? 0 : r.mag_[0])));
        t = q;
    }
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

size_t BigInt::hash() const {
    size_t h = (size_t)sign_ + 0x9e3779b97f4a7c15ULL;
    for (uint32_t w : mag_) h = h * 1099511628211ULL ^ w;
    return h;
}

} // namespace dgd
