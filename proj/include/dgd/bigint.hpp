#ifndef DGD_BIGINT_HPP
#define DGD_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dgd {

// Sign/magnitude integer, base 2^32, little endian limbs. Zero has empty
// magnitude and sign 0; nonzero values keep no leading zero limbs.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    int sign() const { return sign_; }
    bool fits_int64() const;
    long long to_int64() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division (quotient rounds toward zero), as in C.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(BigInt a, BigInt b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    std::string to_string() const;
    size_t hash() const;

  private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace dgd

#endif
