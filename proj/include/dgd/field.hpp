#ifndef DGD_FIELD_HPP
#define DGD_FIELD_HPP

#include "dgd/bigint.hpp"
#include "dgd/error.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace dgd {

// Reduced fraction, positive denominator.
struct Rational {
    BigInt num;
    BigInt den{1};

    void normalize();
    std::string to_string() const;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Base field K: a prime field F_p (p a 64-bit prime, checked) or Q.
class Field {
  public:
    enum class Kind { fp, rationals };

    static FieldRef Fp(uint64_t p);
    static FieldRef Q();

    Kind kind() const { return kind_; }
    uint64_t characteristic() const { return kind_ == Kind::fp ? p_ : 0; }
    std::string name() const;
    bool same(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

  private:
    Field(Kind k, uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    uint64_t p_;
};

// Canonical field element: residue in [0,p) for F_p, reduced fraction for Q.
class FieldElem {
  public:
    FieldElem() = default;

    static FieldElem zero(const FieldRef& f);
    static FieldElem one(const FieldRef& f);
    static FieldElem of_int(const FieldRef& f, long long v);
    static FieldElem of_fraction(const FieldRef& f, const BigInt& n, const BigInt& d);

    const FieldRef& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;          // DivisionByZero on 0
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const;
    size_t hash() const;

    uint64_t fp_value() const { return fp_; }
    const Rational& q_value() const { return q_; }

  private:
    FieldRef field_;
    uint64_t fp_ = 0;
    Rational q_;

    void check_same(const FieldElem& o) const;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

} // namespace dgd

#endif
