#ifndef DGD_POLY_HPP
#define DGD_POLY_HPP

#include "dgd/field.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace dgd {

constexpr int kMaxVars = 16;

// Dense exponent vector, fixed width.
struct Expo {
    std::array<uint16_t, kMaxVars> e{};

    int total() const {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }
    bool is_one() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    bool divides(const Expo& m) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Expo operator*(const Expo& o) const {
        Expo r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] + o.e[i]);
        return r;
    }
    // requires o.divides(*this)
    Expo operator/(const Expo& o) const {
        Expo r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] - o.e[i]);
        return r;
    }
    static Expo lcm(const Expo& a, const Expo& b) {
        Expo r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static Expo var(int i, int k = 1) {
        Expo r;
        r.e[(size_t)i] = (uint16_t)k;
        return r;
    }
    bool operator==(const Expo& o) const { return e == o.e; }
    bool coprime(const Expo& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
};

// Total multiplicative monomial order with 1 minimal. Optional leading
// elimination block on the first n_elim priority variables.
struct MonomialOrder {
    enum class Kind { lex, grlex, grevlex };
    Kind kind = Kind::grevlex;
    std::vector<int> priority; // permutation of 0..nvars-1; empty = identity
    int n_elim = 0;

    // returns <0, 0, >0 for a < b, a == b, a > b
    int compare(const Expo& a, const Expo& b, int nvars) const;
    bool less(const Expo& a, const Expo& b, int nvars) const { return compare(a, b, nvars) < 0; }
    std::string to_string() const;
};

struct Term {
    Expo mon;
    FieldElem coeff;
};

class Ring;
using RingRef = std::shared_ptr<const Ring>;

// Multivariate polynomial with strictly descending terms in the ring order.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingRef ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingRef& r) { return Poly(r); }
    static Poly constant(const RingRef& r, const FieldElem& c);
    static Poly variable(const RingRef& r, int idx, int power = 1);
    static Poly monomial(const RingRef& r, const Expo& m, const FieldElem& c);

    const RingRef& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const;
    int total_degree() const; // -1 for 0

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElem& c) const;
    Poly times_monomial(const Expo& m, const FieldElem& c) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Reinterprets the same terms over another ring with identical
    // variables/order (ambient lift or cast); no reduction happens.
    Poly with_ring(const RingRef& r) const { return from_sorted(r, terms_); }
    // Cast into a quotient ring, reducing against its ideal.
    Poly into(const RingRef& r) const;

    std::string to_string() const;

    // internal: terms must be sorted descending, nonzero, unique
    static Poly from_sorted(RingRef ring, std::vector<Term> ts);

  private:
    RingRef ring_;
    std::vector<Term> terms_;
};

// Quotient ring k[x_1..x_n]/I with a fixed order and reduced GB of I.
// An empty ideal_gb means the polynomial ring itself.
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static RingRef poly_ring(FieldRef field, std::vector<std::string> vars,
                             MonomialOrder order);
    // Builds the reduced GB of the given ideal generators over `ambient`.
    static RingRef quotient(const RingRef& ambient, const std::vector<Poly>& ideal_gens);
    // Wraps an already-reduced GB (used internally; trusted).
    static RingRef quotient_from_gb(const RingRef& ambient, std::vector<Poly> gb);

    const FieldRef& field() const { return field_; }
    int nvars() const { return (int)vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Poly>& ideal_gb() const { return ideal_gb_; }
    bool is_polynomial_ring() const { return ideal_gb_.empty(); }
    // The underlying polynomial ring (shares vars/field/order).
    RingRef ambient() const { return ambient_ ? ambient_ : shared_from_this(); }

    int var_index(const std::string& name) const; // -1 if absent
    std::string monomial_string(const Expo& m) const;
    bool same_presentation(const Ring& o) const;

  private:
    Ring() = default;
    FieldRef field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    RingRef ambient_;            // null for a polynomial ring
    std::vector<Poly> ideal_gb_; // over ambient
};

inline bool same_ring(const RingRef& a, const RingRef& b) {
    return a.get() == b.get() || (a && b && a->same_presentation(*b));
}

// `3*x^2*y - 1/2*z` with ^, *, +, -; variables are identifiers.
Poly parse_poly(const RingRef& ring, const std::string& text);

} // namespace dgd

#endif
