#ifndef DGD_GROEBNER_HPP
#define DGD_GROEBNER_HPP

#include "dgd/poly.hpp"

#include <optional>
#include <vector>

namespace dgd {

// Element of a free module R^rank; components indexed by basis position.
struct FreeVec {
    RingRef ring;
    std::vector<Poly> comps;

    FreeVec() = default;
    FreeVec(RingRef r, int rank) : ring(std::move(r)), comps((size_t)rank, Poly(ring)) {}
    int rank() const { return (int)comps.size(); }
    bool is_zero() const {
        for (const auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }
    FreeVec operator+(const FreeVec& o) const;
    FreeVec operator-(const FreeVec& o) const;
    FreeVec operator-() const;
    FreeVec times_monomial(const Expo& m, const FieldElem& c) const;
    FreeVec times(const Poly& p) const;
    static FreeVec basis(const RingRef& r, int rank, int pos);
    bool operator==(const FreeVec& o) const;
    std::string to_string() const;
};

// Module term order: TOP (term over position) with an optional leading
// position block; any term in a position < front_block dominates the rest.
struct ModuleOrder {
    int front_block = 0;

    // compares (m1,p1) vs (m2,p2); ties broken by smaller position = larger
    int compare(const Ring& ring, const Expo& m1, int p1, const Expo& m2, int p2) const;
};

struct ModTerm {
    Expo mon;
    int pos = -1;
    FieldElem coeff;
};

std::optional<ModTerm> lead_term(const FreeVec& v, const ModuleOrder& mo);

// ---- normal forms / division ----

// Reduce f against gb (which need not be a GB; then this is plain division).
Poly normal_form(const Poly& f, const std::vector<Poly>& gb);
// Division with quotients: f = sum q_i g_i + r.
Poly divide_poly(const Poly& f, const std::vector<Poly>& gb, std::vector<Poly>* quotients);

FreeVec normal_form(const FreeVec& f, const std::vector<FreeVec>& gb, const ModuleOrder& mo);
FreeVec divide_vec(const FreeVec& f, const std::vector<FreeVec>& gb, const ModuleOrder& mo,
                   std::vector<Poly>* quotients);

// ---- Buchberger ----

// Reduced Groebner basis of an ideal, canonical for (ideal, order).
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const RingRef& ring);

// Reduced Groebner basis of a submodule of ring^rank.
std::vector<FreeVec> buchberger_module(const std::vector<FreeVec>& gens, const RingRef& ring,
                                       int rank, const ModuleOrder& mo);

bool ideal_contains(const std::vector<Poly>& gb, const Poly& f);

} // namespace dgd

#endif
