#ifndef DGD_COHOMOLOGY_HPP
#define DGD_COHOMOLOGY_HPP

#include "dgd/semifree.hpp"

#include <map>

namespace dgd {

// Graded pieces of a semi-free module as finite free A^0-modules: the basis
// of degree i is the list of (generator, exterior monomial) pairs, and the
// differential is an A^0-linear matrix (d kills A^0).
struct Expansion {
    const SemiFreeDGMod* mod = nullptr;
    int lo = 0, hi = 0;
    std::map<int, std::vector<std::pair<int, ExtMon>>> basis;
    // diff[i][k] = image of basis k of degree i, as a vector over basis of i+1
    std::map<int, std::vector<FreeVec>> diff;
};

Expansion expand(const SemiFreeDGMod& m, int lo, int hi);

// image of a module element (given on the degree-i basis) under d
FreeVec expansion_apply_d(const Expansion& e, int i, const FreeVec& v);

// H^i as a finitely presented module over H^0(A).
ModulePres cohomology(const SemiFreeDGMod& m, int i);

// ---- fingerprints ----

struct FpEntry {
    bool finite = true;
    long dim = 0;         // when finite
    int mingens = 0;      // when infinite
    std::vector<std::string> ann; // reduced annihilator GB, canonical strings

    bool operator==(const FpEntry& o) const {
        if (finite != o.finite) return false;
        if (finite) return dim == o.dim;
        return mingens == o.mingens && ann == o.ann;
    }
    std::string to_string() const;
};

// Per-degree invariants of cohomology on a window: dim_k when finite, else
// (minimal generator count over the bar ring, annihilator GB). A computable
// necessary condition for isomorphism in the derived category.
struct CohFingerprint {
    int lo = 0, hi = 0;
    std::map<int, FpEntry> entries; // every degree in [lo,hi]

    bool operator==(const CohFingerprint& o) const {
        return lo == o.lo && hi == o.hi && entries == o.entries;
    }
    // equality on the intersection window
    bool agrees_on(const CohFingerprint& o, int a, int b) const;
    bool is_zero() const;
    std::string to_string() const;
};

FpEntry fingerprint_entry(const ModulePres& h);
CohFingerprint fingerprint(const SemiFreeDGMod& m, int lo, int hi);

// Fingerprint of the restriction along f : A -> B of a module over B,
// computed through the induced map on H^0 (min-gens via the image of the
// source variables, annihilator via preimage).
FpEntry fingerprint_entry_through(const ModulePres& h, const RingMapData& bar_map);
CohFingerprint fingerprint_through(const SemiFreeDGMod& m, const DGRingMap& f, int lo, int hi);

// Fingerprint of a plain module placed in degree 0 over its own ring.
FpEntry module_fingerprint_entry(const ModulePres& m);

} // namespace dgd

#endif
