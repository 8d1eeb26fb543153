#ifndef DGD_RESOLUTION_HPP
#define DGD_RESOLUTION_HPP

#include "dgd/cohomology.hpp"

#include <climits>

namespace dgd {

// Resolution target: a complex whose graded pieces are finitely presented
// modules over the host's degree-0 ring, with an A^0-linear differential
// between the free covers and matrices for the action of the host's
// exterior generators. Covers semi-free modules, H^0-modules placed in
// degree 0, and DG rings (or semi-free modules over them) viewed along a
// degree-0-surjective map.
struct PieceTarget {
    DGRingRef host;
    int top = 0;              // pieces vanish strictly above this degree
    int struct_bottom = INT_MIN; // pieces vanish strictly below this degree
    std::map<int, int> rank;
    std::map<int, std::vector<FreeVec>> rels; // over host base
    std::map<int, std::vector<FreeVec>> diff; // cover(i) -> cover(i+1), columns
    std::map<std::pair<int, int>, std::vector<FreeVec>> act; // (gen t, i) -> columns

    int rank_at(int i) const {
        auto it = rank.find(i);
        return it == rank.end() ? 0 : it->second;
    }
    const std::vector<FreeVec>& rels_at(int i) const;
    const std::vector<FreeVec>& diff_at(int i) const;
    const std::vector<FreeVec>& act_at(int t, int i) const;
    // left action of the exterior monomial on an element of cover(i)
    FreeVec act_mask(ExtMon mask, int i, const FreeVec& v) const;
    FreeVec apply_diff(int i, const FreeVec& v) const;
};

PieceTarget target_of_semifree(const SemiFreeDGMod& m, int lo, int hi);
// module over host->bar() (or base) placed in degree 0
PieceTarget target_of_module(const DGRingRef& host, const ModulePres& w);
// a semi-free module over f.tgt() viewed over f.src(); requires the
// degree-0 part of f to be surjective with every target variable a source
// variable mapping to itself.
PieceTarget target_along_map(const DGRingMap& f, const SemiFreeDGMod& m, int lo, int hi);

// A semi-free complex with a certified window of cohomological degrees in
// which its cohomology agrees with the resolved target.
struct TruncatedComplex {
    SemiFreeDGMod complex;
    int gen_floor = 0;
    int cert_lo = INT_MIN;
    int cert_hi = INT_MAX;

    bool certifies(int a, int b) const { return cert_lo <= a && b <= cert_hi; }
};

// Killing-cycles resolution of the target between top and floor: the
// result P has generators in degrees [floor, top], H^i(P) = H^i(target)
// for i > floor (and everywhere above when top sits at or above the top of
// the target's cohomology).
TruncatedComplex semifree_resolution_target(const PieceTarget& tgt, int top, int floor);

// Spec-level entry point for a semi-free module.
TruncatedComplex semifree_resolution(const SemiFreeDGMod& m, int floor);
// And for an H^0-module placed in degree 0.
TruncatedComplex semifree_resolution(const DGRingRef& host, const ModulePres& w, int floor);

// Exact finite free resolution over a polynomial ring (length <= nvars),
// returned as a complex of free modules F_0 <- ... <- F_len in degrees
// 0..-len over the degree-0 DG ring on `ring`.
SemiFreeDGMod finite_free_resolution(const ModulePres& m);

// Resolution of A over A^e = A (x)_k A through the multiplication map.
struct DiagonalResolution {
    Enveloping env;
    TruncatedComplex res;
};
DiagonalResolution diagonal_resolution(const DGRingRef& a, int floor);

// Window calculus (stated contract; property-tested):
//   P generators >= t, N cohomology amplitude in [u, v]:
//   H^i(hom(P,N)) certified for i < u - t; H^i(P (x) N) certified for i > t + v.
inline int hom_cert_ceiling(int t, int u) { return u - t - 1; }
inline int tensor_cert_floor(int t, int v) { return t + v + 1; }

} // namespace dgd

#endif
