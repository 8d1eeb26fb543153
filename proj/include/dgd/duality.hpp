#ifndef DGD_DUALITY_HPP
#define DGD_DUALITY_HPP

#include "dgd/derived.hpp"

namespace dgd {

// Rigid dualizing DG-module, constructed by the finite-map recipe from the
// ambient polynomial ring: R_poly = S[n], then R_{A^0} = RHom_S(A^0, R_poly)
// via a finite free resolution, then R_A = Hom_{A^0}(A, R_{A^0}). For the
// exterior-algebra presentations used here the last Hom is free of rank one
// over A, so R_A is a single shifted copy of A; the construction verifies
// Cohen-Macaulayness and Gorensteinness of A^0 along the way and reports
// the candidate's rigidity rather than assuming it.
struct DualizingDatum {
    DGRingRef ring;
    SemiFreeDGMod R;
    int shift = 0; // R = A[shift]
    std::vector<std::string> trace;

    DerivedObject as_object() const;
    // conservative bound for sup H(RHom_A(M, R)) given inf H(M)
    int dual_sup_bound(int m_inf) const;
};

DualizingDatum rigid_dualizing(const DGRingRef& a);

// D_A(M) = RHom_A(M, R_A) certified on [a, b].
DerivedResult dualize(const DGModInput& m, const DualizingDatum& datum, int a, int b,
                      const DerivedOpts& o = {});

struct RigidityReport {
    bool pass = false;
    CohFingerprint hochschild_side; // over bar(A), restricted from A^e
    CohFingerprint candidate_side;  // over bar(A)
    std::string caveat = "fingerprint equality: necessary condition for D(A)-isomorphism";
};
// Compares RHom_{A (x) A}(A, R (x)_k R) with R at fingerprint level.
RigidityReport check_rigidity(const DGRingRef& a, const SemiFreeDGMod& candidate, int lo,
                              int hi, const DerivedOpts& o = {});

// Omega_{B/A} = B[m] for a polynomial extension with m adjoined variables.
SemiFreeDGMod omega_smooth(const DGRingMap& f);

// f^!(M) = D_B(B (x)^L_A D_A(M)); the identity map gives the identity functor.
DerivedResult shriek(const DGRingMap& f, const DGModInput& m, int a, int b,
                     const DerivedOpts& o = {});

// M (x)^!_A N = D_A(D_A(M) (x)^L_A D_A(N)).
DerivedResult twisted_tensor(const DGModInput& m, const DGModInput& n,
                             const DualizingDatum& datum, int a, int b,
                             const DerivedOpts& o = {});

// RHom_A(D(M), D(N)), one side of the duality swap.
DerivedResult hom_of_duals(const DGModInput& m, const DGModInput& n,
                           const DualizingDatum& datum, int a, int b,
                           const DerivedOpts& o = {});

} // namespace dgd

#endif
