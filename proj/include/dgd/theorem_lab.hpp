#ifndef DGD_THEOREM_LAB_HPP
#define DGD_THEOREM_LAB_HPP

#include "dgd/duality.hpp"

namespace dgd {

// Verdicts are fingerprint-level: pass iff the two fingerprints agree on
// the window. Every report carries the standing caveat.
struct VerificationReport {
    std::string theorem;
    int lo = 0, hi = 0;
    CohFingerprint left, right;
    bool pass = false;
    std::string detail;
    double ms = 0;
    std::string caveat = "fingerprint equality: necessary condition for D(A)-isomorphism";
};

// f^!(M) vs RHom_A(B, M), both restricted to bar(A).  NotCohFinite if the
// induced map on H^0 is not module-finite.
VerificationReport verify_finite(const DGRingMap& f, const DGModInput& m, int lo, int hi,
                                 const DerivedOpts& o = {});

// f^!(M) vs M (x)^L_A Omega_{B/A} over bar(B).
VerificationReport verify_smooth(const DGRingMap& f, const DGModInput& m, int lo, int hi,
                                 const DerivedOpts& o = {});

// Derived Hochschild cohomology vs the twisted tensor product, over bar(A).
VerificationReport verify_reduction(const DGRingRef& a, const DGModInput& m,
                                    const DGModInput& n, int lo, int hi,
                                    const DerivedOpts& o = {});

// R_A (x)_k R_B is dualizing over A (x)_k B: RHom(R, R) = C plus biduality
// on sample modules.
VerificationReport verify_tensor_dualizing(const DGRingRef& a, const DGRingRef& b, int lo,
                                           int hi, const DerivedOpts& o = {});

// Unit law of the twisted tensor: R (x)! R = R and R (x)! M = M on samples.
VerificationReport verify_unit(const DGRingRef& a, const std::vector<DGModInput>& samples,
                               int lo, int hi, const DerivedOpts& o = {});

// Base change along a K-flat semi-free extension g : A -> C against f : A -> B.
VerificationReport verify_base_change(const DGRingMap& f, const DGRingRef& c,
                                      const DGModInput& m, int lo, int hi,
                                      const DerivedOpts& o = {});

VerificationReport verify_box_hom(const DGRingRef& a, const DGRingRef& b, const DGModInput& p,
                                  const DGModInput& m, const DGModInput& q,
                                  const DGModInput& n, int lo, int hi,
                                  const DerivedOpts& o = {});

// RHom_A(D(M), D(N)) vs RHom_A(N, M).
VerificationReport verify_duality_swap(const DGRingRef& a, const DGModInput& m,
                                       const DGModInput& n, int lo, int hi,
                                       const DerivedOpts& o = {});

// A (x)^L_{A^e} (M box N) vs M (x)^L_A N.
VerificationReport verify_diagonal_tensor(const DGRingRef& a, const DGModInput& m,
                                          const DGModInput& n, int lo, int hi,
                                          const DerivedOpts& o = {});

// check_rigidity as a report (the negative corpus instances expect fail).
VerificationReport verify_rigidity(const DGRingRef& a, const SemiFreeDGMod& candidate, int lo,
                                   int hi, const DerivedOpts& o = {});

} // namespace dgd

#endif
