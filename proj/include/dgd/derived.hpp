#ifndef DGD_DERIVED_HPP
#define DGD_DERIVED_HPP

#include "dgd/resolution.hpp"

#include <optional>

namespace dgd {

// Bounds on the support of the cohomology of the true derived object.
struct HBounds {
    int lo = 0, hi = 0;
};

// A semi-free complex together with the window of degrees in which its
// cohomology is certified to agree with the derived object it represents.
struct DerivedObject {
    SemiFreeDGMod cx;
    int cert_lo = INT_MIN;
    int cert_hi = INT_MAX;
    HBounds hb;

    bool certifies(int a, int b) const { return cert_lo <= a && b <= cert_hi; }
};

// An object of D(A) the engine can resolve: either a semi-free complex or
// a finitely presented module over the bar ring placed in degree 0.
struct DGModInput {
    enum class Kind { semifree, h0module };
    Kind kind = Kind::semifree;
    DGRingRef ring;
    SemiFreeDGMod sf;
    ModulePres mod;

    static DGModInput of(SemiFreeDGMod m) {
        DGModInput in;
        in.kind = Kind::semifree;
        in.ring = m.ring();
        in.sf = std::move(m);
        return in;
    }
    static DGModInput of_module(DGRingRef host, ModulePres m) {
        DGModInput in;
        in.kind = Kind::h0module;
        in.ring = std::move(host);
        in.mod = std::move(m);
        return in;
    }
    HBounds hbounds() const;
    int top_struct() const;
};

struct DerivedOpts {
    int extra_floor = 0; // deepen every resolution floor (window-stability tests)
    int floor_cap = 40;  // maximum generator-degree span per resolution
};

struct ProvenanceStep {
    std::string what;
    int floor = 0;
    int top = 0;
};

struct DerivedResult {
    DerivedObject obj;
    CohFingerprint fp; // over bar(obj ring), on the requested window
    std::vector<ProvenanceStep> provenance;
    // set when the natural module structure lives over a bigger ring and
    // reports restrict along this map (derived Hochschild cohomology)
    std::optional<DGRingMap> restrict_along;
};

// ---- certified primitives ----

// Resolve an input to a certified-above semi-free object with gens >= floor.
DerivedObject resolve_input(const DGModInput& m, int floor, const DerivedOpts& o,
                            std::vector<ProvenanceStep>* prov);
// Convert any certified object to certified-above form (the ceiling is
// trusted only when it covers the top of the true cohomology).
DerivedObject re_resolve(const DerivedObject& x, int floor, const DerivedOpts& o,
                         std::vector<ProvenanceStep>* prov);
// Same, resolving only up to an explicit ceiling.
DerivedObject re_resolve_to(const DerivedObject& x, int floor, int top_wanted,
                            const DerivedOpts& o, std::vector<ProvenanceStep>* prov);
// Hom of a certified-above X into a certified-above Y over the same ring.
DerivedObject hom_obj(const DerivedObject& x, const DerivedObject& y);
// Tensor of two certified-above objects.
DerivedObject tensor_obj(const DerivedObject& x, const DerivedObject& y);
// Base change preserves certified-above windows.
DerivedObject base_change_obj(const DerivedObject& x, const DGRingMap& f);
// External tensor over the base field.
DerivedObject external_tensor_obj(const DerivedObject& x, const DerivedObject& y,
                                  const DGRingMap& inc_l, const DGRingMap& inc_r);

// ---- spec operations ----

// RHom_A(M, N) certified on [a, b]. `sup_hint`, when given, is a caller-
// supplied bound on the top of the true cohomology (e.g. when N is a
// dualizing module of finite injective dimension); the output is then
// certified up to it, which makes the result re-resolvable above.
DerivedResult rhom(const DGModInput& m, const DGModInput& n, int a, int b,
                   const DerivedOpts& o = {}, std::optional<int> sup_hint = std::nullopt);
// M (x)^L_A N certified on [a, b].
DerivedResult derived_tensor(const DGModInput& m, const DGModInput& n, int a, int b,
                             const DerivedOpts& o = {});
// RHom_{A^e}(A, M (x)_k N) certified on [a, b]; result lives over A^e and
// restricts to A through either inclusion (restrict_along = left inclusion).
DerivedResult hochschild(const DGRingRef& a, const DGModInput& m, const DGModInput& n, int lo,
                         int hi, const DerivedOpts& o = {});
// A (x)^L_{A^e} (M (x)_k N), the homology counterpart used for the
// diagonal-tensor collapse checks; result over A^e.
DerivedResult diagonal_tensor(const DGRingRef& a, const DGModInput& m, const DGModInput& n,
                              int lo, int hi, const DerivedOpts& o = {});

struct BoxHomReport {
    bool match = false;
    CohFingerprint left, right;
    DGRingRef over;
};
// RHom_A(P,M) (x)_k RHom_B(Q,N) vs RHom_{A(x)B}(P (x)_k Q, M (x)_k N).
BoxHomReport box_hom_check(const DGRingRef& a, const DGRingRef& b, const DGModInput& p,
                           const DGModInput& m, const DGModInput& q, const DGModInput& n,
                           int lo, int hi, const DerivedOpts& o = {});

// fingerprint of a certified object on [a,b]; throws WindowViolation if
// the certificate does not cover the window
CohFingerprint certified_fingerprint(const DerivedObject& x, int a, int b);
// same, with the module structure restricted along a ring map into the
// object's ring
CohFingerprint certified_fingerprint_through(const DerivedObject& x, const DGRingMap& f,
                                             int a, int b);

} // namespace dgd

#endif
