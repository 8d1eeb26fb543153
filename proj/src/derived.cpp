#include "dgd/derived.hpp"

#include <algorithm>

namespace dgd {

namespace {

int sat_add(int a, int b) {
    if (a == INT_MIN || b == INT_MIN) return INT_MIN;
    if (a == INT_MAX || b == INT_MAX) return INT_MAX;
    long s = (long)a + b;
    if (s <= INT_MIN) return INT_MIN;
    if (s >= INT_MAX) return INT_MAX;
    return (int)s;
}

int sat_sub(int a, int b) {
    return sat_add(a, b == INT_MIN ? INT_MAX : (b == INT_MAX ? INT_MIN : -b));
}

void check_cap(int top, int floor, const DerivedOpts& o, const std::string& what) {
    require(top - floor <= o.floor_cap, errc::window_infeasible,
            what + ": resolution span " + std::to_string(top - floor) + " exceeds the floor cap " +
                std::to_string(o.floor_cap));
}

void note(std::vector<ProvenanceStep>* prov, const std::string& what, int floor, int top) {
    if (prov) prov->push_back({what, floor, top});
}

bool is_exact(const DerivedObject& x) {
    return x.cert_lo == INT_MIN && x.cert_hi == INT_MAX;
}

} // namespace

HBounds DGModInput::hbounds() const {
    if (kind == Kind::semifree) return {sf.bottom_degree(), sf.top_degree()};
    return {0, 0};
}

int DGModInput::top_struct() const {
    return kind == Kind::semifree ? sf.top_degree() : 0;
}

CohFingerprint certified_fingerprint(const DerivedObject& x, int a, int b) {
    require(x.certifies(a, b), errc::window_violation,
            "certificate [" +
                (x.cert_lo == INT_MIN ? std::string("-inf") : std::to_string(x.cert_lo)) + "," +
                (x.cert_hi == INT_MAX ? std::string("inf") : std::to_string(x.cert_hi)) +
                "] does not cover the requested window [" + std::to_string(a) + "," +
                std::to_string(b) + "]");
    return fingerprint(x.cx, a, b);
}

CohFingerprint certified_fingerprint_through(const DerivedObject& x, const DGRingMap& f,
                                             int a, int b) {
    require(x.certifies(a, b), errc::window_violation,
            "certificate does not cover the requested window");
    return fingerprint_through(x.cx, f, a, b);
}

DerivedObject resolve_input(const DGModInput& m, int floor, const DerivedOpts& o,
                            std::vector<ProvenanceStep>* prov) {
    if (m.kind == DGModInput::Kind::semifree) {
        DerivedObject x;
        x.cx = m.sf;
        x.cert_lo = INT_MIN;
        x.cert_hi = INT_MAX;
        x.hb = m.hbounds();
        return x;
    }
    check_cap(0, floor, o, "module resolution");
    TruncatedComplex t = semifree_resolution(m.ring, m.mod, floor);
    note(prov, "resolve module over " + m.ring->describe(), floor, 0);
    DerivedObject x;
    x.cx = t.complex;
    x.cert_lo = t.cert_lo; // INT_MIN when the resolution terminated early
    x.cert_hi = INT_MAX;
    x.hb = {0, 0};
    return x;
}

DerivedObject re_resolve_to(const DerivedObject& x, int floor, int top_wanted,
                            const DerivedOpts& o, std::vector<ProvenanceStep>* prov) {
    if (is_exact(x)) return x;
    int top = x.cx.n_gens() ? x.cx.top_degree() : 0;
    top = std::min(top, top_wanted);
    if (x.cert_hi != INT_MAX) top = std::min(top, x.cert_hi);
    if (x.hb.hi != INT_MAX) top = std::min(top, x.hb.hi);
    if (x.cert_lo != INT_MIN && x.cert_lo <= floor + 1 && x.cert_hi == INT_MAX &&
        (x.hb.hi == INT_MAX || x.cx.top_degree() <= top))
        return x;
    if (top < floor) top = floor;
    check_cap(top, floor, o, "re-resolution");
    int lo = floor + x.cx.ring()->bottom_degree() - 1;
    PieceTarget tgt = target_of_semifree(x.cx, lo, top);
    TruncatedComplex t = semifree_resolution_target(tgt, top, floor);
    note(prov, "re-resolve with ceiling", floor, top);
    DerivedObject out;
    out.cx = t.complex;
    out.cert_lo = t.cert_lo == INT_MIN ? x.cert_lo : std::max(t.cert_lo, x.cert_lo);
    // generators stop at `top`: if the true cohomology can extend above it,
    // the certificate stops there too
    out.cert_hi = (x.hb.hi != INT_MAX && top >= x.hb.hi) ? INT_MAX : top;
    out.hb = x.hb;
    return out;
}

DerivedObject re_resolve(const DerivedObject& x, int floor, const DerivedOpts& o,
                         std::vector<ProvenanceStep>* prov) {
    if (is_exact(x)) return x;
    if (x.cert_lo != INT_MIN && x.cert_lo <= floor + 1 && x.cert_hi == INT_MAX) return x;
    return re_resolve_to(x, floor, INT_MAX, o, prov);
}

DerivedObject hom_obj(const DerivedObject& x, const DerivedObject& y) {
    DerivedObject out;
    out.cx = hom_complex(x.cx, y.cx);
    // certificates: deviation of X below cert_lo hits degrees
    // >= hbY.lo - (lo_X - 1); deviation of Y below its cert_lo hits degrees
    // <= lo_Y - 1 - inf_struct(X); deviation of X or Y above cert_hi is
    // forbidden here for X (resolutions are certified above) and handled
    // for Y only when exact
    require(y.cert_hi == INT_MAX, errc::internal, "hom target must be certified above");
    int sbx = x.cx.n_gens() ? x.cx.bottom_degree() : 0;
    out.cert_hi = x.cert_lo == INT_MIN ? INT_MAX : sat_sub(sat_sub(y.hb.lo, x.cert_lo), 1);
    out.cert_lo = y.cert_lo == INT_MIN ? INT_MIN : sat_add(sat_sub(y.cert_lo, sbx), 1);
    if (x.cert_hi != INT_MAX) {
        // trailing deviation of X pollutes low degrees
        out.cert_lo = std::max(out.cert_lo, sat_add(sat_sub(y.hb.hi, x.cert_hi), 1));
    }
    out.hb.lo = sat_sub(y.hb.lo, x.hb.hi);
    out.hb.hi = is_exact(x) && is_exact(y)
                    ? (out.cx.n_gens() ? out.cx.top_degree() : 0)
                    : INT_MAX;
    return out;
}

DerivedObject tensor_obj(const DerivedObject& x, const DerivedObject& y) {
    DerivedObject out;
    out.cx = tensor_complex(x.cx, y.cx);
    int topx = x.cx.n_gens() ? x.cx.top_degree() : 0;
    int topy = y.cx.n_gens() ? y.cx.top_degree() : 0;
    int lo1 = x.cert_lo == INT_MIN ? INT_MIN : sat_add(sat_add(x.cert_lo, topy), 1);
    int lo2 = y.cert_lo == INT_MIN ? INT_MIN : sat_add(sat_add(y.cert_lo, topx), 1);
    out.cert_lo = std::max(lo1, lo2);
    int hi1 = x.cert_hi == INT_MAX ? INT_MAX : sat_sub(sat_add(x.cert_hi, y.hb.lo), 1);
    int hi2 = y.cert_hi == INT_MAX ? INT_MAX : sat_sub(sat_add(y.cert_hi, x.hb.lo), 1);
    out.cert_hi = std::min(hi1, hi2);
    out.hb.hi = sat_add(x.hb.hi, y.hb.hi);
    out.hb.lo = is_exact(x) && is_exact(y)
                    ? (out.cx.n_gens() ? out.cx.bottom_degree() : 0)
                    : INT_MIN;
    return out;
}

DerivedObject base_change_obj(const DerivedObject& x, const DGRingMap& f) {
    require(x.cert_hi == INT_MAX, errc::internal,
            "base change needs an input certified above (derived tensoring spreads "
            "trailing deviations downward)");
    DerivedObject out;
    out.cx = base_change_module(x.cx, f);
    out.cert_lo = x.cert_lo;
    out.cert_hi = INT_MAX;
    out.hb = {INT_MIN, x.hb.hi};
    if (is_exact(x)) out.hb.lo = out.cx.n_gens() ? out.cx.bottom_degree() : 0;
    return out;
}

DerivedObject external_tensor_obj(const DerivedObject& x, const DerivedObject& y,
                                  const DGRingMap& inc_l, const DGRingMap& inc_r) {
    DerivedObject out;
    out.cx = external_tensor(x.cx, y.cx, inc_l, inc_r);
    int topx = x.cx.n_gens() ? x.cx.top_degree() : 0;
    int topy = y.cx.n_gens() ? y.cx.top_degree() : 0;
    int lo1 = x.cert_lo == INT_MIN ? INT_MIN : sat_add(sat_add(x.cert_lo, topy), 1);
    int lo2 = y.cert_lo == INT_MIN ? INT_MIN : sat_add(sat_add(y.cert_lo, topx), 1);
    out.cert_lo = std::max(lo1, lo2);
    int hi1 = x.cert_hi == INT_MAX ? INT_MAX : sat_sub(sat_add(x.cert_hi, y.hb.lo), 1);
    int hi2 = y.cert_hi == INT_MAX ? INT_MAX : sat_sub(sat_add(y.cert_hi, x.hb.lo), 1);
    out.cert_hi = std::min(hi1, hi2);
    // field coefficients: exact in each degree, so true bounds add
    out.hb.lo = sat_add(x.hb.lo, y.hb.lo);
    out.hb.hi = sat_add(x.hb.hi, y.hb.hi);
    return out;
}

// ---- spec operations ----

DerivedResult rhom(const DGModInput& m, const DGModInput& n, int a, int b, const DerivedOpts& o,
                   std::optional<int> sup_hint) {
    require(a <= b, errc::invalid_argument, "empty window");
    require(same_dgring(m.ring, n.ring), errc::ring_mismatch, "rhom inputs over different rings");
    DerivedResult res;
    HBounds hbn = n.hbounds();
    int ceiling_needed = sup_hint ? std::max(b, *sup_hint) : b;
    DerivedObject xm;
    if (m.kind == DGModInput::Kind::semifree) {
        xm = resolve_input(m, 0, o, &res.provenance);
    } else {
        int t = sat_sub(sat_sub(hbn.lo, ceiling_needed), 2) - o.extra_floor;
        xm = resolve_input(m, t, o, &res.provenance);
    }
    DerivedObject yn;
    if (n.kind == DGModInput::Kind::semifree) {
        yn = resolve_input(n, 0, o, &res.provenance);
    } else {
        int sbx = xm.cx.n_gens() ? xm.cx.bottom_degree() : 0;
        int fn = sat_sub(sat_add(a, sbx), 2) - o.extra_floor;
        yn = resolve_input(n, fn, o, &res.provenance);
    }
    res.obj = hom_obj(xm, yn);
    if (sup_hint) res.obj.hb.hi = std::min(res.obj.hb.hi, *sup_hint);
    res.fp = certified_fingerprint(res.obj, a, b);
    return res;
}

DerivedResult derived_tensor(const DGModInput& m, const DGModInput& n, int a, int b,
                             const DerivedOpts& o) {
    require(a <= b, errc::invalid_argument, "empty window");
    require(same_dgring(m.ring, n.ring), errc::ring_mismatch,
            "derived tensor inputs over different rings");
    DerivedResult res;
    // semi-free inputs are exact and K-flat; only modules need resolving
    int top_m = std::max(0, m.top_struct()), top_n = std::max(0, n.top_struct());
    DerivedObject xm, yn;
    if (m.kind == DGModInput::Kind::semifree) {
        xm = resolve_input(m, 0, o, &res.provenance);
    } else {
        xm = resolve_input(m, sat_sub(sat_sub(a, top_n), 2) - o.extra_floor, o, &res.provenance);
    }
    if (n.kind == DGModInput::Kind::semifree) {
        yn = resolve_input(n, 0, o, &res.provenance);
    } else {
        yn = resolve_input(n, sat_sub(sat_sub(a, top_m), 2) - o.extra_floor, o, &res.provenance);
    }
    res.obj = tensor_obj(xm, yn);
    res.fp = certified_fingerprint(res.obj, a, b);
    return res;
}

namespace {

DerivedObject input_as_resolved(const DGModInput& m, int floor, const DerivedOpts& o,
                                std::vector<ProvenanceStep>* prov) {
    if (m.kind == DGModInput::Kind::h0module) return resolve_input(m, floor, o, prov);
    return resolve_input(m, 0, o, prov);
}

} // namespace

DerivedResult hochschild(const DGRingRef& a, const DGModInput& m, const DGModInput& n, int lo,
                         int hi, const DerivedOpts& o) {
    require(same_dgring(m.ring, a) && same_dgring(n.ring, a), errc::ring_mismatch,
            "hochschild inputs must live over the given ring");
    DerivedResult res;
    HBounds hbm = m.hbounds(), hbn = n.hbounds();
    HBounds hbe{sat_add(hbm.lo, hbn.lo), sat_add(hbm.hi, hbn.hi)};
    int bottom_a = a->bottom_degree();
    // diagonal resolution floor: the Hom ceiling hbE.lo - t - 2 must cover hi
    int t = sat_sub(sat_sub(hbe.lo, hi), 2) - o.extra_floor;
    check_cap(0, t, o, "diagonal resolution");
    DiagonalResolution diag = diagonal_resolution(a, t);
    note(&res.provenance, "diagonal resolution of " + a->describe(), t, 0);
    DerivedObject xdiag;
    xdiag.cx = diag.res.complex;
    xdiag.cert_lo = t + 1;
    xdiag.cert_hi = INT_MAX;
    xdiag.hb = {bottom_a, 0};
    // external tensor factors resolved so their deviation stays below the
    // Hom window: floor_out = lo_E - sb(X) + 1 <= lo
    int sbx = xdiag.cx.n_gens() ? xdiag.cx.bottom_degree() : 0;
    int need_lo_e = sat_sub(sat_add(lo, sbx), 2);
    int fm = sat_sub(need_lo_e, std::max(0, n.top_struct()) + 2) - o.extra_floor;
    int fn = sat_sub(need_lo_e, std::max(0, m.top_struct()) + 2) - o.extra_floor;
    DerivedObject xm = input_as_resolved(m, fm, o, &res.provenance);
    DerivedObject xn = input_as_resolved(n, fn, o, &res.provenance);
    DerivedObject e = external_tensor_obj(xm, xn, diag.env.inc_left, diag.env.inc_right);
    res.obj = hom_obj(xdiag, e);
    // the reported fingerprint carries the A-action through one factor
    res.restrict_along = diag.env.inc_left;
    res.fp = certified_fingerprint_through(res.obj, *res.restrict_along, lo, hi);
    return res;
}

DerivedResult diagonal_tensor(const DGRingRef& a, const DGModInput& m, const DGModInput& n,
                              int lo, int hi, const DerivedOpts& o) {
    DerivedResult res;
    // tensor over A^e of the diagonal resolution with M (x)_k N
    int topE = sat_add(std::max(0, m.top_struct()), std::max(0, n.top_struct()));
    int t = sat_sub(sat_sub(lo, topE), 3) - o.extra_floor;
    check_cap(0, t, o, "diagonal resolution");
    DiagonalResolution diag = diagonal_resolution(a, t);
    note(&res.provenance, "diagonal resolution of " + a->describe(), t, 0);
    DerivedObject xdiag;
    xdiag.cx = diag.res.complex;
    xdiag.cert_lo = t + 1;
    xdiag.cert_hi = INT_MAX;
    xdiag.hb = {a->bottom_degree(), 0};
    int topd = xdiag.cx.n_gens() ? xdiag.cx.top_degree() : 0; // = 0
    // lo_E + top(diag) + 1 <= lo: resolve factors deep enough
    int need_lo_e = sat_sub(sat_sub(lo, topd), 2);
    int fm = sat_sub(need_lo_e, std::max(0, n.top_struct()) + 2) - o.extra_floor;
    int fn = sat_sub(need_lo_e, std::max(0, m.top_struct()) + 2) - o.extra_floor;
    DerivedObject xm = input_as_resolved(m, fm, o, &res.provenance);
    DerivedObject xn = input_as_resolved(n, fn, o, &res.provenance);
    DerivedObject e = external_tensor_obj(xm, xn, diag.env.inc_left, diag.env.inc_right);
    res.obj = tensor_obj(xdiag, e);
    res.restrict_along = diag.env.inc_left;
    res.fp = certified_fingerprint_through(res.obj, *res.restrict_along, lo, hi);
    return res;
}

BoxHomReport box_hom_check(const DGRingRef& a, const DGRingRef& b, const DGModInput& p,
                           const DGModInput& m, const DGModInput& q, const DGModInput& n,
                           int lo, int hi, const DerivedOpts& o) {
    require(a->base()->field()->same(*b->base()->field()), errc::base_mismatch,
            "box hom over different base fields");
    require(m.kind == DGModInput::Kind::semifree && n.kind == DGModInput::Kind::semifree,
            errc::invalid_argument, "box hom coefficients must be bounded semi-free modules");
    DGTensor ab = tensor_dgrings(a, b);
    std::vector<ProvenanceStep> prov;
    HBounds hbp = p.hbounds(), hbm = m.hbounds(), hbq = q.hbounds(), hbn = n.hbounds();
    HBounds hl{sat_sub(hbm.lo, hbp.hi), sat_sub(hbm.hi, hbp.lo)};
    HBounds hr{sat_sub(hbn.lo, hbq.hi), sat_sub(hbn.hi, hbq.lo)};
    // each factor's Hom certificate must reach past the boxed window after
    // the external tensor shifts it by the other factor's lower H-bound
    int CL = std::max(hi, sat_add(sat_sub(hi, hr.lo), 1));
    int CR = std::max(hi, sat_add(sat_sub(hi, hl.lo), 1));
    int top_p = std::max(0, p.top_struct()), top_q = std::max(0, q.top_struct());
    int L = sat_sub(sat_add(hbm.lo, hbn.lo), hi + 2); // lo_{P (x) Q} must stay <= L
    int tp = std::min(sat_sub(sat_sub(hbm.lo, CL), 2), sat_sub(L, top_q + 2)) - o.extra_floor;
    int tq = std::min(sat_sub(sat_sub(hbn.lo, CR), 2), sat_sub(L, top_p + 2)) - o.extra_floor;
    DerivedObject xp = input_as_resolved(p, tp, o, &prov);
    DerivedObject xq = input_as_resolved(q, tq, o, &prov);
    DerivedObject ym = resolve_input(m, 0, o, &prov);
    DerivedObject yn = resolve_input(n, 0, o, &prov);
    DerivedObject homl = hom_obj(xp, ym);
    DerivedObject homr = hom_obj(xq, yn);
    // convert each factor to a two-sided certified window before the
    // external tensor
    int fl = sat_sub(sat_sub(lo, CR), 2) - o.extra_floor;
    int fr = sat_sub(sat_sub(lo, CL), 2) - o.extra_floor;
    DerivedObject hl_res = re_resolve_to(homl, fl, CL, o, &prov);
    DerivedObject hr_res = re_resolve_to(homr, fr, CR, o, &prov);
    DerivedObject left = external_tensor_obj(hl_res, hr_res, ab.inc_left, ab.inc_right);
    // right side: RHom_{A(x)B}(P (x) Q, M (x) N)
    DerivedObject pq = external_tensor_obj(xp, xq, ab.inc_left, ab.inc_right);
    DerivedObject mn = external_tensor_obj(ym, yn, ab.inc_left, ab.inc_right);
    DerivedObject right = hom_obj(pq, mn);
    BoxHomReport rep;
    rep.over = ab.ring;
    rep.left = certified_fingerprint(left, lo, hi);
    rep.right = certified_fingerprint(right, lo, hi);
    rep.match = rep.left.agrees_on(rep.right, lo, hi);
    return rep;
}

} // namespace dgd
