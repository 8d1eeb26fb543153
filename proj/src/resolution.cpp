#include "dgd/resolution.hpp"

#include <algorithm>

namespace dgd {

const std::vector<FreeVec>& PieceTarget::rels_at(int i) const {
    static const std::vector<FreeVec> empty;
    auto it = rels.find(i);
    return it == rels.end() ? empty : it->second;
}

const std::vector<FreeVec>& PieceTarget::diff_at(int i) const {
    static const std::vector<FreeVec> empty;
    auto it = diff.find(i);
    return it == diff.end() ? empty : it->second;
}

const std::vector<FreeVec>& PieceTarget::act_at(int t, int i) const {
    static const std::vector<FreeVec> empty;
    auto it = act.find({t, i});
    return it == act.end() ? empty : it->second;
}

static FreeVec apply_cols(const std::vector<FreeVec>& cols, const FreeVec& v, const RingRef& R,
                          int out_rank) {
    FreeVec out(R, out_rank);
    for (size_t k = 0; k < v.comps.size() && k < cols.size(); ++k) {
        const Poly& c = v.comps[k];
        if (c.is_zero()) continue;
        for (int t = 0; t < out_rank; ++t)
            out.comps[(size_t)t] = out.comps[(size_t)t] + cols[k].comps[(size_t)t] * c;
    }
    return out;
}

FreeVec PieceTarget::act_mask(ExtMon mask, int i, const FreeVec& v) const {
    // (e_{s1} e_{s2} ...) m = e_{s1} (e_{s2} (... m)); apply from the right
    FreeVec cur = v;
    int deg = i;
    std::vector<int> bits;
    for (int t = 0; t < 32; ++t)
        if (mask & (1u << t)) bits.push_back(t);
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        int t = *it;
        int gdeg = host->ext_gens()[(size_t)t].degree;
        cur = apply_cols(act_at(t, deg), cur, host->base(), rank_at(deg + gdeg));
        deg += gdeg;
    }
    return cur;
}

FreeVec PieceTarget::apply_diff(int i, const FreeVec& v) const {
    return apply_cols(diff_at(i), v, host->base(), rank_at(i + 1));
}

PieceTarget target_of_semifree(const SemiFreeDGMod& m, int lo, int hi) {
    PieceTarget tgt;
    tgt.host = m.ring();
    tgt.top = m.top_degree();
    tgt.struct_bottom = m.n_gens() ? m.bottom_degree() : 0;
    Expansion e = expand(m, lo, hi + 1);
    for (int i = lo; i <= hi + 1; ++i) {
        int r = (int)e.basis[i].size();
        if (r) tgt.rank[i] = r;
    }
    for (int i = lo; i <= hi; ++i)
        if (!e.diff[i].empty()) tgt.diff[i] = e.diff[i];
    // exterior action on the (gen, mask) basis: pure sign bookkeeping
    const DGRingRef& A = m.ring();
    const RingRef& R = A->base();
    Poly one = Poly::constant(R, FieldElem::one(R->field()));
    for (int t = 0; t < A->n_ext(); ++t) {
        int gdeg = A->ext_gens()[(size_t)t].degree;
        for (int i = lo; i <= hi + 1; ++i) {
            if (i + gdeg < lo || !tgt.rank_at(i)) continue;
            const auto& src_basis = e.basis[i];
            const auto& dst_basis = e.basis[i + gdeg];
            std::vector<FreeVec> cols;
            for (const auto& [j, mask] : src_basis) {
                FreeVec col(R, (int)dst_basis.size());
                if (!(mask & (1u << t))) {
                    ExtMon nm = mask | (1u << t);
                    int sgn = ext_mul_sign(1u << t, mask);
                    for (size_t k = 0; k < dst_basis.size(); ++k)
                        if (dst_basis[k].first == j && dst_basis[k].second == nm) {
                            col.comps[k] = sgn < 0 ? -one : one;
                            break;
                        }
                }
                cols.push_back(col);
            }
            tgt.act[{t, i}] = cols;
        }
    }
    return tgt;
}

PieceTarget target_of_module(const DGRingRef& host, const ModulePres& w) {
    PieceTarget tgt;
    tgt.host = host;
    tgt.top = 0;
    tgt.struct_bottom = 0;
    require(w.ring->ambient()->same_presentation(*host->base()->ambient()), errc::ring_mismatch,
            "module target must live over the host degree-0 ring");
    if (w.n_gens == 0) return tgt;
    tgt.rank[0] = w.n_gens;
    const RingRef& R = host->base();
    std::vector<FreeVec> rels;
    for (const auto& r : w.relations) rels.push_back(into_ring(lift_vec(r, R->ambient()), R));
    // relations of the module's own ring that are not already in the base
    for (const auto& q : w.ring->ideal_gb()) {
        if (ideal_contains(R->ideal_gb(), q)) continue;
        for (int j = 0; j < w.n_gens; ++j)
            rels.push_back(FreeVec::basis(R, w.n_gens, j).times(q.into(R)));
    }
    if (!rels.empty()) tgt.rels[0] = rels;
    return tgt;
}

PieceTarget target_along_map(const DGRingMap& f, const SemiFreeDGMod& m, int lo, int hi) {
    require(same_dgring(f.tgt(), m.ring()), errc::map_mismatch,
            "module must live over the target of the map");
    const DGRingRef &A = f.src(), &B = f.tgt();
    const RingRef &RA = A->base(), &RB = B->base();
    // shape: every target variable is a source variable mapping to itself
    std::vector<int> var_of((size_t)RB->nvars(), -1);
    for (int v = 0; v < RB->nvars(); ++v) {
        int idx = RA->var_index(RB->vars()[(size_t)v]);
        require(idx >= 0, errc::unsupported_ring,
                "view along map: target variable " + RB->vars()[(size_t)v] +
                    " is not a source variable");
        const Poly& img = f.var_images()[(size_t)idx];
        require(img == Poly::variable(RB, v).into(RB), errc::unsupported_ring,
                "view along map: variable " + RB->vars()[(size_t)v] + " must map to itself");
        var_of[(size_t)v] = idx;
    }
    auto transport = [&](const Poly& p) { // B^0 poly -> A^0 poly by variable names
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            Expo e;
            for (int v = 0; v < RB->nvars(); ++v)
                e.e[(size_t)var_of[(size_t)v]] = t.mon.e[(size_t)v];
            ts.push_back({e, t.coeff});
        }
        std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
            return RA->ambient()->order().compare(x.mon, y.mon, RA->nvars()) > 0;
        });
        return Poly::from_sorted(RA->ambient(), ts).into(RA);
    };
    // kernel ideal of A^0 ->> B^0: target ideal transported + (x - f(x))
    std::vector<Poly> kernel_gens;
    for (const auto& q : RB->ideal_gb()) kernel_gens.push_back(transport(q.with_ring(RB)));
    for (int v = 0; v < RA->nvars(); ++v) {
        Poly diffp = Poly::variable(RA, v).into(RA) - transport(f.var_images()[(size_t)v]);
        if (!diffp.is_zero()) kernel_gens.push_back(diffp);
    }

    PieceTarget tgt;
    tgt.host = A;
    tgt.top = m.top_degree();
    tgt.struct_bottom = m.n_gens() ? m.bottom_degree() : 0;
    Expansion e = expand(m, lo, hi + 1);
    auto transport_vec = [&](const FreeVec& v) {
        FreeVec out(RA, v.rank());
        for (int k = 0; k < v.rank(); ++k) out.comps[(size_t)k] = transport(v.comps[(size_t)k]);
        return out;
    };
    for (int i = lo; i <= hi + 1; ++i) {
        int r = (int)e.basis[i].size();
        if (!r) continue;
        tgt.rank[i] = r;
        std::vector<FreeVec> rels;
        for (const auto& q : kernel_gens)
            for (int j = 0; j < r; ++j)
                rels.push_back(FreeVec::basis(RA, r, j).times(q));
        if (!rels.empty()) tgt.rels[i] = rels;
    }
    for (int i = lo; i <= hi; ++i) {
        std::vector<FreeVec> cols;
        for (const auto& c : e.diff[i]) cols.push_back(transport_vec(c));
        if (!cols.empty()) tgt.diff[i] = cols;
    }
    // action of the source exterior generators through their images
    Poly oneB = Poly::constant(RB, FieldElem::one(RB->field()));
    for (int t = 0; t < A->n_ext(); ++t) {
        const DGElem& img = f.gen_images()[(size_t)t];
        int gdeg = A->ext_gens()[(size_t)t].degree;
        for (int i = lo; i <= hi + 1; ++i) {
            if (i + gdeg < lo || !tgt.rank_at(i)) continue;
            const auto& src_basis = e.basis[i];
            const auto& dst_basis = e.basis[i + gdeg];
            std::vector<FreeVec> cols;
            for (const auto& [j, mask] : src_basis) {
                FreeVec col(RA, (int)dst_basis.size());
                // img * (eps_mask g_j) inside M over B
                DGElem prod = img * DGElem::monomial(B, mask, oneB);
                for (const auto& [u, c] : prod.terms())
                    for (size_t k = 0; k < dst_basis.size(); ++k)
                        if (dst_basis[k].first == j && dst_basis[k].second == u)
                            col.comps[k] = col.comps[k] + transport(c);
                cols.push_back(col);
            }
            tgt.act[{t, i}] = cols;
        }
    }
    return tgt;
}

// ---- the killing-cycles builder ----

namespace {

struct Builder {
    const PieceTarget& tgt;
    DGRingRef host;
    RingRef base;
    SemiFreeDGMod P;
    std::vector<FreeVec> images; // phi(g_k) in cover of deg(g_k)

    explicit Builder(const PieceTarget& t)
        : tgt(t), host(t.host), base(t.host->base()), P(SemiFreeDGMod::free_module(t.host, {})) {}

    // phi on an expansion basis slot (gen k, mask S)
    FreeVec phi_slot(int k, ExtMon mask) const {
        int gdeg = P.gen_degree(k);
        return tgt.act_mask(mask, gdeg, images[(size_t)k]);
    }
    FreeVec phi_vec(const Expansion& e, int i, const FreeVec& v) const {
        FreeVec out(base, tgt.rank_at(i));
        const auto& b = e.basis.at(i);
        for (size_t s = 0; s < b.size(); ++s) {
            const Poly& c = v.comps[s];
            if (c.is_zero()) continue;
            FreeVec w = phi_slot(b[s].first, b[s].second);
            for (int r = 0; r < out.rank(); ++r)
                out.comps[(size_t)r] = out.comps[(size_t)r] + w.comps[(size_t)r] * c;
        }
        return out;
    }

    // convert an expansion vector at degree i into a differential column
    void set_column_from_vec(const Expansion& e, int i, int gen_idx, const FreeVec& v) {
        const auto& b = e.basis.at(i);
        std::map<int, std::vector<std::pair<ExtMon, Poly>>> per_gen;
        for (size_t s = 0; s < b.size(); ++s)
            if (!v.comps[s].is_zero()) per_gen[b[s].first].push_back({b[s].second, v.comps[s]});
        for (auto& [k, ts] : per_gen)
            P.set_entry(k, gen_idx, DGElem::from_terms(host, std::move(ts)));
    }

    void step(int i, int& counter) {
        int rank_i = tgt.rank_at(i), rank_i1 = tgt.rank_at(i + 1);
        // target cycles and the modding set at degree i
        std::vector<FreeVec> zgens;
        if (rank_i) {
            if (tgt.diff_at(i).empty()) {
                for (int k = 0; k < rank_i; ++k) zgens.push_back(FreeVec::basis(base, rank_i, k));
            } else {
                zgens = kernel_mod(tgt.diff_at(i), tgt.rels_at(i + 1), base, rank_i1);
            }
        }
        std::vector<FreeVec> mod_i = tgt.rels_at(i);
        for (const auto& c : tgt.diff_at(i - 1))
            if (!c.is_zero()) mod_i.push_back(c);

        // P expansion and phi on cycles of P at degrees i, i+1
        Expansion e = P.n_gens() ? expand(P, i - 1, i + 2) : Expansion{};
        std::vector<FreeVec> pz_i1, phiz_i1;
        std::vector<FreeVec> pbound_i1;
        if (P.n_gens()) {
            int pr1 = (int)e.basis[i + 1].size(), pr2 = (int)e.basis[i + 2].size();
            if (pr1) {
                std::vector<FreeVec> cols = e.diff[i + 1];
                if (pr2 == 0) {
                    for (int k = 0; k < pr1; ++k) pz_i1.push_back(FreeVec::basis(base, pr1, k));
                } else {
                    pz_i1 = kernel_mod(cols, {}, base, pr2);
                }
                for (const auto& z : pz_i1) phiz_i1.push_back(phi_vec(e, i + 1, z));
                for (const auto& c : e.diff[i])
                    if (!c.is_zero()) pbound_i1.push_back(c);
            }
        }

        // 1) kill the kernel of H^{i+1}(phi): classes of P-cycles mapping
        //    into boundaries + relations
        if (!pz_i1.empty()) {
            std::vector<FreeVec> mod_i1 = tgt.rels_at(i + 1);
            for (const auto& c : tgt.diff_at(i))
                if (!c.is_zero()) mod_i1.push_back(c);
            std::vector<FreeVec> ker;
            if (rank_i1 == 0) {
                for (size_t u = 0; u < pz_i1.size(); ++u)
                    ker.push_back(FreeVec::basis(base, (int)pz_i1.size(), (int)u));
            } else {
                ker = kernel_mod(phiz_i1, mod_i1, base, rank_i1);
            }
            SubmoduleGB pbound_gb = submodule_gb(pbound_i1, base, (int)e.basis[i + 1].size());
            std::vector<FreeVec> sys = tgt.diff_at(i);
            size_t n_dcols = sys.size();
            for (const auto& r : tgt.rels_at(i + 1)) sys.push_back(r);
            SpanWithCofactors sys_span;
            bool have_span = false;
            std::vector<FreeVec> zc_added;
            for (const auto& c : ker) {
                // P-side cycle
                FreeVec zc(base, (int)e.basis[i + 1].size());
                for (size_t u = 0; u < pz_i1.size(); ++u) {
                    if (c.comps[u].is_zero()) continue;
                    for (int r = 0; r < zc.rank(); ++r)
                        zc.comps[(size_t)r] =
                            zc.comps[(size_t)r] + pz_i1[u].comps[(size_t)r] * c.comps[u];
                }
                FreeVec zred = pbound_gb.reduce(zc);
                if (zred.is_zero()) continue; // class already dies in H(P)
                bool dup = false;
                for (const auto& prev : zc_added)
                    if (prev == zred) dup = true;
                if (dup) continue;
                // solve d_M(w) = phi(zc) modulo relations
                FreeVec img = phi_vec(e, i + 1, zc);
                FreeVec w(base, rank_i);
                if (!img.is_zero()) {
                    if (!have_span) {
                        sys_span = SpanWithCofactors(sys, base, rank_i1);
                        have_span = true;
                    }
                    std::vector<Poly> coeff;
                    bool ok = sys_span.lift(img, coeff);
                    require(ok, errc::internal, "kernel class image is not a boundary");
                    for (size_t u = 0; u < n_dcols; ++u) w.comps[u] = coeff[u];
                }
                int g = P.add_gen("g" + std::to_string(counter++), i);
                images.push_back(w);
                set_column_from_vec(e, i + 1, g, zc);
                (void)g;
                zc_added.push_back(zred);
                // fold the killed cycle into the boundary span so later
                // kernel classes are tested against it
                pbound_i1.push_back(zc);
                pbound_gb = submodule_gb(pbound_i1, base, (int)e.basis[i + 1].size());
            }
        }

        // 2) make H^i(phi) surjective: adjoin generators onto unreached
        //    cycle classes of the target
        if (!zgens.empty()) {
            std::vector<FreeVec> reached = mod_i;
            if (P.n_gens() && e.basis.count(i)) {
                int pr0 = (int)e.basis[i].size(), pr1 = (int)e.basis[i + 1].size();
                if (pr0) {
                    std::vector<FreeVec> pz_i;
                    if (pr1 == 0) {
                        for (int k = 0; k < pr0; ++k)
                            pz_i.push_back(FreeVec::basis(base, pr0, k));
                    } else {
                        pz_i = kernel_mod(e.diff[i], {}, base, pr1);
                    }
                    for (const auto& z : pz_i) {
                        FreeVec fz = phi_vec(e, i, z);
                        if (!fz.is_zero()) reached.push_back(fz);
                    }
                }
            }
            SubmoduleGB reach_gb = submodule_gb(reached, base, rank_i);
            for (const auto& z : zgens) {
                FreeVec red = reach_gb.reduce(z);
                if (red.is_zero()) continue;
                P.add_gen("g" + std::to_string(counter++), i);
                images.push_back(red);
                reached.push_back(red);
                reach_gb = submodule_gb(reached, base, rank_i);
            }
        }
    }
};

} // namespace

TruncatedComplex semifree_resolution_target(const PieceTarget& tgt, int top, int floor) {
    require(floor <= top, errc::window_infeasible, "resolution floor above its top");
    Builder b(tgt);
    int counter = 0;
    for (int i = top; i >= floor; --i) b.step(i, counter);
    validate_semifree(b.P);
    TruncatedComplex out;
    out.complex = b.P;
    out.gen_floor = floor;
    out.cert_lo = floor + 1;
    out.cert_hi = INT_MAX; // caller intersects with the ceiling actually used
    // over a degree-0 host, generators stopping strictly above the floor
    // mean the resolution terminated: both sides have vanishing cohomology
    // below the last generator, so the quasi-isomorphism is global
    if (tgt.host->n_ext() == 0 && b.P.n_gens()) {
        int dmin = b.P.min_gen_degree();
        if (dmin > floor && tgt.struct_bottom != INT_MIN && tgt.struct_bottom >= dmin)
            out.cert_lo = INT_MIN;
    }
    return out;
}

TruncatedComplex semifree_resolution(const SemiFreeDGMod& m, int floor) {
    int top = m.top_degree();
    int lo = floor + m.ring()->bottom_degree() - 1;
    TruncatedComplex res =
        semifree_resolution_target(target_of_semifree(m, lo, top), top, floor);
    return res;
}

TruncatedComplex semifree_resolution(const DGRingRef& host, const ModulePres& w, int floor) {
    return semifree_resolution_target(target_of_module(host, w), 0, floor);
}

SemiFreeDGMod finite_free_resolution(const ModulePres& m) {
    require(m.ring->is_polynomial_ring(), errc::not_regular_ring,
            "finite free resolutions require a polynomial ring");
    const RingRef& R = m.ring;
    auto A = DGRing::of_ring(R);
    std::vector<SfGen> gens;
    for (int j = 0; j < m.n_gens; ++j) gens.push_back({"f0_" + std::to_string(j), 0});
    SemiFreeDGMod cx = SemiFreeDGMod::free_module(A, gens);
    std::vector<int> stage_offset = {0};
    int rank = m.n_gens;
    std::vector<FreeVec> current = prune_generators(m.relations, R, rank);
    int stage = 1;
    int guard = R->nvars() + 2;
    while (!current.empty()) {
        require(stage <= guard, errc::internal, "free resolution exceeded the syzygy bound");
        int off = cx.n_gens();
        stage_offset.push_back(off);
        for (size_t j = 0; j < current.size(); ++j) {
            int g = cx.add_gen("f" + std::to_string(stage) + "_" + std::to_string(j), -stage);
            for (int r = 0; r < rank; ++r) {
                const Poly& c = current[j].comps[(size_t)r];
                if (!c.is_zero())
                    cx.set_entry(stage_offset[(size_t)(stage - 1)] + r, g, DGElem::from_poly(A, c));
            }
        }
        auto syz = syzygies(current, R, rank);
        rank = (int)current.size();
        current = prune_generators(syz, R, rank);
        ++stage;
    }
    validate_semifree(cx);
    return cx;
}

DiagonalResolution diagonal_resolution(const DGRingRef& a, int floor) {
    DiagonalResolution out{enveloping(a), TruncatedComplex{}};
    SemiFreeDGMod unit_a = SemiFreeDGMod::unit(a);
    int lo = floor + out.env.ring->bottom_degree() - 1;
    PieceTarget tgt = target_along_map(out.env.mult, unit_a, std::min(lo, 0), 0);
    out.res = semifree_resolution_target(tgt, 0, floor);
    return out;
}

} // namespace dgd
