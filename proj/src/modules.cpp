#include "dgd/modules.hpp"

#include <algorithm>
#include <map>

namespace dgd {

bool ModulePres::is_zero_module() const {
    if (n_gens == 0) return true;
    // zero iff every basis vector lies in the relation span
    SubmoduleGB s = submodule_gb(relations, ring, n_gens);
    for (int j = 0; j < n_gens; ++j)
        if (!s.contains(FreeVec::basis(ring, n_gens, j))) return false;
    return true;
}

std::string ModulePres::to_string() const {
    std::string s = "gens " + std::to_string(n_gens) + "; rels [";
    for (size_t i = 0; i < relations.size(); ++i) {
        if (i) s += ", ";
        s += relations[i].to_string();
    }
    return s + "]";
}

FreeVec lift_vec(const FreeVec& v, const RingRef& ambient) {
    FreeVec r(ambient, v.rank());
    for (int i = 0; i < v.rank(); ++i) r.comps[(size_t)i] = v.comps[(size_t)i].with_ring(ambient);
    return r;
}

FreeVec into_ring(const FreeVec& v, const RingRef& ring) {
    FreeVec r(ring, v.rank());
    for (int i = 0; i < v.rank(); ++i) r.comps[(size_t)i] = v.comps[(size_t)i].into(ring);
    return r;
}

static std::vector<FreeVec> lifted_with_ideal(const std::vector<FreeVec>& gens,
                                              const RingRef& ring, int rank,
                                              size_t* n_lifted = nullptr) {
    RingRef amb = ring->ambient();
    std::vector<FreeVec> out;
    for (const auto& g : gens) out.push_back(lift_vec(g, amb));
    if (n_lifted) *n_lifted = out.size();
    for (const auto& q : ring->ideal_gb())
        for (int j = 0; j < rank; ++j)
            out.push_back(FreeVec::basis(amb, rank, j).times(q.with_ring(amb)));
    return out;
}

SubmoduleGB submodule_gb(const std::vector<FreeVec>& gens, const RingRef& ring, int rank) {
    SubmoduleGB s;
    s.ring = ring;
    s.rank = rank;
    auto lifted = lifted_with_ideal(gens, ring, rank);
    s.gb = buchberger_module(lifted, ring->ambient(), rank, ModuleOrder{});
    return s;
}

FreeVec SubmoduleGB::reduce(const FreeVec& v) const {
    FreeVec lv = lift_vec(v, ring->ambient());
    FreeVec nf = normal_form(lv, gb, ModuleOrder{});
    return into_ring(nf, ring);
}

bool SubmoduleGB::contains(const FreeVec& v) const { return reduce(v).is_zero(); }

std::vector<FreeVec> syzygies(const std::vector<FreeVec>& gens, const RingRef& ring, int rank) {
    RingRef amb = ring->ambient();
    size_t m = 0;
    auto all = lifted_with_ideal(gens, ring, rank, &m);
    size_t total = all.size();
    int big = rank + (int)total;
    std::vector<FreeVec> ws;
    for (size_t i = 0; i < total; ++i) {
        FreeVec w(amb, big);
        for (int j = 0; j < rank; ++j) w.comps[(size_t)j] = all[i].comps[(size_t)j];
        w.comps[(size_t)(rank + (int)i)] = Poly::constant(amb, FieldElem::one(amb->field()));
        ws.push_back(w);
    }
    ModuleOrder mo;
    mo.front_block = rank;
    auto gb = buchberger_module(ws, amb, big, mo);
    std::vector<FreeVec> syz;
    for (const auto& g : gb) {
        bool front_zero = true;
        for (int j = 0; j < rank && front_zero; ++j)
            if (!g.comps[(size_t)j].is_zero()) front_zero = false;
        if (!front_zero) continue;
        FreeVec v(ring, (int)gens.size());
        bool nonzero = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            Poly c = g.comps[(size_t)(rank + (int)i)].into(ring);
            if (!c.is_zero()) nonzero = true;
            v.comps[i] = c;
        }
        if (nonzero) syz.push_back(v);
    }
    // canonicalize over the original ring
    if (!syz.empty())
        syz = buchberger_module(lifted_with_ideal(syz, ring, (int)gens.size()), amb,
                                (int)gens.size(), ModuleOrder{});
    std::vector<FreeVec> out;
    for (const auto& s : syz) {
        FreeVec v = into_ring(s, ring);
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

ModulePres syzygy_presentation(const std::vector<FreeVec>& gens, const RingRef& ring,
                               int rank) {
    ModulePres m;
    m.ring = ring;
    m.n_gens = (int)gens.size();
    m.relations = syzygies(gens, ring, rank);
    return m;
}

std::vector<FreeVec> kernel_mod(const std::vector<FreeVec>& cols,
                                const std::vector<FreeVec>& rels, const RingRef& ring, int b) {
    std::vector<FreeVec> all = cols;
    for (const auto& r : rels) all.push_back(r);
    auto syz = syzygies(all, ring, b);
    std::vector<FreeVec> out;
    for (const auto& s : syz) {
        FreeVec v(ring, (int)cols.size());
        bool nonzero = false;
        for (size_t i = 0; i < cols.size(); ++i) {
            v.comps[i] = s.comps[i];
            if (!v.comps[i].is_zero()) nonzero = true;
        }
        if (nonzero) out.push_back(v);
    }
    return prune_generators(out, ring, (int)cols.size());
}

SpanWithCofactors::SpanWithCofactors(const std::vector<FreeVec>& gens, RingRef ring,
                                     int rank)
    : ring_(std::move(ring)), rank_(rank) {
    RingRef amb = ring_->ambient();
    auto all = lifted_with_ideal(gens, ring_, rank, &m_);
    int big = rank + (int)all.size();
    std::vector<FreeVec> ws;
    for (size_t i = 0; i < all.size(); ++i) {
        FreeVec w(amb, big);
        for (int j = 0; j < rank; ++j) w.comps[(size_t)j] = all[i].comps[(size_t)j];
        w.comps[(size_t)(rank + (int)i)] = Poly::constant(amb, FieldElem::one(amb->field()));
        ws.push_back(w);
    }
    mo_.front_block = rank;
    big_ = big;
    gbw_ = buchberger_module(ws, amb, big, mo_);
}

bool SpanWithCofactors::lift(const FreeVec& v, std::vector<Poly>& coeffs) const {
    RingRef amb = ring_->ambient();
    FreeVec ext(amb, big_);
    FreeVec lv = lift_vec(v, amb);
    for (int j = 0; j < rank_; ++j) ext.comps[(size_t)j] = lv.comps[(size_t)j];
    FreeVec red = normal_form(ext, gbw_, mo_);
    for (int j = 0; j < rank_; ++j)
        if (!red.comps[(size_t)j].is_zero()) return false;
    coeffs.assign(m_, Poly(ring_));
    for (size_t i = 0; i < m_; ++i)
        coeffs[i] = (-red.comps[(size_t)(rank_ + (int)i)]).into(ring_);
    return true;
}

bool SpanWithCofactors::contains(const FreeVec& v) const {
    std::vector<Poly> c;
    return lift(v, c);
}

bool lift_through(const std::vector<FreeVec>& gens, const RingRef& ring, int rank,
                  const FreeVec& v, std::vector<Poly>& coeffs) {
    SpanWithCofactors span(gens, ring, rank);
    return span.lift(v, coeffs);
}

long k_dimension(const ModulePres& m) {
    if (m.n_gens == 0) return 0;
    SubmoduleGB s = submodule_gb(m.relations, m.ring, m.n_gens);
    const RingRef amb = m.ring->ambient();
    int nv = amb->nvars();
    ModuleOrder mo;
    // collect leads per position
    std::vector<std::vector<Expo>> leads((size_t)m.n_gens);
    for (const auto& g : s.gb) {
        auto lt = lead_term(g, mo);
        leads[(size_t)lt->pos].push_back(lt->mon);
    }
    long total = 0;
    for (int j = 0; j < m.n_gens; ++j) {
        // per-variable bound from pure-power leads
        std::vector<int> bound((size_t)nv, -1);
        for (const auto& l : leads[(size_t)j]) {
            int nzvar = -1, nz = 0;
            for (int v = 0; v < nv; ++v)
                if (l.e[(size_t)v]) {
                    ++nz;
                    nzvar = v;
                }
            if (nz == 0) {
                // unit leads: position j entirely in the module
                bound.assign((size_t)nv, 0);
                break;
            }
            if (nz == 1 && (bound[(size_t)nzvar] < 0 ||
                            l.e[(size_t)nzvar] < bound[(size_t)nzvar]))
                bound[(size_t)nzvar] = l.e[(size_t)nzvar];
        }
        long slots = 1;
        for (int v = 0; v < nv; ++v) {
            if (bound[(size_t)v] < 0) return -1; // no pure power: infinite
            slots *= bound[(size_t)v];
            require(slots <= 100000000L, errc::internal, "k_dimension enumeration too large");
        }
        // enumerate standard monomials below the bounds
        std::vector<int> cur((size_t)nv, 0);
        for (long it = 0; it < slots; ++it) {
            Expo e;
            long t = it;
            for (int v = 0; v < nv; ++v) {
                int b = std::max(bound[(size_t)v], 1);
                e.e[(size_t)v] = (uint16_t)(t % b);
                t /= b;
            }
            bool standard = true;
            for (const auto& l : leads[(size_t)j])
                if (l.divides(e)) {
                    standard = false;
                    break;
                }
            if (standard) ++total;
        }
    }
    return total;
}

int min_gens(const ModulePres& m) {
    if (m.n_gens == 0) return 0;
    const RingRef amb = m.ring->ambient();
    // GB of ideal + (all variables): either contains 1 or equals (vars)
    std::vector<Poly> gens0 = m.ring->ideal_gb();
    for (auto& g : gens0) g = g.with_ring(amb);
    for (int v = 0; v < amb->nvars(); ++v) gens0.push_back(Poly::variable(amb, v));
    auto gb0 = buchberger(gens0, amb);
    for (const auto& g : gb0)
        if (!g.is_zero() && g.lead().mon.is_one()) return 0; // origin not on Spec
    // evaluate relations at 0 and compute the k-rank
    std::vector<std::vector<FieldElem>> cols;
    for (const auto& r : m.relations) {
        std::vector<FieldElem> col((size_t)m.n_gens, FieldElem::zero(amb->field()));
        bool nonzero = false;
        for (int j = 0; j < m.n_gens; ++j) {
            for (const auto& t : r.comps[(size_t)j].terms())
                if (t.mon.is_one()) {
                    col[(size_t)j] = t.coeff;
                    if (!t.coeff.is_zero()) nonzero = true;
                }
        }
        if (nonzero) cols.push_back(col);
    }
    // Gaussian elimination
    int rank = 0;
    std::vector<std::vector<FieldElem>> rows;
    for (auto& c : cols) rows.push_back(c);
    std::vector<bool> used(rows.size(), false);
    for (int j = 0; j < m.n_gens; ++j) {
        int piv = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && !rows[i][(size_t)j].is_zero()) {
                piv = (int)i;
                break;
            }
        if (piv < 0) continue;
        used[(size_t)piv] = true;
        ++rank;
        for (size_t i = 0; i < rows.size(); ++i) {
            if ((int)i == piv || rows[i][(size_t)j].is_zero()) continue;
            FieldElem f = rows[i][(size_t)j] / rows[(size_t)piv][(size_t)j];
            for (int l = 0; l < m.n_gens; ++l)
                rows[i][(size_t)l] = rows[i][(size_t)l] - f * rows[(size_t)piv][(size_t)l];
        }
    }
    return m.n_gens - rank;
}

std::vector<Poly> annihilator(const ModulePres& m) {
    const RingRef& R = m.ring;
    RingRef amb = R->ambient();
    if (m.n_gens == 0) {
        // annihilator of the zero module is the unit ideal
        return {Poly::constant(amb, FieldElem::one(amb->field()))};
    }
    std::vector<Poly> acc;
    bool first = true;
    for (int j = 0; j < m.n_gens; ++j) {
        std::vector<FreeVec> list;
        list.push_back(FreeVec::basis(R, m.n_gens, j));
        for (const auto& r : m.relations) list.push_back(r);
        auto syz = syzygies(list, R, m.n_gens);
        std::vector<Poly> quot;
        for (const auto& s : syz)
            if (!s.comps[0].is_zero()) quot.push_back(s.comps[0].with_ring(amb));
        if (first) {
            acc = quot;
            first = false;
        } else {
            acc = ideal_intersection(acc, quot, R);
        }
        if (acc.empty()) return {}; // annihilator is zero
    }
    // canonical reduced GB over the quotient: GB of (acc + ideal), drop ideal part
    std::vector<Poly> gens = acc;
    for (const auto& q : R->ideal_gb()) gens.push_back(q.with_ring(amb));
    auto gb = buchberger(gens, amb);
    std::vector<Poly> out;
    for (const auto& g : gb)
        if (!ideal_contains(R->ideal_gb(), g)) out.push_back(g);
    return out;
}

std::vector<Poly> ideal_intersection(const std::vector<Poly>& a, const std::vector<Poly>& b,
                                     const RingRef& ring) {
    if (a.empty() || b.empty()) return {};
    std::vector<FreeVec> list;
    for (const auto& p : a) {
        FreeVec v(ring, 1);
        v.comps[0] = p.into(ring);
        list.push_back(v);
    }
    for (const auto& p : b) {
        FreeVec v(ring, 1);
        v.comps[0] = p.into(ring);
        list.push_back(v);
    }
    auto syz = syzygies(list, ring, 1);
    RingRef amb = ring->ambient();
    std::vector<Poly> gens;
    for (const auto& s : syz) {
        Poly u(amb);
        for (size_t i = 0; i < a.size(); ++i)
            u = u + s.comps[i].with_ring(amb) * a[i].with_ring(amb);
        u = u.into(ring).with_ring(amb);
        if (!u.is_zero()) gens.push_back(u);
    }
    if (gens.empty()) return {};
    return buchberger(gens, amb);
}

std::vector<FreeVec> prune_generators(const std::vector<FreeVec>& gens, const RingRef& ring,
                                      int rank) {
    std::vector<FreeVec> kept;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        kept.push_back(g);
    }
    // greedily drop generators contained in the span of the others
    for (size_t i = kept.size(); i-- > 0;) {
        std::vector<FreeVec> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        SubmoduleGB s = submodule_gb(others, ring, rank);
        if (s.contains(kept[i])) kept.erase(kept.begin() + (long)i);
    }
    return kept;
}

ModulePres canonical_presentation(ModulePres m) {
    if (m.relations.empty()) return m;
    SubmoduleGB s = submodule_gb(m.relations, m.ring, m.n_gens);
    std::vector<FreeVec> rels;
    for (const auto& g : s.gb) {
        FreeVec v = into_ring(g, m.ring);
        if (!v.is_zero()) rels.push_back(v);
    }
    m.relations = std::move(rels);
    return m;
}

// ---- ring map utilities ----

Poly RingMapData::apply(const Poly& p) const {
    Poly out(tgt);
    for (const auto& t : p.terms()) {
        Poly term = Poly::constant(tgt, t.coeff);
        for (int v = 0; v < src->nvars(); ++v)
            for (int k = 0; k < t.mon.e[(size_t)v]; ++k) term = term * images[(size_t)v];
        out = out + term;
    }
    return out.into(tgt);
}

// Combined ring k[tgt vars, src vars'] with an elimination block on the
// target variables; source variables are suffixed to stay distinct.
struct GraphRing {
    RingRef ring;
    int n_tgt = 0; // first block
};

static GraphRing graph_ring(const RingMapData& f) {
    GraphRing g;
    std::vector<std::string> vars = f.tgt->vars();
    for (const auto& v : f.src->vars()) vars.push_back(v + "_src");
    MonomialOrder ord;
    ord.kind = MonomialOrder::Kind::grevlex;
    ord.n_elim = f.tgt->nvars();
    g.n_tgt = f.tgt->nvars();
    g.ring = Ring::poly_ring(f.tgt->field(), vars, ord);
    return g;
}

static Poly transplant(const Poly& p, const RingRef& to, int shift) {
    // moves variable i -> i + shift
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Expo e;
        for (int v = 0; v < kMaxVars - shift; ++v) e.e[(size_t)(v + shift)] = t.mon.e[(size_t)v];
        ts.push_back({e, t.coeff});
    }
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
        return to->order().compare(x.mon, y.mon, to->nvars()) > 0;
    });
    return Poly::from_sorted(to, ts);
}

static std::vector<Poly> graph_ideal(const RingMapData& f, const GraphRing& g) {
    std::vector<Poly> gens;
    for (const auto& q : f.tgt->ideal_gb()) gens.push_back(transplant(q, g.ring, 0));
    for (int v = 0; v < f.src->nvars(); ++v) {
        Poly lhs = Poly::variable(g.ring, g.n_tgt + v);
        Poly rhs = transplant(f.images[(size_t)v].with_ring(f.tgt->ambient()), g.ring, 0);
        gens.push_back(lhs - rhs);
    }
    return gens;
}

bool is_module_finite(const RingMapData& f) {
    GraphRing g = graph_ring(f);
    auto gb = buchberger(graph_ideal(f, g), g.ring);
    for (int j = 0; j < g.n_tgt; ++j) {
        bool found = false;
        for (const auto& e : gb) {
            const Expo& l = e.lead().mon;
            bool pure = l.e[(size_t)j] > 0;
            for (int v = 0; v < g.ring->nvars() && pure; ++v)
                if (v != j && l.e[(size_t)v]) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Poly> preimage_ideal(const RingMapData& f, const std::vector<Poly>& J) {
    GraphRing g = graph_ring(f);
    auto gens = graph_ideal(f, g);
    for (const auto& p : J) gens.push_back(transplant(p.into(f.tgt).with_ring(f.tgt->ambient()), g.ring, 0));
    auto gb = buchberger(gens, g.ring);
    // keep elements in the source block only, map back
    RingRef samb = f.src->ambient();
    std::vector<Poly> out;
    for (const auto& e : gb) {
        bool src_only = true;
        for (const auto& t : e.terms())
            for (int v = 0; v < g.n_tgt && src_only; ++v)
                if (t.mon.e[(size_t)v]) src_only = false;
        if (!src_only) continue;
        // shift variables back: i + n_tgt -> i
        std::vector<Term> ts;
        for (const auto& t : e.terms()) {
            Expo e2;
            for (int v = 0; v < f.src->nvars(); ++v)
                e2.e[(size_t)v] = t.mon.e[(size_t)(v + g.n_tgt)];
            ts.push_back({e2, t.coeff});
        }
        std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
            return samb->order().compare(x.mon, y.mon, samb->nvars()) > 0;
        });
        Poly p = Poly::from_sorted(samb, ts);
        p = p.into(f.src).with_ring(samb);
        if (!p.is_zero()) out.push_back(p);
    }
    if (out.empty()) return {};
    // canonical over src: reduce modulo src ideal and take GB, dropping ideal members
    std::vector<Poly> all = out;
    for (const auto& q : f.src->ideal_gb()) all.push_back(q.with_ring(samb));
    auto gb2 = buchberger(all, samb);
    std::vector<Poly> fin;
    for (const auto& e : gb2)
        if (!ideal_contains(f.src->ideal_gb(), e)) fin.push_back(e);
    return fin;
}

} // namespace dgd
