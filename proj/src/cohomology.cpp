#include "dgd/cohomology.hpp"

#include <algorithm>

namespace dgd {

Expansion expand(const SemiFreeDGMod& m, int lo, int hi) {
    Expansion e;
    e.mod = &m;
    e.lo = lo;
    e.hi = hi;
    const DGRingRef& A = m.ring();
    const RingRef& R = A->base();
    for (int i = lo; i <= hi; ++i) {
        auto& b = e.basis[i];
        for (int j = 0; j < m.n_gens(); ++j)
            for (ExtMon mask : A->masks_of_degree(i - m.gen_degree(j)))
                b.push_back({j, mask});
    }
    auto index_of = [&](int i, int j, ExtMon mask) -> int {
        const auto& b = e.basis[i];
        for (size_t k = 0; k < b.size(); ++k)
            if (b[k].first == j && b[k].second == mask) return (int)k;
        return -1;
    };
    Poly one = Poly::constant(R, FieldElem::one(R->field()));
    for (int i = lo; i < hi; ++i) {
        auto& cols = e.diff[i];
        const auto& b = e.basis[i];
        int target_rank = (int)e.basis[i + 1].size();
        for (const auto& [j, mask] : b) {
            FreeVec col(R, target_rank);
            // d(e_S g_j) = d(e_S) g_j + (-1)^{|S|} e_S d(g_j)
            DGElem dS = A->d(DGElem::monomial(A, mask, one));
            for (const auto& [u, c] : dS.terms()) {
                int k = index_of(i + 1, j, u);
                require(k >= 0, errc::internal, "expansion: missing basis slot");
                col.comps[(size_t)k] = col.comps[(size_t)k] + c;
            }
            int sgn = A->mask_degree(mask) % 2 ? -1 : 1;
            DGElem eS = DGElem::monomial(A, mask, one);
            for (const auto& [l, a] : m.column(j)) {
                DGElem prod = eS * a;
                if (sgn < 0) prod = -prod;
                for (const auto& [u, c] : prod.terms()) {
                    int k = index_of(i + 1, l, u);
                    require(k >= 0, errc::internal, "expansion: missing basis slot");
                    col.comps[(size_t)k] = col.comps[(size_t)k] + c;
                }
            }
            cols.push_back(col);
        }
    }
    return e;
}

FreeVec expansion_apply_d(const Expansion& e, int i, const FreeVec& v) {
    const auto& cols = e.diff.at(i);
    int target_rank = (int)e.basis.at(i + 1).size();
    FreeVec out(v.ring, target_rank);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& c = v.comps[k];
        if (c.is_zero()) continue;
        for (int t = 0; t < target_rank; ++t)
            out.comps[(size_t)t] = out.comps[(size_t)t] + cols[k].comps[(size_t)t] * c;
    }
    return out;
}

ModulePres cohomology(const SemiFreeDGMod& m, int i) {
    const DGRingRef& A = m.ring();
    const RingRef& R = A->base();
    RingRef bar = A->bar();
    Expansion e = expand(m, i - 1, i + 1);
    int rank_i = (int)e.basis[i].size();
    if (rank_i == 0) return ModulePres{bar, 0, {}};
    // cycles: kernel of d^i into the free module of degree i+1
    std::vector<FreeVec> zgens;
    if (e.basis[i + 1].empty()) {
        for (int k = 0; k < rank_i; ++k) zgens.push_back(FreeVec::basis(R, rank_i, k));
    } else {
        zgens = kernel_mod(e.diff[i], {}, R, (int)e.basis[i + 1].size());
    }
    if (zgens.empty()) return ModulePres{bar, 0, {}};
    // boundaries: images of the degree i-1 basis
    std::vector<FreeVec> bgens;
    for (const auto& col : e.diff.count(i - 1) ? e.diff[i - 1] : std::vector<FreeVec>{})
        if (!col.is_zero()) bgens.push_back(col);
    // present H = Z/(B): generators zgens, relations = lifts of boundaries
    // through zgens plus the syzygies of zgens
    ModulePres h;
    h.ring = bar;
    h.n_gens = (int)zgens.size();
    SpanWithCofactors zspan(zgens, R, rank_i);
    for (const auto& b : bgens) {
        std::vector<Poly> c;
        bool ok = zspan.lift(b, c);
        require(ok, errc::internal, "boundary is not a cycle");
        FreeVec rel(bar, h.n_gens);
        bool nonzero = false;
        for (int k = 0; k < h.n_gens; ++k) {
            rel.comps[(size_t)k] = c[(size_t)k].into(bar);
            if (!rel.comps[(size_t)k].is_zero()) nonzero = true;
        }
        if (nonzero) h.relations.push_back(rel);
    }
    for (const auto& s : syzygies(zgens, R, rank_i)) {
        FreeVec rel(bar, h.n_gens);
        bool nonzero = false;
        for (int k = 0; k < h.n_gens; ++k) {
            rel.comps[(size_t)k] = s.comps[(size_t)k].into(bar);
            if (!rel.comps[(size_t)k].is_zero()) nonzero = true;
        }
        if (nonzero) h.relations.push_back(rel);
    }
    return canonical_presentation(std::move(h));
}

// ---- fingerprints ----

std::string FpEntry::to_string() const {
    if (finite) return "dim " + std::to_string(dim);
    std::string s = "gens " + std::to_string(mingens) + ", ann (";
    for (size_t i = 0; i < ann.size(); ++i) {
        if (i) s += ", ";
        s += ann[i];
    }
    return s + ")";
}

bool CohFingerprint::agrees_on(const CohFingerprint& o, int a, int b) const {
    for (int i = a; i <= b; ++i) {
        auto it = entries.find(i);
        auto jt = o.entries.find(i);
        require(it != entries.end() && jt != o.entries.end(), errc::window_violation,
                "fingerprint comparison outside computed window");
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

bool CohFingerprint::is_zero() const {
    for (const auto& [d, e] : entries)
        if (!e.finite || e.dim != 0) return false;
    return true;
}

std::string CohFingerprint::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, e] : entries) {
        if (e.finite && e.dim == 0) continue;
        if (!first) s += "; ";
        s += "H^" + std::to_string(d) + ": " + e.to_string();
        first = false;
    }
    return s + (first ? "0}" : "}");
}

FpEntry fingerprint_entry(const ModulePres& h) {
    FpEntry e;
    long d = k_dimension(h);
    if (d >= 0) {
        e.finite = true;
        e.dim = d;
        return e;
    }
    e.finite = false;
    e.mingens = min_gens(h);
    for (const auto& p : annihilator(h)) e.ann.push_back(p.to_string());
    return e;
}

FpEntry module_fingerprint_entry(const ModulePres& m) { return fingerprint_entry(m); }

CohFingerprint fingerprint(const SemiFreeDGMod& m, int lo, int hi) {
    CohFingerprint fp;
    fp.lo = lo;
    fp.hi = hi;
    for (int i = lo; i <= hi; ++i) fp.entries[i] = fingerprint_entry(cohomology(m, i));
    return fp;
}

FpEntry fingerprint_entry_through(const ModulePres& h, const RingMapData& bar_map) {
    FpEntry e;
    long d = k_dimension(h);
    if (d >= 0) {
        e.finite = true;
        e.dim = d;
        return e;
    }
    e.finite = false;
    // min gens over the source: dim_k H/(images of source variables)H
    ModulePres cut = h;
    for (const auto& img : bar_map.images)
        for (int j = 0; j < h.n_gens; ++j) {
            FreeVec rel(h.ring, h.n_gens);
            rel.comps[(size_t)j] = img.into(h.ring);
            if (!rel.is_zero()) cut.relations.push_back(rel);
        }
    long mg = k_dimension(cut);
    e.mingens = mg < 0 ? -1 : (int)mg; // -1: not finitely generated over the source
    for (const auto& p : preimage_ideal(bar_map, annihilator(h)))
        e.ann.push_back(p.to_string());
    return e;
}

CohFingerprint fingerprint_through(const SemiFreeDGMod& m, const DGRingMap& f, int lo, int hi) {
    require(same_dgring(m.ring(), f.tgt()), errc::map_mismatch,
            "restriction along a map with a different target");
    RingMapData bm = f.bar_map();
    CohFingerprint fp;
    fp.lo = lo;
    fp.hi = hi;
    for (int i = lo; i <= hi; ++i)
        fp.entries[i] = fingerprint_entry_through(cohomology(m, i), bm);
    return fp;
}

bool DGRingMap::is_quasi_iso(int lo, int hi) const {
    CohFingerprint src_fp = fingerprint(SemiFreeDGMod::unit(src_), lo, hi);
    CohFingerprint tgt_fp = fingerprint_through(SemiFreeDGMod::unit(tgt_), *this, lo, hi);
    return src_fp.agrees_on(tgt_fp, lo, hi);
}

} // namespace dgd
