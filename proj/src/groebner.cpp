#include "dgd/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dgd {

FreeVec FreeVec::operator+(const FreeVec& o) const {
    FreeVec r = *this;
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] + o.comps[i];
    return r;
}

FreeVec FreeVec::operator-(const FreeVec& o) const {
    FreeVec r = *this;
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] - o.comps[i];
    return r;
}

FreeVec FreeVec::operator-() const {
    FreeVec r = *this;
    for (auto& p : r.comps) p = -p;
    return r;
}

FreeVec FreeVec::times_monomial(const Expo& m, const FieldElem& c) const {
    FreeVec r = *this;
    for (auto& p : r.comps) p = p.times_monomial(m, c);
    return r;
}

FreeVec FreeVec::times(const Poly& p) const {
    FreeVec r(ring, rank());
    for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = comps[i] * p;
    return r;
}

FreeVec FreeVec::basis(const RingRef& r, int rank, int pos) {
    FreeVec v(r, rank);
    v.comps[(size_t)pos] = Poly::constant(r, FieldElem::one(r->field()));
    return v;
}

bool FreeVec::operator==(const FreeVec& o) const {
    if (comps.size() != o.comps.size()) return false;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i] != o.comps[i]) return false;
    return true;
}

std::string FreeVec::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ", ";
        s += comps[i].to_string();
    }
    return s + ")";
}

int ModuleOrder::compare(const Ring& ring, const Expo& m1, int p1, const Expo& m2,
                         int p2) const {
    bool f1 = p1 < front_block, f2 = p2 < front_block;
    if (f1 != f2) return f1 ? 1 : -1;
    int c = ring.order().compare(m1, m2, ring.nvars());
    if (c != 0) return c;
    if (p1 != p2) return p1 < p2 ? 1 : -1; // smaller position is larger
    return 0;
}

std::optional<ModTerm> lead_term(const FreeVec& v, const ModuleOrder& mo) {
    std::optional<ModTerm> best;
    for (int p = 0; p < v.rank(); ++p) {
        const Poly& c = v.comps[(size_t)p];
        if (c.is_zero()) continue;
        const Term& lt = c.lead();
        if (!best ||
            mo.compare(*v.ring, lt.mon, p, best->mon, best->pos) > 0)
            best = ModTerm{lt.mon, p, lt.coeff};
    }
    return best;
}

// ---- polynomial division ----

Poly divide_poly(const Poly& f, const std::vector<Poly>& gb, std::vector<Poly>* quotients) {
    const RingRef& R = f.ring();
    if (quotients) quotients->assign(gb.size(), Poly(R));
    Poly rem(R), work = f;
    while (!work.is_zero()) {
        const Term& lt = work.lead();
        bool reduced = false;
        for (size_t i = 0; i < gb.size(); ++i) {
            const Poly& g = gb[i];
            if (g.is_zero()) continue;
            if (g.lead().mon.divides(lt.mon)) {
                Expo q = lt.mon / g.lead().mon;
                FieldElem c = lt.coeff / g.lead().coeff;
                work = work - g.times_monomial(q, c);
                if (quotients)
                    (*quotients)[i] = (*quotients)[i] + Poly::monomial(R, q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move lead term to remainder
            rem = rem + Poly::monomial(R, lt.mon, lt.coeff);
            work = work - Poly::monomial(R, lt.mon, lt.coeff);
        }
    }
    return rem;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& gb) {
    return divide_poly(f, gb, nullptr);
}

FreeVec divide_vec(const FreeVec& f, const std::vector<FreeVec>& gb, const ModuleOrder& mo,
                   std::vector<Poly>* quotients) {
    const RingRef& R = f.ring;
    if (quotients) quotients->assign(gb.size(), Poly(R));
    FreeVec rem(R, f.rank()), work = f;
    std::vector<std::optional<ModTerm>> leads(gb.size());
    for (size_t i = 0; i < gb.size(); ++i) leads[i] = lead_term(gb[i], mo);
    for (;;) {
        auto lt = lead_term(work, mo);
        if (!lt) break;
        bool reduced = false;
        for (size_t i = 0; i < gb.size(); ++i) {
            if (!leads[i]) continue;
            if (leads[i]->pos == lt->pos && leads[i]->mon.divides(lt->mon)) {
                Expo q = lt->mon / leads[i]->mon;
                FieldElem c = lt->coeff / leads[i]->coeff;
                work = work - gb[i].times_monomial(q, c);
                if (quotients)
                    (*quotients)[i] = (*quotients)[i] + Poly::monomial(R, q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Poly mono = Poly::monomial(R, lt->mon, lt->coeff);
            rem.comps[(size_t)lt->pos] = rem.comps[(size_t)lt->pos] + mono;
            work.comps[(size_t)lt->pos] = work.comps[(size_t)lt->pos] - mono;
        }
    }
    return rem;
}

FreeVec normal_form(const FreeVec& f, const std::vector<FreeVec>& gb, const ModuleOrder& mo) {
    return divide_vec(f, gb, mo, nullptr);
}

// ---- Buchberger, ideal case ----

namespace {

struct Pair {
    int sugar;
    Expo lcm;
    int i, j;
};

int expo_cmp(const Ring& R, const Expo& a, const Expo& b) {
    return R.order().compare(a, b, R.nvars());
}

} // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const RingRef& ring) {
    const RingRef R = ring->ambient();
    std::vector<Poly> basis;
    std::vector<int> sugar;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g);
        sugar.push_back(g.total_degree());
    }

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = expo_cmp(*R, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            if (basis[(size_t)i].is_zero()) continue;
            Expo l = Expo::lcm(basis[(size_t)i].lead().mon, basis[(size_t)k].lead().mon);
            int s = std::max(sugar[(size_t)i] + (l / basis[(size_t)i].lead().mon).total(),
                             sugar[(size_t)k] + (l / basis[(size_t)k].lead().mon).total());
            queue.push_back({s, l, i, k});
        }
    };
    for (int k = 0; k < (int)basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair pr = *it;
        queue.erase(it);
        const Poly &f = basis[(size_t)pr.i], &g = basis[(size_t)pr.j];
        if (f.is_zero() || g.is_zero()) continue;
        // product criterion
        if (f.lead().mon.coprime(g.lead().mon)) continue;
        // chain criterion: some h with lt(h) | lcm and both sub-pairs handled
        bool chained = false;
        for (int k = 0; k < (int)basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || basis[(size_t)k].is_zero()) continue;
            if (!basis[(size_t)k].lead().mon.divides(pr.lcm)) continue;
            auto handled = [&](int a, int b) {
                Expo l = Expo::lcm(basis[(size_t)a].lead().mon, basis[(size_t)b].lead().mon);
                if (l == pr.lcm) return false;
                for (const auto& q : queue)
                    if ((q.i == std::min(a, b) && q.j == std::max(a, b))) return false;
                return true;
            };
            if (handled(pr.i, k) && handled(pr.j, k)) chained = true;
        }
        if (chained) continue;

        Expo qf = pr.lcm / f.lead().mon, qg = pr.lcm / g.lead().mon;
        Poly s = f.times_monomial(qf, g.lead().coeff) - g.times_monomial(qg, f.lead().coeff);
        Poly r = normal_form(s, basis);
        if (!r.is_zero()) {
            basis.push_back(r);
            sugar.push_back(std::max(sugar[(size_t)pr.i] + qf.total(),
                                     sugar[(size_t)pr.j] + qg.total()));
            push_pairs((int)basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lt is divisible by another lt
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (basis[j].lead().mon.divides(basis[i].lead().mon)) {
                if (!(basis[i].lead().mon == basis[j].lead().mon) || j < i) redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // reduce tails and normalize
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return expo_cmp(*R, a.lead().mon, b.lead().mon) > 0;
    });
    return reduced;
}

bool ideal_contains(const std::vector<Poly>& gb, const Poly& f) {
    return normal_form(f, gb).is_zero();
}

// ---- Buchberger, module case ----

std::vector<FreeVec> buchberger_module(const std::vector<FreeVec>& gens, const RingRef& ring,
                                       int rank, const ModuleOrder& mo) {
    const RingRef R = ring->ambient();
    std::vector<FreeVec> basis;
    std::vector<ModTerm> leads;
    std::vector<int> sugar;
    auto vec_degree = [](const FreeVec& v) {
        int d = -1;
        for (const auto& c : v.comps) d = std::max(d, c.total_degree());
        return d;
    };
    auto add_elem = [&](const FreeVec& v, int sg) {
        basis.push_back(v);
        leads.push_back(*lead_term(v, mo));
        sugar.push_back(sg);
    };
    for (const auto& g : gens) {
        require(g.rank() == rank, errc::ring_mismatch, "module generator rank mismatch");
        if (!g.is_zero()) add_elem(g, vec_degree(g));
    }

    struct MPair {
        int sugar;
        Expo lcm;
        int pos;
        int i, j;
    };
    auto pair_less = [&](const MPair& a, const MPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = R->order().compare(a.lcm, b.lcm, R->nvars());
        if (c != 0) return c < 0;
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<MPair> queue;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            if (leads[(size_t)i].pos != leads[(size_t)k].pos) continue;
            Expo l = Expo::lcm(leads[(size_t)i].mon, leads[(size_t)k].mon);
            int s = std::max(sugar[(size_t)i] + (l / leads[(size_t)i].mon).total(),
                             sugar[(size_t)k] + (l / leads[(size_t)k].mon).total());
            queue.push_back({s, l, leads[(size_t)i].pos, i, k});
        }
    };
    for (int k = 0; k < (int)basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        MPair pr = *it;
        queue.erase(it);
        const ModTerm &lf = leads[(size_t)pr.i], &lg = leads[(size_t)pr.j];
        // chain criterion (same position, lcm strictly divides)
        bool chained = false;
        for (int k = 0; k < (int)basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (leads[(size_t)k].pos != pr.pos) continue;
            if (!leads[(size_t)k].mon.divides(pr.lcm)) continue;
            auto handled = [&](int a, int b) {
                Expo l = Expo::lcm(leads[(size_t)a].mon, leads[(size_t)b].mon);
                if (l == pr.lcm) return false;
                for (const auto& q : queue)
                    if (q.i == std::min(a, b) && q.j == std::max(a, b)) return false;
                return true;
            };
            if (handled(pr.i, k) && handled(pr.j, k)) chained = true;
        }
        if (chained) continue;

        Expo qf = pr.lcm / lf.mon, qg = pr.lcm / lg.mon;
        FreeVec s = basis[(size_t)pr.i].times_monomial(qf, lg.coeff) -
                    basis[(size_t)pr.j].times_monomial(qg, lf.coeff);
        FreeVec r = normal_form(s, basis, mo);
        if (!r.is_zero()) {
            add_elem(r, std::max(sugar[(size_t)pr.i] + qf.total(),
                                 sugar[(size_t)pr.j] + qg.total()));
            push_pairs((int)basis.size() - 1);
        }
    }

    // minimalize + reduce
    std::vector<FreeVec> minimal;
    std::vector<ModTerm> mleads;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (leads[j].pos == leads[i].pos && leads[j].mon.divides(leads[i].mon)) {
                if (!(leads[i].mon == leads[j].mon) || j < i) redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            mleads.push_back(leads[i]);
        }
    }
    std::vector<FreeVec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<FreeVec> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        FreeVec r = normal_form(minimal[i], others, mo);
        if (!r.is_zero()) {
            auto lt = lead_term(r, mo);
            reduced.push_back(r.times_monomial(Expo{}, lt->coeff.inv()));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const FreeVec& a, const FreeVec& b) {
        auto la = lead_term(a, mo), lb = lead_term(b, mo);
        return mo.compare(*R, la->mon, la->pos, lb->mon, lb->pos) > 0;
    });
    return reduced;
}

} // namespace dgd
