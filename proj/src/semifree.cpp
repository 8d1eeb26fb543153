#include "dgd/semifree.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dgd {

SemiFreeDGMod SemiFreeDGMod::free_module(const DGRingRef& r, std::vector<SfGen> gens) {
    SemiFreeDGMod m(r);
    m.gens_ = std::move(gens);
    m.cols_.resize(m.gens_.size());
    return m;
}

SemiFreeDGMod SemiFreeDGMod::unit(const DGRingRef& r) { return free_module(r, {{"u", 0}}); }

int SemiFreeDGMod::max_gen_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.degree > d) d = g.degree;
        first = false;
    }
    return d;
}

int SemiFreeDGMod::min_gen_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.degree < d) d = g.degree;
        first = false;
    }
    return d;
}

DGElem SemiFreeDGMod::entry(int i, int j) const {
    for (const auto& [r, a] : cols_[(size_t)j])
        if (r == i) return a;
    return DGElem::zero(ring_);
}

void SemiFreeDGMod::set_entry(int i, int j, const DGElem& a) {
    auto& col = cols_[(size_t)j];
    for (auto it = col.begin(); it != col.end(); ++it) {
        if (it->first == i) {
            if (a.is_zero())
                col.erase(it);
            else
                it->second = a;
            return;
        }
    }
    if (!a.is_zero()) col.push_back({i, a});
}

int SemiFreeDGMod::add_gen(const std::string& name, int degree) {
    gens_.push_back({name, degree});
    cols_.emplace_back();
    return (int)gens_.size() - 1;
}

std::string SemiFreeDGMod::describe() const {
    std::map<int, int> per_degree;
    for (const auto& g : gens_) per_degree[g.degree]++;
    std::string s = "gens{";
    bool first = true;
    for (auto& [d, c] : per_degree) {
        if (!first) s += ", ";
        s += std::to_string(d) + ":" + std::to_string(c);
        first = false;
    }
    return s + "}";
}

void validate_semifree(const SemiFreeDGMod& m) {
    const DGRingRef& A = m.ring();
    int n = m.n_gens();
    for (int j = 0; j < n; ++j)
        for (const auto& [i, a] : m.column(j)) {
            int want = m.gen_degree(j) + 1 - m.gen_degree(i);
            require(a.homogeneous_of(want), errc::invalid_argument,
                    "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not homogeneous of degree " + std::to_string(want));
        }
    // d^2 = 0: for each l,j: d(a_lj) + sum_i (-1)^{deg a_ij} a_ij * a_li = 0
    for (int j = 0; j < n; ++j) {
        std::map<int, DGElem> acc;
        for (const auto& [i, aij] : m.column(j)) {
            DGElem da = A->d(aij);
            if (!da.is_zero()) {
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, da);
                else
                    it->second = it->second + da;
            }
            int deg = m.gen_degree(j) + 1 - m.gen_degree(i);
            for (const auto& [l, ali] : m.column(i)) {
                DGElem term = aij * ali;
                if (deg % 2) term = -term;
                auto it = acc.find(l);
                if (it == acc.end())
                    acc.emplace(l, term);
                else
                    it->second = it->second + term;
            }
        }
        for (auto& [l, v] : acc)
            require(v.is_zero(), errc::invalid_argument,
                    "d^2 != 0 at generator " + std::to_string(j) + " row " + std::to_string(l));
    }
}

SemiFreeDGMod shift(const SemiFreeDGMod& m, int n) {
    SemiFreeDGMod out(m.ring());
    std::vector<SfGen> gens;
    for (const auto& g : m.gens()) gens.push_back({g.name, g.degree - n});
    out = SemiFreeDGMod::free_module(m.ring(), std::move(gens));
    for (int j = 0; j < m.n_gens(); ++j)
        for (const auto& [i, a] : m.column(j)) out.set_entry(i, j, n % 2 ? -a : a);
    return out;
}

SemiFreeDGMod cone(const ChainMap& phi) {
    const SemiFreeDGMod &M = *phi.src, &N = *phi.tgt;
    require(same_dgring(M.ring(), N.ring()), errc::ring_mismatch,
            "cone of a map across rings");
    SemiFreeDGMod c(N.ring());
    std::vector<SfGen> gens;
    for (const auto& g : N.gens()) gens.push_back(g);
    for (const auto& g : M.gens()) gens.push_back({g.name + "'", g.degree - 1});
    c = SemiFreeDGMod::free_module(N.ring(), std::move(gens));
    int nn = N.n_gens();
    for (int j = 0; j < nn; ++j)
        for (const auto& [i, a] : N.column(j)) c.set_entry(i, j, a);
    for (int j = 0; j < M.n_gens(); ++j) {
        for (const auto& [i, a] : phi.cols[(size_t)j]) c.set_entry(i, nn + j, a);
        for (const auto& [i, a] : M.column(j)) c.set_entry(nn + i, nn + j, -a);
    }
    try {
        validate_semifree(c);
    } catch (const Error&) {
        fail(errc::not_a_chain_map, "cone differential does not square to zero");
    }
    return c;
}

SemiFreeDGMod hom_complex(const SemiFreeDGMod& p, const SemiFreeDGMod& n) {
    require(same_dgring(p.ring(), n.ring()), errc::ring_mismatch, "Hom across rings");
    const DGRingRef& A = p.ring();
    // generators phi_{ij} : p_j -> n_i of degree e_i - d_j
    int np = p.n_gens(), nn = n.n_gens();
    std::vector<SfGen> gens;
    for (int j = 0; j < np; ++j)
        for (int i = 0; i < nn; ++i)
            gens.push_back({"h(" + n.gens()[(size_t)i].name + "|" + p.gens()[(size_t)j].name + ")",
                            n.gen_degree(i) - p.gen_degree(j)});
    SemiFreeDGMod h = SemiFreeDGMod::free_module(A, std::move(gens));
    auto idx = [&](int i, int j) { return j * nn + i; };
    // d(phi_{ij}) = sum_m (D_N)_{mi} phi_{mj}
    //             - (-1)^{|phi|} sum_l (-1)^{|phi||D_P(j,l)|} (D_P)_{jl} phi_{il}
    for (int j = 0; j < np; ++j)
        for (int i = 0; i < nn; ++i) {
            int phideg = n.gen_degree(i) - p.gen_degree(j);
            std::map<int, DGElem> col;
            for (const auto& [m_, a] : n.column(i)) {
                auto it = col.find(idx(m_, j));
                if (it == col.end())
                    col.emplace(idx(m_, j), a);
                else
                    it->second = it->second + a;
            }
            for (int l = 0; l < np; ++l) {
                DGElem a = p.entry(j, l);
                if (a.is_zero()) continue;
                int adeg = p.gen_degree(l) + 1 - p.gen_degree(j);
                // total sign -(-1)^{|phi|}(-1)^{|phi||a|} = (-1)^{1+|phi|(1+|a|)}
                int sgn = 1 + (phideg % 2) * (1 + (adeg % 2));
                DGElem term = a;
                if (sgn % 2) term = -term;
                auto it = col.find(idx(i, l));
                if (it == col.end())
                    col.emplace(idx(i, l), term);
                else
                    it->second = it->second + term;
            }
            for (auto& [r, v] : col)
                if (!v.is_zero()) h.set_entry(r, idx(i, j), v);
        }
    validate_semifree(h);
    return h;
}

namespace {

// shared builder for internal and external tensor products
SemiFreeDGMod tensor_build(const SemiFreeDGMod& m, const SemiFreeDGMod& n,
                           const DGRingRef& out_ring,
                           const std::function<DGElem(const DGElem&)>& map_m,
                           const std::function<DGElem(const DGElem&)>& map_n) {
    int nm = m.n_gens(), nn = n.n_gens();
    std::vector<SfGen> gens;
    for (int j = 0; j < nm; ++j)
        for (int i = 0; i < nn; ++i)
            gens.push_back({m.gens()[(size_t)j].name + "(x)" + n.gens()[(size_t)i].name,
                            m.gen_degree(j) + n.gen_degree(i)});
    SemiFreeDGMod t = SemiFreeDGMod::free_module(out_ring, std::move(gens));
    auto idx = [&](int j, int i) { return j * nn + i; };
    for (int j = 0; j < nm; ++j)
        for (int i = 0; i < nn; ++i) {
            std::map<int, DGElem> col;
            for (const auto& [l, a] : m.column(j)) {
                DGElem v = map_m(a);
                auto it = col.find(idx(l, i));
                if (it == col.end())
                    col.emplace(idx(l, i), v);
                else
                    it->second = it->second + v;
            }
            int dj = m.gen_degree(j);
            for (const auto& [l, a] : n.column(i)) {
                int adeg = n.gen_degree(i) + 1 - n.gen_degree(l);
                DGElem v = map_n(a);
                // sign (-1)^{d_j (1 + |a|)}
                if ((dj % 2) && ((1 + adeg) % 2)) v = -v;
                auto it = col.find(idx(j, l));
                if (it == col.end())
                    col.emplace(idx(j, l), v);
                else
                    it->second = it->second + v;
            }
            for (auto& [r, v] : col)
                if (!v.is_zero()) t.set_entry(r, idx(j, i), v);
        }
    validate_semifree(t);
    return t;
}

} // namespace

SemiFreeDGMod tensor_complex(const SemiFreeDGMod& m, const SemiFreeDGMod& n) {
    require(same_dgring(m.ring(), n.ring()), errc::ring_mismatch, "tensor across rings");
    auto id = [](const DGElem& a) { return a; };
    return tensor_build(m, n, m.ring(), id, id);
}

SemiFreeDGMod base_change_module(const SemiFreeDGMod& m, const DGRingMap& f) {
    require(same_dgring(m.ring(), f.src()), errc::map_mismatch,
            "base change along a map with a different source");
    SemiFreeDGMod out = SemiFreeDGMod::free_module(f.tgt(), m.gens());
    for (int j = 0; j < m.n_gens(); ++j)
        for (const auto& [i, a] : m.column(j)) out.set_entry(i, j, f.apply(a));
    validate_semifree(out);
    return out;
}

SemiFreeDGMod external_tensor(const SemiFreeDGMod& m, const SemiFreeDGMod& n,
                              const DGRingMap& inc_left, const DGRingMap& inc_right) {
    require(same_dgring(m.ring(), inc_left.src()) && same_dgring(n.ring(), inc_right.src()),
            errc::map_mismatch, "external tensor inclusions do not match factors");
    require(same_dgring(inc_left.tgt(), inc_right.tgt()), errc::map_mismatch,
            "external tensor inclusions land in different rings");
    return tensor_build(m, n, inc_left.tgt(),
                        [&](const DGElem& a) { return inc_left.apply(a); },
                        [&](const DGElem& a) { return inc_right.apply(a); });
}

ChainMap scalar_map(const SemiFreeDGMod& m, const Poly& c) {
    ChainMap phi;
    phi.src = &m;
    phi.tgt = &m;
    phi.cols.resize((size_t)m.n_gens());
    DGElem e = DGElem::from_poly(m.ring(), c);
    for (int j = 0; j < m.n_gens(); ++j)
        if (!e.is_zero()) phi.cols[(size_t)j].push_back({j, e});
    return phi;
}

} // namespace dgd
