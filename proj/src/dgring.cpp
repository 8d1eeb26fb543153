#include "dgd/dgring.hpp"

#include <algorithm>
#include <bit>

namespace dgd {

int ext_mul_sign(ExtMon a, ExtMon b) {
    // inversions: pairs (s in a, t in b) with s > t; all generators odd
    int inv = 0;
    for (int t = 0; t < 32; ++t) {
        if (!(b & (1u << t))) continue;
        inv += std::popcount(a >> (t + 1));
    }
    return inv % 2 ? -1 : 1;
}

DGElem DGElem::from_terms(DGRingRef r, std::vector<std::pair<ExtMon, Poly>> ts) {
    DGElem e(std::move(r));
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& t : ts) {
        if (t.second.is_zero()) continue;
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            Poly s = e.terms_.back().second + t.second;
            if (s.is_zero())
                e.terms_.pop_back();
            else
                e.terms_.back().second = s;
        } else {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

DGElem DGElem::from_poly(const DGRingRef& r, const Poly& coeff) {
    return monomial(r, 0, coeff);
}

DGElem DGElem::monomial(const DGRingRef& r, ExtMon m, const Poly& coeff) {
    if (coeff.is_zero()) return DGElem(r);
    Poly c = coeff.into(r->base());
    if (c.is_zero()) return DGElem(r);
    DGElem e(r);
    e.terms_.push_back({m, c});
    return e;
}

DGElem DGElem::one(const DGRingRef& r) {
    return from_poly(r, Poly::constant(r->base(), FieldElem::one(r->base()->field())));
}

DGElem DGElem::gen(const DGRingRef& r, int t) {
    return monomial(r, 1u << t, Poly::constant(r->base(), FieldElem::one(r->base()->field())));
}

Poly DGElem::coeff_of(ExtMon m) const {
    for (const auto& t : terms_)
        if (t.first == m) return t.second;
    return ring_ ? Poly(ring_->base()) : Poly();
}

DGElem DGElem::operator+(const DGElem& o) const {
    require(!ring_ || !o.ring_ || same_dgring(ring_, o.ring_), errc::ring_mismatch,
            "DG elements over different rings");
    std::vector<std::pair<ExtMon, Poly>> ts = terms_;
    for (const auto& t : o.terms_) ts.push_back(t);
    return from_terms(ring_ ? ring_ : o.ring_, std::move(ts));
}

DGElem DGElem::operator-() const {
    DGElem e(ring_);
    e.terms_ = terms_;
    for (auto& t : e.terms_) t.second = -t.second;
    return e;
}

DGElem DGElem::operator-(const DGElem& o) const { return *this + (-o); }

DGElem DGElem::scaled(const Poly& c) const {
    std::vector<std::pair<ExtMon, Poly>> ts;
    for (const auto& t : terms_) ts.push_back({t.first, t.second * c.into(ring_->base())});
    return from_terms(ring_, std::move(ts));
}

DGElem DGElem::operator*(const DGElem& o) const {
    require(same_dgring(ring_, o.ring_) || is_zero() || o.is_zero(), errc::ring_mismatch,
            "DG elements over different rings");
    const DGRingRef& R = is_zero() ? o.ring_ : ring_;
    std::vector<std::pair<ExtMon, Poly>> ts;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            if (a.first & b.first) continue; // odd generators square to zero
            int sg = ext_mul_sign(a.first, b.first);
            Poly c = a.second * b.second;
            if (sg < 0) c = -c;
            if (!c.is_zero()) ts.push_back({a.first | b.first, c});
        }
    return from_terms(R, std::move(ts));
}

bool DGElem::operator==(const DGElem& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
            return false;
    return true;
}

std::optional<int> DGElem::degree() const {
    std::optional<int> d;
    for (const auto& t : terms_) {
        int td = ring_->mask_degree(t.first);
        if (!d)
            d = td;
        else if (*d != td)
            return std::nullopt;
    }
    return d;
}

bool DGElem::homogeneous_of(int deg) const {
    for (const auto& t : terms_)
        if (ring_->mask_degree(t.first) != deg) return false;
    return true;
}

std::string DGElem::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        std::string ext;
        for (int t = 0; t < 32; ++t)
            if (terms_[i].first & (1u << t)) {
                if (!ext.empty()) ext += "*";
                ext += ring_->ext_gens()[(size_t)t].name;
            }
        std::string c = terms_[i].second.to_string();
        if (ext.empty())
            s += c;
        else if (c == "1")
            s += ext;
        else
            s += "(" + c + ")*" + ext;
    }
    return s;
}

DGRingRef DGRing::make(RingRef base, std::vector<ExtGen> gens, std::vector<DGElem> diffs) {
    require(gens.size() == diffs.size(), errc::invalid_argument,
            "one differential per exterior generator");
    require(gens.size() <= 16, errc::invalid_argument, "too many exterior generators");
    auto r = std::shared_ptr<DGRing>(new DGRing());
    r->base_ = std::move(base);
    r->gens_ = std::move(gens);
    r->diffs_ = std::move(diffs);
    // recast the differentials onto the finished ring object
    for (auto& d : r->diffs_) {
        if (!d.ring()) continue;
        std::vector<std::pair<ExtMon, Poly>> ts;
        for (const auto& t : d.terms()) ts.push_back({t.first, t.second.into(r->base_)});
        d = DGElem::from_terms(r, std::move(ts));
    }
    // degree table
    int n = (int)r->gens_.size();
    for (ExtMon m = 0; m < (1u << n); ++m) r->by_degree_[r->mask_degree_raw(m)].push_back(m);
    // bar ring: base / (degree-0 image of d)
    std::vector<Poly> bar_gens;
    for (const auto& q : r->base_->ideal_gb()) bar_gens.push_back(q);
    for (int t = 0; t < n; ++t) {
        if (r->gens_[(size_t)t].degree == -1) {
            Poly c = r->diffs_[(size_t)t].coeff_of(0);
            if (!c.is_zero()) bar_gens.push_back(c.with_ring(r->base_->ambient()));
        }
    }
    r->bar_ = bar_gens.empty() ? r->base_->ambient()
                               : Ring::quotient(r->base_->ambient(), bar_gens);
    return r;
}

DGRingRef DGRing::koszul(const RingRef& base, const std::vector<Poly>& elems) {
    std::vector<ExtGen> gens;
    std::vector<DGElem> diffs;
    for (size_t i = 0; i < elems.size(); ++i)
        gens.push_back({"e" + std::to_string(i + 1), -1});
    auto tmp = make(base, gens, std::vector<DGElem>(elems.size()));
    // differentials need the finished ring
    std::vector<DGElem> ds;
    for (const auto& f : elems) ds.push_back(DGElem::from_poly(tmp, f));
    return make(base, std::move(gens), std::move(ds));
}

int DGRing::mask_degree(ExtMon m) const { return mask_degree_raw(m); }

int DGRing::bottom_degree() const {
    int s = 0;
    for (const auto& g : gens_) s += g.degree;
    return s;
}

const std::vector<ExtMon>& DGRing::masks_of_degree(int d) const {
    static const std::vector<ExtMon> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

RingRef DGRing::bar() const { return bar_; }

DGElem DGRing::d(const DGElem& a) const {
    const DGRingRef R = a.ring() ? a.ring() : shared_from_this();
    DGElem out(R);
    Poly one = Poly::constant(base_, FieldElem::one(base_->field()));
    for (const auto& t : a.terms()) {
        // d(c * e_S) = c * sum_i (-1)^(i-1) e_{s_1..s_{i-1}} d(e_{s_i}) e_{s_{i+1}..}
        int idx = 0;
        for (int b = 0; b < 32; ++b) {
            if (!(t.first & (1u << b))) continue;
            ExtMon prefix = t.first & ((1u << b) - 1);
            ExtMon suffix = t.first & ~((1u << (b + 1)) - 1);
            DGElem piece = DGElem::monomial(R, prefix, one) * diffs_[(size_t)b] *
                           DGElem::monomial(R, suffix, one);
            piece = piece.scaled(t.second);
            if (idx % 2) piece = -piece;
            out = out + piece;
            ++idx;
        }
    }
    return out;
}

std::string DGRing::describe() const {
    std::string s = "A0 vars [";
    for (size_t i = 0; i < base_->vars().size(); ++i) {
        if (i) s += ",";
        s += base_->vars()[i];
    }
    s += "], ideal gens " + std::to_string(base_->ideal_gb().size());
    s += ", ext gens [";
    for (size_t t = 0; t < gens_.size(); ++t) {
        if (t) s += ", ";
        s += gens_[t].name + ":" + std::to_string(gens_[t].degree);
    }
    return s + "]";
}

DGValidation validate_dg_ring(const DGRingRef& r) {
    DGValidation v;
    auto violate = [&](const std::string& kind, const std::string& detail) {
        v.ok = false;
        v.violation = kind;
        v.detail = detail;
    };
    for (int t = 0; t < r->n_ext(); ++t) {
        const ExtGen& g = r->ext_gens()[(size_t)t];
        if (g.degree > -1 || g.degree % 2 == 0) {
            violate("DegreeMismatch", "generator " + g.name + " must have odd degree <= -1");
            return v;
        }
        if (!r->diff_of_gen(t).homogeneous_of(g.degree + 1)) {
            violate("DegreeMismatch",
                    "d(" + g.name + ") is not homogeneous of degree " +
                        std::to_string(g.degree + 1));
            return v;
        }
    }
    for (int t = 0; t < r->n_ext(); ++t) {
        DGElem dd = r->d(r->diff_of_gen(t));
        if (!dd.is_zero()) {
            violate("DSquareNonzero", "d^2(" + r->ext_gens()[(size_t)t].name + ") = " + dd.to_string());
            return v;
        }
    }
    // Leibniz consistency on pairs of generators
    for (int i = 0; i < r->n_ext(); ++i)
        for (int j = 0; j < r->n_ext(); ++j) {
            if (i == j) continue;
            DGElem ei = DGElem::gen(r, i), ej = DGElem::gen(r, j);
            DGElem lhs = r->d(ei * ej);
            DGElem rhs = r->d(ei) * ej;
            DGElem sgn = ei * r->d(ej);
            // deg(e_i) odd: sign is -1
            DGElem expect = rhs - sgn;
            if (lhs != expect) {
                violate("LeibnizFailure", "d(" + r->ext_gens()[(size_t)i].name + "*" +
                                              r->ext_gens()[(size_t)j].name + ") fails Leibniz");
                return v;
            }
            if (!r->d(lhs).is_zero()) {
                violate("DSquareNonzero", "d^2 on a product of generators is nonzero");
                return v;
            }
        }
    return v;
}

// ---- maps ----

DGRingMap::DGRingMap(DGRingRef src, DGRingRef tgt, std::vector<Poly> var_images,
                     std::vector<DGElem> gen_images)
    : src_(std::move(src)), tgt_(std::move(tgt)), var_images_(std::move(var_images)),
      gen_images_(std::move(gen_images)) {
    require((int)var_images_.size() == src_->base()->nvars(), errc::map_mismatch,
            "one image per base variable");
    require((int)gen_images_.size() == src_->n_ext(), errc::map_mismatch,
            "one image per exterior generator");
    for (auto& p : var_images_) p = p.into(tgt_->base());
    // ideal must map to zero
    for (const auto& q : src_->base()->ideal_gb()) {
        Poly img = apply(q.with_ring(src_->base()));
        require(img.is_zero(), errc::map_mismatch,
                "image of ideal generator " + q.to_string() + " is nonzero");
    }
    // degrees and d-commutation on generators
    for (int t = 0; t < src_->n_ext(); ++t) {
        int d = src_->ext_gens()[(size_t)t].degree;
        require(gen_images_[(size_t)t].homogeneous_of(d), errc::map_mismatch,
                "image of " + src_->ext_gens()[(size_t)t].name + " has wrong degree");
    }
    for (int t = 0; t < src_->n_ext(); ++t) {
        DGElem lhs = apply(src_->d(DGElem::gen(src_, t)));
        DGElem rhs = tgt_->d(gen_images_[(size_t)t]);
        require(lhs == rhs, errc::map_mismatch,
                "map does not commute with d on " + src_->ext_gens()[(size_t)t].name);
    }
}

DGRingMap DGRingMap::identity(const DGRingRef& r) {
    std::vector<Poly> vi;
    for (int v = 0; v < r->base()->nvars(); ++v) vi.push_back(Poly::variable(r->base(), v));
    std::vector<DGElem> gi;
    for (int t = 0; t < r->n_ext(); ++t) gi.push_back(DGElem::gen(r, t));
    return DGRingMap(r, r, std::move(vi), std::move(gi));
}

bool DGRingMap::is_identity_map() const {
    if (!same_dgring(src_, tgt_)) return false;
    for (int v = 0; v < src_->base()->nvars(); ++v)
        if (var_images_[(size_t)v] != Poly::variable(src_->base(), v).into(src_->base()))
            return false;
    for (int t = 0; t < src_->n_ext(); ++t)
        if (gen_images_[(size_t)t] != DGElem::gen(src_, t)) return false;
    return true;
}

Poly DGRingMap::apply(const Poly& p) const {
    RingMapData f{src_->base(), tgt_->base(), var_images_};
    return f.apply(p);
}

DGElem DGRingMap::apply(const DGElem& a) const {
    DGElem out(tgt_);
    for (const auto& t : a.terms()) {
        DGElem piece = DGElem::from_poly(tgt_, apply(t.second));
        for (int b = 0; b < 32; ++b)
            if (t.first & (1u << b)) piece = piece * gen_images_[(size_t)b];
        out = out + piece;
    }
    return out;
}

DGRingMap DGRingMap::then(const DGRingMap& g) const {
    require(same_dgring(tgt_, g.src_), errc::map_mismatch, "composition mismatch");
    std::vector<Poly> vi;
    for (const auto& p : var_images_) vi.push_back(g.apply(p));
    std::vector<DGElem> gi;
    for (const auto& e : gen_images_) gi.push_back(g.apply(e));
    return DGRingMap(src_, g.tgt_, std::move(vi), std::move(gi));
}

RingMapData DGRingMap::base_map() const { return RingMapData{src_->base(), tgt_->base(), var_images_}; }

RingMapData DGRingMap::bar_map() const {
    std::vector<Poly> imgs;
    for (const auto& p : var_images_) imgs.push_back(p.into(tgt_->bar()));
    return RingMapData{src_->bar(), tgt_->bar(), imgs};
}

bool DGRingMap::is_cohomologically_finite() const {
    if (!coh_finite_) coh_finite_ = is_module_finite(bar_map());
    return *coh_finite_;
}

std::optional<int> DGRingMap::supported_smooth_shape() const {
    const Ring &sb = *src_->base(), &tb = *tgt_->base();
    if (tb.nvars() < sb.nvars()) return std::nullopt;
    for (int v = 0; v < sb.nvars(); ++v) {
        if (tb.vars()[(size_t)v] != sb.vars()[(size_t)v]) return std::nullopt;
        if (var_images_[(size_t)v] != Poly::variable(tgt_->base(), v).into(tgt_->base()))
            return std::nullopt;
    }
    // same ideal, lifted (mutual reduction to zero)
    if (sb.ideal_gb().size() != tb.ideal_gb().size()) return std::nullopt;
    std::vector<Poly> lifted;
    for (const auto& q : sb.ideal_gb()) lifted.push_back(q.with_ring(tb.ambient()));
    for (const auto& q : lifted)
        if (!ideal_contains(tb.ideal_gb(), q)) return std::nullopt;
    for (const auto& q : tb.ideal_gb())
        if (!normal_form(q, lifted).is_zero()) return std::nullopt;
    // identical exterior structure
    if (src_->n_ext() != tgt_->n_ext()) return std::nullopt;
    for (int t = 0; t < src_->n_ext(); ++t) {
        if (src_->ext_gens()[(size_t)t].degree != tgt_->ext_gens()[(size_t)t].degree)
            return std::nullopt;
        if (gen_images_[(size_t)t] != DGElem::gen(tgt_, t)) return std::nullopt;
        // differentials agree under the variable inclusion
        DGElem lhs = apply(src_->diff_of_gen(t));
        if (lhs != tgt_->diff_of_gen(t)) return std::nullopt;
    }
    return tb.nvars() - sb.nvars();
}

// ---- tensor / enveloping / extensions ----

namespace {

std::vector<std::string> disjoint_names(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& n : b) {
        std::string cand = n;
        while (std::find(out.begin(), out.end(), cand) != out.end()) cand += "_2";
        out.push_back(cand);
    }
    return out;
}

Poly shift_vars(const Poly& p, const RingRef& to, int shift) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
        Expo e;
        for (int v = 0; v + shift < kMaxVars; ++v) e.e[(size_t)(v + shift)] = t.mon.e[(size_t)v];
        ts.push_back({e, t.coeff});
    }
    std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
        return to->order().compare(x.mon, y.mon, to->nvars()) > 0;
    });
    return Poly::from_sorted(to, ts);
}

} // namespace

DGTensor tensor_dgrings(const DGRingRef& a, const DGRingRef& b) {
    require(a->base()->field()->same(*b->base()->field()), errc::base_mismatch,
            "tensor factors over different base fields");
    int na = a->base()->nvars(), nb = b->base()->nvars();
    auto names = disjoint_names(a->base()->vars(), b->base()->vars());
    MonomialOrder ord; // canonical grevlex on the joined variables
    RingRef amb = Ring::poly_ring(a->base()->field(), names, ord);
    std::vector<Poly> ideal;
    for (const auto& q : a->base()->ideal_gb()) ideal.push_back(shift_vars(q, amb, 0));
    for (const auto& q : b->base()->ideal_gb()) ideal.push_back(shift_vars(q, amb, na));
    RingRef base = ideal.empty() ? amb : Ring::quotient(amb, ideal);

    std::vector<ExtGen> gens;
    std::vector<std::string> gnames;
    for (const auto& g : a->ext_gens()) gnames.push_back(g.name);
    for (const auto& g : b->ext_gens()) {
        std::string cand = g.name;
        while (std::find(gnames.begin(), gnames.end(), cand) != gnames.end()) cand += "_2";
        gnames.push_back(cand);
    }
    for (int t = 0; t < a->n_ext(); ++t)
        gens.push_back({gnames[(size_t)t], a->ext_gens()[(size_t)t].degree});
    for (int t = 0; t < b->n_ext(); ++t)
        gens.push_back({gnames[(size_t)(a->n_ext() + t)], b->ext_gens()[(size_t)t].degree});

    // build with zero diffs first so elements can be formed over the ring
    auto proto = DGRing::make(base, gens, std::vector<DGElem>(gens.size()));
    auto move_elem = [&](const DGElem& e, int var_shift, int gen_shift) {
        DGElem out(proto);
        for (const auto& t : e.terms()) {
            Poly c = shift_vars(t.second.with_ring(e.ring()->base()->ambient()), amb, var_shift)
                         .into(base);
            out = out + DGElem::monomial(proto, t.first << gen_shift, c);
        }
        return out;
    };
    std::vector<DGElem> diffs;
    for (int t = 0; t < a->n_ext(); ++t) diffs.push_back(move_elem(a->diff_of_gen(t), 0, 0));
    for (int t = 0; t < b->n_ext(); ++t)
        diffs.push_back(move_elem(b->diff_of_gen(t), na, a->n_ext()));
    auto T = DGRing::make(base, gens, diffs);

    std::vector<Poly> via, vib;
    for (int v = 0; v < na; ++v) via.push_back(Poly::variable(T->base(), v));
    for (int v = 0; v < nb; ++v) vib.push_back(Poly::variable(T->base(), na + v));
    std::vector<DGElem> gia, gib;
    for (int t = 0; t < a->n_ext(); ++t) gia.push_back(DGElem::gen(T, t));
    for (int t = 0; t < b->n_ext(); ++t) gib.push_back(DGElem::gen(T, a->n_ext() + t));
    DGTensor out{T, DGRingMap(a, T, via, gia), DGRingMap(b, T, vib, gib)};
    return out;
}

Enveloping enveloping(const DGRingRef& a) {
    DGTensor t = tensor_dgrings(a, a);
    int n = a->base()->nvars();
    std::vector<Poly> mu_vars;
    for (int v = 0; v < 2 * n; ++v)
        mu_vars.push_back(Poly::variable(a->base(), v % n).into(a->base()));
    std::vector<DGElem> mu_gens;
    for (int s = 0; s < 2; ++s)
        for (int g = 0; g < a->n_ext(); ++g) mu_gens.push_back(DGElem::gen(a, g));
    Enveloping env{t.ring, t.inc_left, t.inc_right, DGRingMap(t.ring, a, mu_vars, mu_gens)};
    return env;
}

DGRingRef extend_dgring(const DGRingRef& a, const std::vector<ExtGen>& extra,
                        const std::vector<DGElem>& diff_exprs) {
    std::vector<ExtGen> gens = a->ext_gens();
    for (const auto& g : extra) gens.push_back(g);
    auto proto = DGRing::make(a->base(), gens, std::vector<DGElem>(gens.size()));
    std::vector<DGElem> diffs;
    auto recast = [&](const DGElem& e) {
        std::vector<std::pair<ExtMon, Poly>> ts;
        for (const auto& t : e.terms()) ts.push_back({t.first, t.second});
        return DGElem::from_terms(proto, std::move(ts));
    };
    for (int t = 0; t < a->n_ext(); ++t) diffs.push_back(recast(a->diff_of_gen(t)));
    for (const auto& d : diff_exprs) diffs.push_back(recast(d));
    return DGRing::make(a->base(), gens, diffs);
}

std::optional<int> semifree_extension_of(const DGRingRef& tgt, const DGRingRef& src) {
    if (!src->base()->same_presentation(*tgt->base())) return std::nullopt;
    if (tgt->n_ext() < src->n_ext()) return std::nullopt;
    for (int t = 0; t < src->n_ext(); ++t) {
        if (src->ext_gens()[(size_t)t].degree != tgt->ext_gens()[(size_t)t].degree)
            return std::nullopt;
        // differentials must agree on the common generators
        std::vector<std::pair<ExtMon, Poly>> ts;
        for (const auto& p : src->diff_of_gen(t).terms()) ts.push_back(p);
        DGElem moved = DGElem::from_terms(tgt, ts);
        if (moved != tgt->diff_of_gen(t)) return std::nullopt;
    }
    return src->n_ext();
}

} // namespace dgd
