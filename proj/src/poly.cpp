#include "dgd/poly.hpp"

#include "dgd/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dgd {

int MonomialOrder::compare(const Expo& a, const Expo& b, int nvars) const {
    auto pr = [&](int i) { return priority.empty() ? i : priority[(size_t)i]; };
    if (n_elim > 0) {
        // Block order: compare the elimination block by grevlex first.
        int da = 0, db = 0;
        for (int i = 0; i < n_elim; ++i) {
            da += a.e[(size_t)pr(i)];
            db += b.e[(size_t)pr(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = n_elim - 1; i >= 0; --i) {
            int va = a.e[(size_t)pr(i)], vb = b.e[(size_t)pr(i)];
            if (va != vb) return va < vb ? 1 : -1;
        }
        da = db = 0;
        for (int i = n_elim; i < nvars; ++i) {
            da += a.e[(size_t)pr(i)];
            db += b.e[(size_t)pr(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = nvars - 1; i >= n_elim; --i) {
            int va = a.e[(size_t)pr(i)], vb = b.e[(size_t)pr(i)];
            if (va != vb) return va < vb ? 1 : -1;
        }
        return 0;
    }
    switch (kind) {
    case Kind::lex:
        for (int i = 0; i < nvars; ++i) {
            int va = a.e[(size_t)pr(i)], vb = b.e[(size_t)pr(i)];
            if (va != vb) return va < vb ? -1 : 1;
        }
        return 0;
    case Kind::grlex: {
        int da = a.total(), db = b.total();
        if (da != db) return da < db ? -1 : 1;
        for (int i = 0; i < nvars; ++i) {
            int va = a.e[(size_t)pr(i)], vb = b.e[(size_t)pr(i)];
            if (va != vb) return va < vb ? -1 : 1;
        }
        return 0;
    }
    case Kind::grevlex: {
        int da = a.total(), db = b.total();
        if (da != db) return da < db ? -1 : 1;
        for (int i = nvars - 1; i >= 0; --i) {
            int va = a.e[(size_t)pr(i)], vb = b.e[(size_t)pr(i)];
            if (va != vb) return va < vb ? 1 : -1;
        }
        return 0;
    }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    std::string s = kind == Kind::lex ? "lex" : kind == Kind::grlex ? "grlex" : "grevlex";
    if (n_elim > 0) s += "(elim " + std::to_string(n_elim) + ")";
    return s;
}

Poly Poly::constant(const RingRef& r, const FieldElem& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({Expo{}, c});
    return p;
}

Poly Poly::variable(const RingRef& r, int idx, int power) {
    require(idx >= 0 && idx < r->nvars(), errc::invalid_argument, "variable index out of range");
    Poly p(r);
    p.terms_.push_back({Expo::var(idx, power), FieldElem::one(r->field())});
    return p;
}

Poly Poly::monomial(const RingRef& r, const Expo& m, const FieldElem& c) {
    Poly p(r);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_sorted(RingRef ring, std::vector<Term> ts) {
    Poly p(std::move(ring));
    p.terms_ = std::move(ts);
    return p;
}

const Term& Poly::lead() const {
    require(!terms_.empty(), errc::invalid_argument, "leading term of zero polynomial");
    return terms_.front();
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.total());
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    require(same_ring(ring_, o.ring_) || is_zero() || o.is_zero(), errc::ring_mismatch,
            "polynomial addition across rings");
    const RingRef& R = is_zero() ? o.ring_ : ring_;
    if (!R) return Poly();
    const MonomialOrder& ord = R->order();
    int nv = R->nvars();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon, nv);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElem s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({terms_[i].mon, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_sorted(R, std::move(out));
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(const Expo& m, const FieldElem& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElem nc = t.coeff * c;
        if (!nc.is_zero()) r.terms_.push_back({t.mon * m, nc});
    }
    return r;
}

Poly Poly::scaled(const FieldElem& c) const { return times_monomial(Expo{}, c); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().coeff.inv());
}

Poly Poly::operator*(const Poly& o) const {
    require(same_ring(ring_, o.ring_) || is_zero() || o.is_zero(), errc::ring_mismatch,
            "polynomial multiplication across rings");
    const RingRef& R = is_zero() ? o.ring_ : ring_;
    Poly acc(R);
    if (is_zero() || o.is_zero()) return acc;
    // accumulate into a map keyed by descending monomial
    const MonomialOrder& ord = R->order();
    int nv = R->nvars();
    auto cmp = [&](const Expo& a, const Expo& b) { return ord.compare(a, b, nv) > 0; };
    std::map<Expo, FieldElem, decltype(cmp)> acc_map(cmp);
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) {
            Expo m = s.mon * t.mon;
            FieldElem c = s.coeff * t.coeff;
            auto it = acc_map.find(m);
            if (it == acc_map.end()) {
                if (!c.is_zero()) acc_map.emplace(m, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) acc_map.erase(it);
            }
        }
    std::vector<Term> out;
    out.reserve(acc_map.size());
    for (auto& kv : acc_map) out.push_back({kv.first, kv.second});
    Poly prod = from_sorted(R, std::move(out));
    if (!R->is_polynomial_ring())
        prod = normal_form(prod.with_ring(R->ambient()), R->ideal_gb()).with_ring(R);
    return prod;
}

Poly Poly::into(const RingRef& r) const {
    Poly p = with_ring(r->ambient());
    if (!r->is_polynomial_ring()) p = normal_form(p, r->ideal_gb());
    return p.with_ring(r);
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Ring::monomial_string(const Expo& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (!m.e[(size_t)i]) continue;
        if (!s.empty()) s += "*";
        s += vars_[(size_t)i];
        if (m.e[(size_t)i] > 1) s += "^" + std::to_string(m.e[(size_t)i]);
    }
    return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            first = false;
            if (neg) {
                s += "-";
                c = c.substr(1);
            }
        } else {
            s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        std::string mon = ring_->monomial_string(t.mon);
        if (mon == "1")
            s += c;
        else if (c == "1")
            s += mon;
        else
            s += c + "*" + mon;
    }
    return s;
}

RingRef Ring::poly_ring(FieldRef field, std::vector<std::string> vars, MonomialOrder order) {
    require((int)vars.size() <= kMaxVars, errc::invalid_argument,
            "at most 16 variables supported");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->field_ = std::move(field);
    r->vars_ = std::move(vars);
    r->order_ = std::move(order);
    return r;
}

RingRef Ring::quotient(const RingRef& ambient, const std::vector<Poly>& ideal_gens) {
    require(ambient->is_polynomial_ring(), errc::invalid_argument,
            "quotient base must be a polynomial ring");
    std::vector<Poly> gb = buchberger(ideal_gens, ambient);
    return quotient_from_gb(ambient, std::move(gb));
}

RingRef Ring::quotient_from_gb(const RingRef& ambient, std::vector<Poly> gb) {
    if (gb.empty()) return ambient;
    auto r = std::shared_ptr<Ring>(new Ring());
    r->field_ = ambient->field_;
    r->vars_ = ambient->vars_;
    r->order_ = ambient->order_;
    r->ambient_ = ambient->ambient();
    r->ideal_gb_ = std::move(gb);
    return r;
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

bool Ring::same_presentation(const Ring& o) const {
    if (!field_->same(*o.field_) || vars_ != o.vars_) return false;
    if (ideal_gb_.size() != o.ideal_gb_.size()) return false;
    for (size_t i = 0; i < ideal_gb_.size(); ++i)
        if (ideal_gb_[i] != o.ideal_gb_[i]) return false;
    return true;
}

// ---- polynomial text parser ----

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
};

BigInt lex_integer(PolyLexer& lx) {
    std::string digits;
    while (!lx.eof() && std::isdigit((unsigned char)lx.peek())) digits.push_back(lx.get());
    require(!digits.empty(), errc::invalid_argument, "expected integer in polynomial");
    return BigInt::from_string(digits);
}

std::string lex_ident(PolyLexer& lx) {
    std::string id;
    while (!lx.eof() && (std::isalnum((unsigned char)lx.peek()) || lx.peek() == '_'))
        id.push_back(lx.get());
    return id;
}

Poly parse_sum(PolyLexer& lx, const RingRef& ring);

Poly parse_factor(PolyLexer& lx, const RingRef& ring) {
    char c = lx.peek();
    if (std::isdigit((unsigned char)c)) {
        BigInt n = lex_integer(lx);
        BigInt d(1);
        if (lx.peek() == '/') {
            lx.get();
            d = lex_integer(lx);
        }
        return Poly::constant(ring, FieldElem::of_fraction(ring->field(), n, d));
    }
    if (c == '(') {
        lx.get();
        Poly p = parse_sum(lx, ring);
        require(lx.peek() == ')', errc::invalid_argument, "expected ')' in polynomial");
        lx.get();
        if (lx.peek() == '^') {
            lx.get();
            long long e = lex_integer(lx).to_int64();
            Poly r = Poly::constant(ring, FieldElem::one(ring->field()));
            for (long long k = 0; k < e; ++k) r = r * p;
            return r;
        }
        return p;
    }
    require(std::isalpha((unsigned char)c) || c == '_', errc::invalid_argument,
            std::string("unexpected character '") + c + "' in polynomial");
    std::string name = lex_ident(lx);
    int idx = ring->var_index(name);
    require(idx >= 0, errc::invalid_argument, "unknown variable '" + name + "'");
    int e = 1;
    if (lx.peek() == '^') {
        lx.get();
        e = (int)lex_integer(lx).to_int64();
        require(e >= 0, errc::invalid_argument, "negative exponent");
    }
    return Poly::variable(ring, idx, e);
}

Poly parse_product(PolyLexer& lx, const RingRef& ring) {
    Poly p = parse_factor(lx, ring);
    while (lx.peek() == '*') {
        lx.get();
        p = p * parse_factor(lx, ring);
    }
    return p;
}

Poly parse_sum(PolyLexer& lx, const RingRef& ring) {
    Poly acc(ring);
    bool neg = false;
    if (lx.peek() == '-') {
        lx.get();
        neg = true;
    } else if (lx.peek() == '+') {
        lx.get();
    }
    for (;;) {
        Poly t = parse_product(lx, ring);
        acc = neg ? acc - t : acc + t;
        char c = lx.peek();
        if (c == '+') {
            lx.get();
            neg = false;
        } else if (c == '-') {
            lx.get();
            neg = true;
        } else {
            break;
        }
    }
    return acc;
}

} // namespace

Poly parse_poly(const RingRef& ring, const std::string& text) {
    PolyLexer lx(text);
    Poly p = parse_sum(lx, ring);
    require(lx.eof(), errc::invalid_argument,
            "trailing characters in polynomial: '" + text.substr(lx.i) + "'");
    return p.into(ring);
}

} // namespace dgd
