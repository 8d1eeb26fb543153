#include "dgd/session.hpp"

#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <variant>

namespace dgd {

namespace {

struct ModuleValue {
    DGModInput input;
};

using Value = std::variant<FieldRef, RingRef, DGRingRef, DGRingMap, ModuleValue>;

struct Env {
    std::map<std::string, Value> names;

    template <class T> const T& get(const std::string& n) const {
        auto it = names.find(n);
        require(it != names.end(), errc::invalid_argument, "NameError: undeclared '" + n + "'");
        const T* v = std::get_if<T>(&it->second);
        require(v != nullptr, errc::invalid_argument, "TypeErrorDSL: wrong kind for '" + n + "'");
        return *v;
    }
};

[[noreturn]] void type_error(const std::string& msg) {
    throw Error(errc::invalid_argument, "TypeErrorDSL: " + msg);
}

// ---- element expression parser (DG elements and module columns) ----

// value: scalar part plus coefficients on module generators
struct EV {
    DGElem scalar;
    std::map<int, DGElem> gens;
};

struct ExprParser {
    const DGRingRef& ring;
    const std::vector<SfGen>* modgens; // optional module generator names
    std::string s;
    size_t i = 0;

    char peek() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        return i < s.size() ? s[i] : '\0';
    }
    bool eof() { return peek() == '\0'; }

    EV parse() {
        EV v = parse_sum();
        require(eof(), errc::invalid_argument, "trailing characters in expression: " + s);
        return v;
    }

    EV parse_sum() {
        bool neg = false;
        if (peek() == '-') {
            ++i;
            neg = true;
        } else if (peek() == '+') {
            ++i;
        }
        EV acc = parse_product();
        if (neg) acc = negate(acc);
        while (peek() == '+' || peek() == '-') {
            bool minus = peek() == '-';
            ++i;
            EV t = parse_product();
            if (minus) t = negate(t);
            acc = add(acc, t);
        }
        return acc;
    }

    EV parse_product() {
        EV acc = parse_factor();
        while (peek() == '*') {
            ++i;
            acc = mul(acc, parse_factor());
        }
        return acc;
    }

    EV parse_factor() {
        char c = peek();
        if (c == '(') {
            ++i;
            EV v = parse_sum();
            require(peek() == ')', errc::invalid_argument, "expected ')'");
            ++i;
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) num.push_back(s[i++]);
            BigInt n = BigInt::from_string(num), d(1);
            if (peek() == '/') {
                ++i;
                std::string den;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) den.push_back(s[i++]);
                d = BigInt::from_string(den);
            }
            EV v;
            v.scalar = DGElem::from_poly(
                ring, Poly::constant(ring->base(),
                                     FieldElem::of_fraction(ring->base()->field(), n, d)));
            return v;
        }
        require(std::isalpha((unsigned char)c) || c == '_', errc::invalid_argument,
                std::string("unexpected character '") + c + "' in expression");
        std::string name;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
            name.push_back(s[i++]);
        int power = 1;
        if (peek() == '^') {
            ++i;
            std::string e;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) e.push_back(s[i++]);
            require(!e.empty(), errc::invalid_argument, "expected exponent");
            power = std::stoi(e);
        }
        // module generator?
        if (modgens) {
            for (size_t g = 0; g < modgens->size(); ++g)
                if ((*modgens)[g].name == name) {
                    require(power == 1, errc::invalid_argument,
                            "module generators cannot be raised to powers");
                    EV v;
                    v.gens[(int)g] = DGElem::one(ring);
                    return v;
                }
        }
        // ring variable?
        int vi = ring->base()->var_index(name);
        if (vi >= 0) {
            EV v;
            v.scalar = DGElem::from_poly(ring, Poly::variable(ring->base(), vi, power));
            return v;
        }
        // exterior generator?
        for (int t = 0; t < ring->n_ext(); ++t)
            if (ring->ext_gens()[(size_t)t].name == name) {
                require(power == 1, errc::invalid_argument,
                        "odd generators square to zero; do not raise them to powers");
                EV v;
                v.scalar = DGElem::gen(ring, t);
                return v;
            }
        type_error("unknown name '" + name + "' in expression");
    }

    EV negate(EV v) {
        v.scalar = -v.scalar;
        for (auto& [g, c] : v.gens) c = -c;
        return v;
    }
    EV add(EV a, const EV& b) {
        a.scalar = a.scalar + b.scalar;
        for (const auto& [g, c] : b.gens) {
            auto it = a.gens.find(g);
            if (it == a.gens.end())
                a.gens[g] = c;
            else
                it->second = it->second + c;
        }
        return a;
    }
    EV mul(const EV& a, const EV& b) {
        require(a.gens.empty() || b.gens.empty(), errc::invalid_argument,
                "module generators cannot be multiplied together");
        EV v;
        v.scalar = a.scalar * b.scalar;
        for (const auto& [g, c] : a.gens) v.gens[g] = c * b.scalar;
        for (const auto& [g, c] : b.gens) v.gens[g] = a.scalar * c;
        return v;
    }
};

DGElem parse_elem(const DGRingRef& ring, const std::string& text) {
    ExprParser p{ring, nullptr, text};
    EV v = p.parse();
    return v.scalar;
}

// ---- declaration evaluation ----

void eval_decl(Env& env, const Decl& d) {
    using K = Decl::Kind;
    switch (d.kind) {
    case K::field_fp: env.names[d.name] = Field::Fp((uint64_t)d.num); break;
    case K::field_q: env.names[d.name] = Field::Q(); break;
    case K::ring_poly: {
        MonomialOrder ord;
        if (d.order == "lex")
            ord.kind = MonomialOrder::Kind::lex;
        else if (d.order == "grlex")
            ord.kind = MonomialOrder::Kind::grlex;
        else if (d.order.empty() || d.order == "grevlex")
            ord.kind = MonomialOrder::Kind::grevlex;
        else
            type_error("unknown monomial order '" + d.order + "'");
        env.names[d.name] = Ring::poly_ring(env.get<FieldRef>(d.args[0]), d.texts, ord);
        break;
    }
    case K::ring_quotient: {
        RingRef amb = env.get<RingRef>(d.args[0]);
        require(amb->is_polynomial_ring(), errc::invalid_argument,
                "TypeErrorDSL: quotient base must be a polynomial ring");
        std::vector<Poly> gens;
        for (const auto& t : d.texts) gens.push_back(parse_poly(amb, t));
        env.names[d.name] = Ring::quotient(amb, gens);
        break;
    }
    case K::dgring_ring: env.names[d.name] = DGRing::of_ring(env.get<RingRef>(d.args[0])); break;
    case K::dgring_koszul: {
        RingRef base = env.get<RingRef>(d.args[0]);
        std::vector<Poly> elems;
        for (const auto& t : d.texts) elems.push_back(parse_poly(base, t));
        auto A = DGRing::koszul(base, elems);
        DGValidation v = validate_dg_ring(A);
        if (!v.ok) type_error(v.violation + ": " + v.detail);
        env.names[d.name] = A;
        break;
    }
    case K::dgring_extend: {
        DGRingRef base = env.get<DGRingRef>(d.args[0]);
        std::vector<ExtGen> extra;
        for (const auto& [n, deg] : d.gens) extra.push_back({n, deg});
        auto proto = extend_dgring(base, extra, std::vector<DGElem>(extra.size()));
        std::vector<DGElem> diffs;
        for (const auto& [gn, expr] : d.assigns) {
            (void)gn;
            diffs.push_back(parse_elem(proto, expr));
        }
        auto A = extend_dgring(base, extra, diffs);
        DGValidation v = validate_dg_ring(A);
        if (!v.ok) type_error(v.violation + ": " + v.detail);
        env.names[d.name] = A;
        break;
    }
    case K::dgring_tensor: {
        DGTensor t =
            tensor_dgrings(env.get<DGRingRef>(d.args[0]), env.get<DGRingRef>(d.args[1]));
        env.names[d.name] = t.ring;
        break;
    }
    case K::map: {
        DGRingRef src = env.get<DGRingRef>(d.args[0]);
        DGRingRef tgt = env.get<DGRingRef>(d.args[1]);
        std::map<std::string, std::string> images;
        for (const auto& [k, v] : d.assigns) {
            require(!images.count(k), errc::invalid_argument,
                    "TypeErrorDSL: duplicate image for '" + k + "'");
            images[k] = v;
        }
        std::vector<Poly> vi;
        for (int v = 0; v < src->base()->nvars(); ++v) {
            const std::string& n = src->base()->vars()[(size_t)v];
            auto it = images.find(n);
            require(it != images.end(), errc::invalid_argument,
                    "TypeErrorDSL: missing image for variable '" + n + "'");
            DGElem e = parse_elem(tgt, it->second);
            require(e.is_zero() || e.homogeneous_of(0), errc::invalid_argument,
                    "TypeErrorDSL: image of '" + n + "' must have degree 0");
            vi.push_back(e.coeff_of(0));
            images.erase(it);
        }
        std::vector<DGElem> gi;
        for (int t = 0; t < src->n_ext(); ++t) {
            const std::string& n = src->ext_gens()[(size_t)t].name;
            auto it = images.find(n);
            require(it != images.end(), errc::invalid_argument,
                    "TypeErrorDSL: missing image for generator '" + n + "'");
            gi.push_back(parse_elem(tgt, it->second));
            images.erase(it);
        }
        if (!images.empty())
            type_error("image given for unknown generator '" + images.begin()->first + "'");
        env.names[d.name] = DGRingMap(src, tgt, vi, gi);
        break;
    }
    case K::module_semifree: {
        DGRingRef A = env.get<DGRingRef>(d.args[0]);
        std::vector<SfGen> gens;
        for (const auto& [n, deg] : d.gens) gens.push_back({n, deg});
        SemiFreeDGMod m = SemiFreeDGMod::free_module(A, gens);
        for (const auto& [gn, expr] : d.assigns) {
            int j = -1;
            for (size_t g = 0; g < gens.size(); ++g)
                if (gens[g].name == gn) j = (int)g;
            require(j >= 0, errc::invalid_argument,
                    "TypeErrorDSL: d given for unknown generator '" + gn + "'");
            ExprParser p{A, &gens, expr};
            EV v = p.parse();
            require(v.scalar.is_zero(), errc::invalid_argument,
                    "TypeErrorDSL: d(" + gn + ") must be a combination of generators");
            for (const auto& [i, c] : v.gens) m.set_entry(i, j, c);
        }
        try {
            validate_semifree(m);
        } catch (const Error& e) {
            type_error(std::string("differential must raise degree by one with d^2 = 0 (") +
                       e.what() + ")");
        }
        env.names[d.name] = ModuleValue{DGModInput::of(m)};
        break;
    }
    case K::module_h0: {
        DGRingRef A = env.get<DGRingRef>(d.args[0]);
        ModulePres pres;
        pres.ring = A->bar();
        pres.n_gens = 1;
        for (const auto& t : d.texts) {
            FreeVec v(pres.ring, 1);
            v.comps[0] = parse_poly(pres.ring, t);
            if (!v.is_zero()) pres.relations.push_back(v);
        }
        env.names[d.name] = ModuleValue{DGModInput::of_module(A, pres)};
        break;
    }
    case K::module_rigid: {
        DGRingRef A = env.get<DGRingRef>(d.args[0]);
        DualizingDatum datum = rigid_dualizing(A);
        env.names[d.name] = ModuleValue{DGModInput::of(datum.R)};
        break;
    }
    case K::module_shift: {
        const ModuleValue& m = env.get<ModuleValue>(d.args[0]);
        require(m.input.kind == DGModInput::Kind::semifree, errc::invalid_argument,
                "TypeErrorDSL: shift applies to semifree modules");
        env.names[d.name] = ModuleValue{DGModInput::of(shift(m.input.sf, (int)d.num))};
        break;
    }
    case K::module_omega: {
        const DGRingMap& f = env.get<DGRingMap>(d.args[0]);
        env.names[d.name] = ModuleValue{DGModInput::of(omega_smooth(f))};
        break;
    }
    }
}

// ---- command evaluation ----

json window_json(int lo, int hi) { return json::array({lo, hi}); }

std::pair<int, int> cmd_window(const Command& c, const SessionOptions& opt) {
    if (c.window) return *c.window;
    return {opt.win_lo, opt.win_hi};
}

json provenance_json(const std::vector<ProvenanceStep>& steps) {
    json out = json::array();
    for (const auto& s : steps)
        out.push_back({{"step", s.what}, {"floor", s.floor}, {"top", s.top}});
    return out;
}

json gens_per_degree_json(const SemiFreeDGMod& m) {
    std::map<int, int> per;
    for (const auto& g : m.gens()) per[g.degree]++;
    json out = json::object();
    for (auto& [d, c] : per) out[std::to_string(d)] = c;
    return out;
}

json verification_json(const VerificationReport& rep, bool expect_fail) {
    bool ok = expect_fail ? !rep.pass : rep.pass;
    return json{{"theorem", rep.theorem},
                {"window", window_json(rep.lo, rep.hi)},
                {"left", fingerprint_json(rep.left)},
                {"right", fingerprint_json(rep.right)},
                {"verdict", rep.pass ? "pass" : "fail"},
                {"expected_verdict", expect_fail ? "fail" : "pass"},
                {"as_expected", ok},
                {"detail", rep.detail},
                {"caveat", rep.caveat}};
}

json eval_command(Env& env, const Command& c, const SessionOptions& opt) {
    using K = Command::Kind;
    auto [lo, hi] = cmd_window(c, opt);
    DerivedOpts dop;
    dop.floor_cap = opt.floor_cap;
    dop.extra_floor = opt.extra_floor;
    json result = json::object();
    json warnings = json::array();
    switch (c.kind) {
    case K::gb: {
        RingRef R = env.get<RingRef>(c.args[0]);
        std::vector<Poly> gens;
        for (const auto& t : c.texts) gens.push_back(parse_poly(R, t));
        auto basis = buchberger(gens, R);
        json b = json::array();
        for (const auto& g : basis) b.push_back(g.to_string());
        result["basis"] = b;
        break;
    }
    case K::resolve: {
        const ModuleValue& m = env.get<ModuleValue>(c.args[0]);
        int floor = c.floor ? *c.floor : lo;
        TruncatedComplex t;
        if (m.input.kind == DGModInput::Kind::semifree)
            t = semifree_resolution(m.input.sf, floor);
        else
            t = semifree_resolution(m.input.ring, m.input.mod, floor);
        result["floor"] = floor;
        result["gens_per_degree"] = gens_per_degree_json(t.complex);
        result["certified_above"] =
            t.cert_lo == INT_MIN ? json("-inf") : json(t.cert_lo - 1);
        break;
    }
    case K::cohomology: {
        const ModuleValue& m = env.get<ModuleValue>(c.args[0]);
        FpEntry e;
        if (m.input.kind == DGModInput::Kind::semifree) {
            e = fingerprint_entry(cohomology(m.input.sf, c.degree));
        } else {
            e = c.degree == 0 ? module_fingerprint_entry(m.input.mod) : FpEntry{};
        }
        result["degree"] = c.degree;
        result["entry"] = fingerprint_json(CohFingerprint{c.degree, c.degree, {{c.degree, e}}})
                              ["entries"];
        break;
    }
    case K::rhom:
    case K::tensor: {
        const ModuleValue& m = env.get<ModuleValue>(c.args[0]);
        const ModuleValue& n = env.get<ModuleValue>(c.args[1]);
        DerivedResult r = c.kind == K::rhom ? rhom(m.input, n.input, lo, hi, dop)
                                            : derived_tensor(m.input, n.input, lo, hi, dop);
        result["window"] = window_json(lo, hi);
        result["fingerprint"] = fingerprint_json(r.fp);
        result["provenance"] = provenance_json(r.provenance);
        break;
    }
    case K::hochschild: {
        DGRingRef A = env.get<DGRingRef>(c.args[0]);
        const ModuleValue& m = env.get<ModuleValue>(c.args[1]);
        const ModuleValue& n = env.get<ModuleValue>(c.args[2]);
        DerivedResult r = hochschild(A, m.input, n.input, lo, hi, dop);
        result["window"] = window_json(lo, hi);
        result["fingerprint"] = fingerprint_json(r.fp);
        result["provenance"] = provenance_json(r.provenance);
        break;
    }
    case K::rigid: {
        DGRingRef A = env.get<DGRingRef>(c.args[0]);
        DualizingDatum d = rigid_dualizing(A);
        result["shift"] = d.shift;
        result["trace"] = d.trace;
        result["fingerprint"] = fingerprint_json(fingerprint(d.R, lo, hi));
        break;
    }
    case K::omega: {
        const DGRingMap& f = env.get<DGRingMap>(c.args[0]);
        SemiFreeDGMod omega = omega_smooth(f);
        result["adjoined_variables"] = -omega.gen_degree(0);
        result["gens_per_degree"] = gens_per_degree_json(omega);
        warnings.push_back("Spec of the target H^0 assumed connected; not verified");
        break;
    }
    case K::shriek: {
        const DGRingMap& f = env.get<DGRingMap>(c.args[0]);
        const ModuleValue& m = env.get<ModuleValue>(c.args[1]);
        DerivedResult r = shriek(f, m.input, lo, hi, dop);
        result["window"] = window_json(lo, hi);
        result["fingerprint"] = fingerprint_json(r.fp);
        result["provenance"] = provenance_json(r.provenance);
        break;
    }
    case K::verify: {
        const std::string& family = c.args[0];
        VerificationReport rep;
        if (family == "rigidity") {
            DGRingRef A = env.get<DGRingRef>(c.args[1]);
            const ModuleValue& r = env.get<ModuleValue>(c.args[2]);
            require(r.input.kind == DGModInput::Kind::semifree, errc::invalid_argument,
                    "TypeErrorDSL: rigidity candidate must be semifree");
            rep = verify_rigidity(A, r.input.sf, lo, hi, dop);
        } else if (family == "finite") {
            rep = verify_finite(env.get<DGRingMap>(c.args[1]),
                                env.get<ModuleValue>(c.args[2]).input, lo, hi, dop);
        } else if (family == "smooth") {
            rep = verify_smooth(env.get<DGRingMap>(c.args[1]),
                                env.get<ModuleValue>(c.args[2]).input, lo, hi, dop);
            warnings.push_back("Spec of the target H^0 assumed connected; not verified");
        } else if (family == "reduction") {
            rep = verify_reduction(env.get<DGRingRef>(c.args[1]),
                                   env.get<ModuleValue>(c.args[2]).input,
                                   env.get<ModuleValue>(c.args[3]).input, lo, hi, dop);
        } else if (family == "tensor_dualizing") {
            rep = verify_tensor_dualizing(env.get<DGRingRef>(c.args[1]),
                                          env.get<DGRingRef>(c.args[2]), lo, hi, dop);
        } else if (family == "unit") {
            std::vector<DGModInput> samples;
            for (size_t k = 2; k < c.args.size(); ++k)
                samples.push_back(env.get<ModuleValue>(c.args[k]).input);
            rep = verify_unit(env.get<DGRingRef>(c.args[1]), samples, lo, hi, dop);
        } else if (family == "base_change") {
            rep = verify_base_change(env.get<DGRingMap>(c.args[1]),
                                     env.get<DGRingRef>(c.args[2]),
                                     env.get<ModuleValue>(c.args[3]).input, lo, hi, dop);
        } else if (family == "box_hom") {
            rep = verify_box_hom(env.get<DGRingRef>(c.args[1]), env.get<DGRingRef>(c.args[2]),
                                 env.get<ModuleValue>(c.args[3]).input,
                                 env.get<ModuleValue>(c.args[4]).input,
                                 env.get<ModuleValue>(c.args[5]).input,
                                 env.get<ModuleValue>(c.args[6]).input, lo, hi, dop);
        } else if (family == "duality_swap") {
            rep = verify_duality_swap(env.get<DGRingRef>(c.args[1]),
                                      env.get<ModuleValue>(c.args[2]).input,
                                      env.get<ModuleValue>(c.args[3]).input, lo, hi, dop);
        } else if (family == "diagonal_tensor") {
            rep = verify_diagonal_tensor(env.get<DGRingRef>(c.args[1]),
                                         env.get<ModuleValue>(c.args[2]).input,
                                         env.get<ModuleValue>(c.args[3]).input, lo, hi, dop);
        } else {
            type_error("unknown verify family '" + family + "'");
        }
        result = verification_json(rep, c.expect_fail);
        result["family"] = family;
        break;
    }
    }
    json out;
    out["result"] = result;
    out["warnings"] = warnings;
    return out;
}

} // namespace

json fingerprint_json(const CohFingerprint& fp) {
    json entries = json::object();
    for (const auto& [d, e] : fp.entries) {
        if (e.finite && e.dim == 0) continue;
        json je;
        if (e.finite) {
            je = {{"kind", "dim"}, {"value", e.dim}};
        } else {
            je = {{"kind", "module"}, {"min_gens", e.mingens}, {"annihilator", e.ann}};
        }
        entries[std::to_string(d)] = je;
    }
    return json{{"window", json::array({fp.lo, fp.hi})}, {"entries", entries}};
}

SessionResult run_session(const SessionAST& ast, const SessionOptions& opt) {
    SessionResult out;
    Env env;
    for (const auto& d : ast.decls) eval_decl(env, d); // declaration errors propagate
    for (const auto& c : ast.cmds) {
        auto t0 = std::chrono::steady_clock::now();
        json rep;
        rep["command"] = c.echo;
        try {
            json r = eval_command(env, c, opt);
            rep["status"] = "ok";
            rep["result"] = r["result"];
            rep["warnings"] = r["warnings"];
            if (c.kind == Command::Kind::verify && !rep["result"]["as_expected"].get<bool>())
                out.any_error = true;
        } catch (const Error& e) {
            rep["status"] = "error";
            rep["error"] = {{"kind", errc_name(e.code())}, {"message", e.what()}};
            rep["warnings"] = json::array();
            out.any_error = true;
        }
        rep["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out.reports.push_back(rep);
    }
    return out;
}

json report_envelope(const SessionResult& r) {
    return json{{"version", 1}, {"reports", r.reports}, {"ok", !r.any_error}};
}

namespace {

std::string fp_entry_text(const json& e) {
    if (e["kind"] == "dim") return "dim " + e["value"].dump();
    std::string s = "gens " + e["min_gens"].dump() + ", ann (";
    bool first = true;
    for (const auto& a : e["annihilator"]) {
        if (!first) s += ", ";
        s += a.get<std::string>();
        first = false;
    }
    return s + ")";
}

std::string fp_text(const json& fp) {
    std::string s = "{";
    bool first = true;
    for (auto it = fp["entries"].begin(); it != fp["entries"].end(); ++it) {
        if (!first) s += "; ";
        s += "H^" + it.key() + ": " + fp_entry_text(it.value());
        first = false;
    }
    return s + (first ? "0}" : "}");
}

} // namespace

std::string render_reports_text(const json& envelope) {
    std::string out;
    for (const auto& rep : envelope["reports"]) {
        out += "> " + rep["command"].get<std::string>() + "\n";
        if (rep["status"] == "error") {
            out += "  error " + rep["error"]["kind"].get<std::string>() + ": " +
                   rep["error"]["message"].get<std::string>() + "\n";
            continue;
        }
        const json& r = rep["result"];
        if (r.contains("basis")) {
            for (const auto& g : r["basis"]) out += "  " + g.get<std::string>() + "\n";
        }
        if (r.contains("gens_per_degree")) out += "  gens " + r["gens_per_degree"].dump() + "\n";
        if (r.contains("certified_above"))
            out += "  certified above " + r["certified_above"].dump() + "\n";
        if (r.contains("shift")) out += "  R = A[" + r["shift"].dump() + "]\n";
        if (r.contains("entry")) out += "  H^" + r["degree"].dump() + ": " + fp_text(json{{"entries", r["entry"]}}) + "\n";
        if (r.contains("fingerprint")) out += "  " + fp_text(r["fingerprint"]) + "\n";
        if (r.contains("verdict")) {
            out += "  " + r["theorem"].get<std::string>() + "\n";
            out += "  left  " + fp_text(r["left"]) + "\n";
            out += "  right " + fp_text(r["right"]) + "\n";
            out += "  verdict: " + r["verdict"].get<std::string>() +
                   (r["as_expected"].get<bool>() ? "" : " (UNEXPECTED)") + "\n";
            out += "  note: " + r["caveat"].get<std::string>() + "\n";
        }
        for (const auto& w : rep["warnings"])
            out += "  warning: " + w.get<std::string>() + "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "  (%.1f ms)\n", rep["timing_ms"].get<double>());
        out += buf;
    }
    return out;
}

CorpusOutcome run_corpus(const std::string& dir, const std::string& only_instance,
                         const std::string& only_family, const SessionOptions& opt) {
    namespace fs = std::filesystem;
    CorpusOutcome out;
    out.all_pass = true;
    json instances = json::array();
    std::vector<fs::path> files;
    fs::path idir = fs::path(dir) / "instances";
    require(fs::exists(idir), errc::invalid_argument, "corpus directory not found: " + dir);
    for (const auto& e : fs::directory_iterator(idir))
        if (e.path().extension() == ".dgd") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::string name = f.stem().string();
        if (!only_instance.empty() && name != only_instance) continue;
        json inst;
        inst["instance"] = name;
        std::ifstream in(f);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        bool pass = true;
        try {
            SessionAST ast = parse_session(text);
            if (!only_family.empty()) {
                bool has = false;
                for (const auto& c : ast.cmds)
                    if (c.kind == Command::Kind::verify && c.args[0] == only_family) has = true;
                if (!has) continue;
            }
            SessionResult r = run_session(ast, opt);
            // collect the verify reports
            json checks = json::array();
            for (const auto& rep : r.reports) {
                if (rep["status"] == "error") {
                    pass = false;
                    checks.push_back(rep);
                    continue;
                }
                if (rep["result"].contains("verdict")) checks.push_back(rep["result"]);
            }
            inst["checks"] = checks;
            // compare against the expected-value file
            fs::path exp = fs::path(dir) / "expected" / (name + ".json");
            if (fs::exists(exp)) {
                std::ifstream ein(exp);
                json expected = json::parse(ein);
                const json& want = expected["checks"];
                if (want.size() != checks.size()) {
                    pass = false;
                    inst["mismatch"] = "expected " + std::to_string(want.size()) +
                                       " checks, got " + std::to_string(checks.size());
                } else {
                    for (size_t k = 0; k < checks.size(); ++k) {
                        const json& w = want[k];
                        const json& g = checks[k];
                        if (w.contains("verdict") && g["verdict"] != w["verdict"]) pass = false;
                        if (w.contains("left") && g["left"] != w["left"]) pass = false;
                        if (w.contains("right") && g["right"] != w["right"]) pass = false;
                        if (w.contains("provenance")) continue; // documentation only
                    }
                    if (!pass) inst["mismatch"] = "computed checks differ from expected values";
                }
            } else {
                pass = false;
                inst["mismatch"] = "missing expected-value file";
            }
            // unexpected verdicts also fail
            for (const auto& ch : checks)
                if (ch.contains("as_expected") && !ch["as_expected"].get<bool>()) pass = false;
        } catch (const std::exception& e) {
            pass = false;
            inst["error"] = e.what();
        }
        inst["pass"] = pass;
        out.all_pass = out.all_pass && pass;
        instances.push_back(inst);
    }
    out.summary = json{{"corpus", dir}, {"instances", instances}, {"all_pass", out.all_pass}};
    return out;
}

} // namespace dgd
