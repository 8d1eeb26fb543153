#include "dgd/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace dgd {

namespace {

struct Tok {
    enum class Kind { ident, integer, punct, arrow, dots, end };
    Kind kind = Kind::end;
    std::string text;
    SrcSpan span;
};

struct LineLexer {
    std::string s;
    int line = 1;
    size_t i = 0;
    std::vector<Tok> toks;
    size_t pos = 0;

    LineLexer(std::string str, int ln) : s(std::move(str)), line(ln) { tokenize(); }

    void tokenize() {
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace((unsigned char)c)) {
                ++i;
                continue;
            }
            if (c == '#') break;
            SrcSpan sp{line, (int)i + 1};
            if (std::isalpha((unsigned char)c) || c == '_') {
                size_t j = i;
                while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
                toks.push_back({Tok::Kind::ident, s.substr(i, j - i), sp});
                i = j;
            } else if (std::isdigit((unsigned char)c)) {
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                toks.push_back({Tok::Kind::integer, s.substr(i, j - i), sp});
                i = j;
            } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
                toks.push_back({Tok::Kind::arrow, "->", sp});
                i += 2;
            } else if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
                toks.push_back({Tok::Kind::dots, "..", sp});
                i += 2;
            } else {
                toks.push_back({Tok::Kind::punct, std::string(1, c), sp});
                ++i;
            }
        }
        toks.push_back({Tok::Kind::end, "", {line, (int)s.size() + 1}});
    }

    const Tok& peek(size_t ahead = 0) const {
        size_t k = pos + ahead;
        return k < toks.size() ? toks[k] : toks.back();
    }
    Tok get() {
        Tok t = peek();
        if (pos < toks.size() - 1) ++pos;
        return t;
    }
    bool at_end() const { return peek().kind == Tok::Kind::end; }
    [[noreturn]] void fail_here(const std::string& what, const std::string& expected) const {
        throw ParseError(what, peek().span, expected);
    }
    void expect_punct(const std::string& p) {
        if (peek().kind != Tok::Kind::punct || peek().text != p)
            fail_here("unexpected token '" + peek().text + "'", "'" + p + "'");
        get();
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind != Tok::Kind::ident)
            fail_here("unexpected token '" + peek().text + "'", what);
        return get().text;
    }
    long long expect_int() {
        bool neg = false;
        if (peek().kind == Tok::Kind::punct && peek().text == "-") {
            neg = true;
            get();
        }
        if (peek().kind != Tok::Kind::integer)
            fail_here("unexpected token '" + peek().text + "'", "integer");
        long long v = std::stoll(get().text);
        return neg ? -v : v;
    }
    // raw text up to one of the stop punctuation tokens (for polynomials
    // and element expressions), balanced in parentheses
    std::string raw_until(const std::string& stops) {
        std::string out;
        int depth = 0;
        while (!at_end()) {
            const Tok& t = peek();
            if (t.kind == Tok::Kind::punct && depth == 0 &&
                stops.find(t.text[0]) != std::string::npos)
                break;
            if (t.kind == Tok::Kind::punct && (t.text == "(" || t.text == "[" || t.text == "{"))
                ++depth;
            if (t.kind == Tok::Kind::punct && (t.text == ")" || t.text == "]" || t.text == "}")) {
                if (depth == 0) break;
                --depth;
            }
            if (!out.empty()) out += " ";
            out += get().text;
        }
        if (out.empty()) fail_here("empty expression", "an expression");
        return out;
    }
};

struct NameTable {
    std::map<std::string, Decl::Kind> kinds;

    void declare(const std::string& name, Decl::Kind k, SrcSpan sp) {
        if (kinds.count(name))
            throw ParseError("NameError: name '" + name + "' is already declared", sp, "");
        kinds[name] = k;
    }
    Decl::Kind lookup(const std::string& name, SrcSpan sp) const {
        auto it = kinds.find(name);
        if (it == kinds.end())
            throw ParseError("NameError: undeclared name '" + name + "'", sp, "");
        return it->second;
    }
    bool is_field(Decl::Kind k) const {
        return k == Decl::Kind::field_fp || k == Decl::Kind::field_q;
    }
    bool is_ring(Decl::Kind k) const {
        return k == Decl::Kind::ring_poly || k == Decl::Kind::ring_quotient;
    }
    bool is_dgring(Decl::Kind k) const {
        return k == Decl::Kind::dgring_ring || k == Decl::Kind::dgring_koszul ||
               k == Decl::Kind::dgring_extend || k == Decl::Kind::dgring_tensor;
    }
    bool is_map(Decl::Kind k) const { return k == Decl::Kind::map; }
    bool is_module(Decl::Kind k) const {
        return k == Decl::Kind::module_semifree || k == Decl::Kind::module_h0 ||
               k == Decl::Kind::module_rigid || k == Decl::Kind::module_shift ||
               k == Decl::Kind::module_omega;
    }
    void check(const std::string& name, const char* want, LineLexer& lx) const {
        Decl::Kind k = lookup(name, lx.peek().span);
        std::string w = want;
        bool ok = (w == "field" && is_field(k)) || (w == "ring" && is_ring(k)) ||
                  (w == "dgring" && is_dgring(k)) || (w == "map" && is_map(k)) ||
                  (w == "module" && is_module(k));
        if (!ok)
            throw ParseError("TypeErrorDSL: '" + name + "' is not a " + w, lx.peek().span, "");
    }
};

std::string ref(LineLexer& lx, NameTable& names, const char* want) {
    std::string n = lx.expect_ident(std::string(want) + " name");
    // re-point the span at the name we just read for error reporting
    names.lookup(n, lx.toks[lx.pos - 1].span);
    Decl::Kind k = names.kinds.at(n);
    std::string w = want;
    bool ok = (w == "field" && names.is_field(k)) || (w == "ring" && names.is_ring(k)) ||
              (w == "dgring" && names.is_dgring(k)) || (w == "map" && names.is_map(k)) ||
              (w == "module" && names.is_module(k));
    if (!ok)
        throw ParseError("TypeErrorDSL: '" + n + "' is not a " + w, lx.toks[lx.pos - 1].span,
                         "");
    return n;
}

Decl parse_decl(LineLexer& lx, NameTable& names, const std::string& head) {
    Decl d;
    d.span = lx.peek().span;
    d.name = lx.expect_ident("declaration name");
    lx.expect_punct("=");
    std::string form = lx.expect_ident("constructor");
    auto parse_list_texts = [&](const char* stops) {
        for (;;) {
            d.texts.push_back(lx.raw_until(stops));
            if (lx.peek().kind == Tok::Kind::punct && lx.peek().text == ",") {
                lx.get();
                continue;
            }
            break;
        }
    };
    if (head == "field") {
        if (form == "Fp") {
            d.kind = Decl::Kind::field_fp;
            lx.expect_punct("(");
            d.num = lx.expect_int();
            lx.expect_punct(")");
        } else if (form == "QQ") {
            d.kind = Decl::Kind::field_q;
            lx.expect_punct("(");
            lx.expect_punct(")");
        } else {
            lx.fail_here("unknown field constructor '" + form + "'", "Fp or QQ");
        }
    } else if (head == "ring") {
        if (form == "poly") {
            d.kind = Decl::Kind::ring_poly;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "field"));
            if (lx.peek().text == ";") {
                lx.get();
                for (;;) {
                    d.texts.push_back(lx.expect_ident("variable name"));
                    if (lx.peek().text == ",") {
                        lx.get();
                        continue;
                    }
                    break;
                }
            }
            lx.expect_punct(")");
            if (lx.peek().kind == Tok::Kind::ident) d.order = lx.get().text;
        } else if (form == "quotient") {
            d.kind = Decl::Kind::ring_quotient;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "ring"));
            lx.expect_punct(";");
            parse_list_texts(",)");
            lx.expect_punct(")");
        } else {
            lx.fail_here("unknown ring constructor '" + form + "'", "poly or quotient");
        }
    } else if (head == "dgring") {
        if (form == "ring") {
            d.kind = Decl::Kind::dgring_ring;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "ring"));
            lx.expect_punct(")");
        } else if (form == "koszul") {
            d.kind = Decl::Kind::dgring_koszul;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "ring"));
            lx.expect_punct(";");
            parse_list_texts(",)");
            lx.expect_punct(")");
        } else if (form == "extend") {
            d.kind = Decl::Kind::dgring_extend;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "dgring"));
            lx.expect_punct(";");
            for (;;) {
                std::string gn = lx.expect_ident("generator name");
                lx.expect_punct(":");
                int deg = (int)lx.expect_int();
                d.gens.push_back({gn, deg});
                if (lx.peek().kind == Tok::Kind::arrow) {
                    lx.get();
                    d.assigns.push_back({gn, lx.raw_until(",)")});
                } else {
                    d.assigns.push_back({gn, "0"});
                }
                if (lx.peek().text == ",") {
                    lx.get();
                    continue;
                }
                break;
            }
            lx.expect_punct(")");
        } else if (form == "tensor") {
            d.kind = Decl::Kind::dgring_tensor;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "dgring"));
            lx.expect_punct(",");
            d.args.push_back(ref(lx, names, "dgring"));
            lx.expect_punct(")");
        } else {
            lx.fail_here("unknown dgring constructor '" + form + "'",
                         "ring, koszul, extend or tensor");
        }
    } else if (head == "module") {
        if (form == "semifree") {
            d.kind = Decl::Kind::module_semifree;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "dgring"));
            lx.expect_punct(";");
            std::string key = lx.expect_ident("gens");
            if (key != "gens") lx.fail_here("expected 'gens'", "gens = [...]");
            lx.expect_punct("=");
            lx.expect_punct("[");
            for (;;) {
                lx.expect_punct("(");
                std::string gn = lx.expect_ident("generator name");
                lx.expect_punct(",");
                int deg = (int)lx.expect_int();
                lx.expect_punct(")");
                d.gens.push_back({gn, deg});
                if (lx.peek().text == ",") {
                    lx.get();
                    continue;
                }
                break;
            }
            lx.expect_punct("]");
            if (lx.peek().text == ",") {
                lx.get();
                std::string dkey = lx.expect_ident("d");
                if (dkey != "d") lx.fail_here("expected 'd'", "d = {...}");
                lx.expect_punct("=");
                lx.expect_punct("{");
                if (lx.peek().text != "}") {
                    for (;;) {
                        std::string gn = lx.expect_ident("generator name");
                        if (lx.peek().kind != Tok::Kind::arrow)
                            lx.fail_here("expected '->'", "->");
                        lx.get();
                        d.assigns.push_back({gn, lx.raw_until(",}")});
                        if (lx.peek().text == ",") {
                            lx.get();
                            continue;
                        }
                        break;
                    }
                }
                lx.expect_punct("}");
            }
            lx.expect_punct(")");
        } else if (form == "h0") {
            d.kind = Decl::Kind::module_h0;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "dgring"));
            if (lx.peek().text == ";") {
                lx.get();
                parse_list_texts(",)");
            }
            lx.expect_punct(")");
        } else if (form == "rigid") {
            d.kind = Decl::Kind::module_rigid;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "dgring"));
            lx.expect_punct(")");
        } else if (form == "shift") {
            d.kind = Decl::Kind::module_shift;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "module"));
            lx.expect_punct(",");
            d.num = lx.expect_int();
            lx.expect_punct(")");
        } else if (form == "omega") {
            d.kind = Decl::Kind::module_omega;
            lx.expect_punct("(");
            d.args.push_back(ref(lx, names, "map"));
            lx.expect_punct(")");
        } else {
            lx.fail_here("unknown module constructor '" + form + "'",
                         "semifree, h0, rigid, shift or omega");
        }
    } else {
        lx.fail_here("unknown declaration head '" + head + "'", "field, ring, dgring, module");
    }
    if (!lx.at_end()) lx.fail_here("trailing tokens after declaration", "end of line");
    names.declare(d.name, d.kind, d.span);
    return d;
}

Decl parse_map_decl(LineLexer& lx, NameTable& names) {
    Decl d;
    d.kind = Decl::Kind::map;
    d.span = lx.peek().span;
    d.name = lx.expect_ident("map name");
    lx.expect_punct(":");
    d.args.push_back(ref(lx, names, "dgring"));
    if (lx.peek().kind != Tok::Kind::arrow) lx.fail_here("expected '->'", "->");
    lx.get();
    d.args.push_back(ref(lx, names, "dgring"));
    lx.expect_punct("{");
    if (lx.peek().text != "}") {
        for (;;) {
            std::string src = lx.expect_ident("generator name");
            if (lx.peek().kind != Tok::Kind::arrow) lx.fail_here("expected '->'", "->");
            lx.get();
            d.assigns.push_back({src, lx.raw_until(",}")});
            if (lx.peek().text == ",") {
                lx.get();
                continue;
            }
            break;
        }
    }
    lx.expect_punct("}");
    if (!lx.at_end()) lx.fail_here("trailing tokens after declaration", "end of line");
    names.declare(d.name, d.kind, d.span);
    return d;
}

void parse_command_options(LineLexer& lx, Command& c) {
    while (!lx.at_end()) {
        if (lx.peek().text == "-" && lx.peek(1).text == "-") {
            lx.get();
            lx.get();
            std::string opt = lx.expect_ident("option name");
            if (opt == "floor") {
                c.floor = (int)lx.expect_int();
            } else if (opt == "window") {
                int a = (int)lx.expect_int();
                if (lx.peek().kind != Tok::Kind::dots) lx.fail_here("expected '..'", "..");
                lx.get();
                int b = (int)lx.expect_int();
                c.window = {a, b};
            } else if (opt == "expect") {
                std::string v = lx.expect_ident("fail");
                if (v != "fail") lx.fail_here("expected 'fail'", "fail");
                c.expect_fail = true;
            } else {
                lx.fail_here("unknown option '--" + opt + "'", "floor, window or expect");
            }
        } else {
            lx.fail_here("unexpected token '" + lx.peek().text + "'", "an option");
        }
    }
}

Command parse_command(LineLexer& lx, NameTable& names, const std::string& head) {
    Command c;
    c.span = lx.peek().span;
    auto opt_tail = [&] { parse_command_options(lx, c); };
    if (head == "gb") {
        c.kind = Command::Kind::gb;
        c.args.push_back(ref(lx, names, "ring"));
        lx.expect_punct(";");
        for (;;) {
            c.texts.push_back(lx.raw_until(","));
            if (lx.peek().text == ",") {
                lx.get();
                continue;
            }
            break;
        }
    } else if (head == "resolve") {
        c.kind = Command::Kind::resolve;
        c.args.push_back(ref(lx, names, "module"));
        opt_tail();
    } else if (head == "cohomology") {
        c.kind = Command::Kind::cohomology;
        c.args.push_back(ref(lx, names, "module"));
        c.degree = (int)lx.expect_int();
    } else if (head == "rhom" || head == "tensor") {
        c.kind = head == "rhom" ? Command::Kind::rhom : Command::Kind::tensor;
        c.args.push_back(ref(lx, names, "module"));
        c.args.push_back(ref(lx, names, "module"));
        opt_tail();
    } else if (head == "hochschild") {
        c.kind = Command::Kind::hochschild;
        c.args.push_back(ref(lx, names, "dgring"));
        c.args.push_back(ref(lx, names, "module"));
        c.args.push_back(ref(lx, names, "module"));
        opt_tail();
    } else if (head == "rigid") {
        c.kind = Command::Kind::rigid;
        c.args.push_back(ref(lx, names, "dgring"));
    } else if (head == "omega") {
        c.kind = Command::Kind::omega;
        c.args.push_back(ref(lx, names, "map"));
    } else if (head == "shriek") {
        c.kind = Command::Kind::shriek;
        c.args.push_back(ref(lx, names, "map"));
        c.args.push_back(ref(lx, names, "module"));
        opt_tail();
    } else if (head == "verify") {
        c.kind = Command::Kind::verify;
        std::string family = lx.expect_ident("verify family");
        c.args.push_back(family);
        if (family == "rigidity") {
            c.args.push_back(ref(lx, names, "dgring"));
            c.args.push_back(ref(lx, names, "module"));
        } else if (family == "finite" || family == "smooth") {
            c.args.push_back(ref(lx, names, "map"));
            c.args.push_back(ref(lx, names, "module"));
        } else if (family == "reduction" || family == "duality_swap" ||
                   family == "diagonal_tensor") {
            c.args.push_back(ref(lx, names, "dgring"));
            c.args.push_back(ref(lx, names, "module"));
            c.args.push_back(ref(lx, names, "module"));
        } else if (family == "tensor_dualizing") {
            c.args.push_back(ref(lx, names, "dgring"));
            c.args.push_back(ref(lx, names, "dgring"));
        } else if (family == "unit") {
            c.args.push_back(ref(lx, names, "dgring"));
            while (!lx.at_end() && lx.peek().kind == Tok::Kind::ident)
                c.args.push_back(ref(lx, names, "module"));
        } else if (family == "base_change") {
            c.args.push_back(ref(lx, names, "map"));
            c.args.push_back(ref(lx, names, "dgring"));
            c.args.push_back(ref(lx, names, "module"));
        } else if (family == "box_hom") {
            c.args.push_back(ref(lx, names, "dgring"));
            c.args.push_back(ref(lx, names, "dgring"));
            for (int k = 0; k < 4; ++k) c.args.push_back(ref(lx, names, "module"));
        } else {
            lx.fail_here("unknown verify family '" + family + "'",
                         "rigidity, finite, smooth, reduction, tensor_dualizing, unit, "
                         "base_change, box_hom, duality_swap or diagonal_tensor");
        }
        opt_tail();
    } else {
        lx.fail_here("unknown command '" + head + "'", "a command");
    }
    if (!lx.at_end()) lx.fail_here("trailing tokens after command", "end of line");
    return c;
}

} // namespace

SessionAST parse_session(const std::string& text) {
    SessionAST ast;
    NameTable names;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineLexer lx(line, lineno);
        if (lx.at_end()) continue;
        std::string head = lx.expect_ident("a declaration or command");
        if (head == "field" || head == "ring" || head == "dgring" || head == "module") {
            ast.decls.push_back(parse_decl(lx, names, head));
        } else if (head == "map") {
            ast.decls.push_back(parse_map_decl(lx, names));
        } else {
            Command c = parse_command(lx, names, head);
            std::string echo = line;
            size_t h = echo.find('#');
            if (h != std::string::npos) echo = echo.substr(0, h);
            while (!echo.empty() && std::isspace((unsigned char)echo.back())) echo.pop_back();
            c.echo = echo;
            ast.cmds.push_back(c);
        }
    }
    return ast;
}

namespace {

std::string render_decl(const Decl& d) {
    using K = Decl::Kind;
    std::ostringstream o;
    switch (d.kind) {
    case K::field_fp: o << "field " << d.name << " = Fp(" << d.num << ")"; break;
    case K::field_q: o << "field " << d.name << " = QQ()"; break;
    case K::ring_poly: {
        o << "ring " << d.name << " = poly(" << d.args[0];
        if (!d.texts.empty()) {
            o << "; ";
            for (size_t i = 0; i < d.texts.size(); ++i) o << (i ? ", " : "") << d.texts[i];
        }
        o << ")";
        if (!d.order.empty()) o << " " << d.order;
        break;
    }
    case K::ring_quotient: {
        o << "ring " << d.name << " = quotient(" << d.args[0] << "; ";
        for (size_t i = 0; i < d.texts.size(); ++i) o << (i ? ", " : "") << d.texts[i];
        o << ")";
        break;
    }
    case K::dgring_ring: o << "dgring " << d.name << " = ring(" << d.args[0] << ")"; break;
    case K::dgring_koszul: {
        o << "dgring " << d.name << " = koszul(" << d.args[0] << "; ";
        for (size_t i = 0; i < d.texts.size(); ++i) o << (i ? ", " : "") << d.texts[i];
        o << ")";
        break;
    }
    case K::dgring_extend: {
        o << "dgring " << d.name << " = extend(" << d.args[0] << "; ";
        for (size_t i = 0; i < d.gens.size(); ++i) {
            o << (i ? ", " : "") << d.gens[i].first << ":" << d.gens[i].second << " -> "
              << d.assigns[i].second;
        }
        o << ")";
        break;
    }
    case K::dgring_tensor:
        o << "dgring " << d.name << " = tensor(" << d.args[0] << ", " << d.args[1] << ")";
        break;
    case K::map: {
        o << "map " << d.name << " : " << d.args[0] << " -> " << d.args[1] << " { ";
        for (size_t i = 0; i < d.assigns.size(); ++i)
            o << (i ? ", " : "") << d.assigns[i].first << " -> " << d.assigns[i].second;
        o << " }";
        break;
    }
    case K::module_semifree: {
        o << "module " << d.name << " = semifree(" << d.args[0] << "; gens = [";
        for (size_t i = 0; i < d.gens.size(); ++i)
            o << (i ? ", " : "") << "(" << d.gens[i].first << ", " << d.gens[i].second << ")";
        o << "]";
        if (!d.assigns.empty()) {
            o << ", d = { ";
            for (size_t i = 0; i < d.assigns.size(); ++i)
                o << (i ? ", " : "") << d.assigns[i].first << " -> " << d.assigns[i].second;
            o << " }";
        }
        o << ")";
        break;
    }
    case K::module_h0: {
        o << "module " << d.name << " = h0(" << d.args[0];
        if (!d.texts.empty()) {
            o << "; ";
            for (size_t i = 0; i < d.texts.size(); ++i) o << (i ? ", " : "") << d.texts[i];
        }
        o << ")";
        break;
    }
    case K::module_rigid: o << "module " << d.name << " = rigid(" << d.args[0] << ")"; break;
    case K::module_shift:
        o << "module " << d.name << " = shift(" << d.args[0] << ", " << d.num << ")";
        break;
    case K::module_omega: o << "module " << d.name << " = omega(" << d.args[0] << ")"; break;
    }
    return o.str();
}

std::string render_command(const Command& c) {
    using K = Command::Kind;
    std::ostringstream o;
    switch (c.kind) {
    case K::gb: {
        o << "gb " << c.args[0] << "; ";
        for (size_t i = 0; i < c.texts.size(); ++i) o << (i ? ", " : "") << c.texts[i];
        break;
    }
    case K::resolve: o << "resolve " << c.args[0]; break;
    case K::cohomology: o << "cohomology " << c.args[0] << " " << c.degree; break;
    case K::rhom: o << "rhom " << c.args[0] << " " << c.args[1]; break;
    case K::tensor: o << "tensor " << c.args[0] << " " << c.args[1]; break;
    case K::hochschild:
        o << "hochschild " << c.args[0] << " " << c.args[1] << " " << c.args[2];
        break;
    case K::rigid: o << "rigid " << c.args[0]; break;
    case K::omega: o << "omega " << c.args[0]; break;
    case K::shriek: o << "shriek " << c.args[0] << " " << c.args[1]; break;
    case K::verify: {
        o << "verify";
        for (const auto& a : c.args) o << " " << a;
        break;
    }
    }
    if (c.floor) o << " --floor " << *c.floor;
    if (c.window) o << " --window " << c.window->first << ".." << c.window->second;
    if (c.expect_fail) o << " --expect fail";
    return o.str();
}

} // namespace

std::string render_session(const SessionAST& ast) {
    std::ostringstream o;
    // declarations keep their original order relative to each other; the
    // line-oriented format has no interleaving constraints beyond
    // declaration-before-use, which the original order satisfies
    for (const auto& d : ast.decls) o << render_decl(d) << "\n";
    for (const auto& c : ast.cmds) o << render_command(c) << "\n";
    return o.str();
}

} // namespace dgd
