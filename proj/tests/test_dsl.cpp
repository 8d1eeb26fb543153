#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgd/schema.hpp"
#include "dgd/session.hpp"

#include <fstream>

using namespace dgd;

TEST_CASE("parse three declarations") {
    SessionAST ast = parse_session("field F = Fp(5)\n"
                                   "ring A0 = poly(F; x)\n"
                                   "dgring A = koszul(A0; x)\n");
    CHECK(ast.decls.size() == 3);
    CHECK(ast.cmds.empty());
    CHECK(ast.decls[2].kind == Decl::Kind::dgring_koszul);
}

TEST_CASE("undeclared names raise NameError with position") {
    try {
        parse_session("ring A0 = poly(F; x)\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("NameError") != std::string::npos);
        CHECK(e.span().line == 1);
    }
}

TEST_CASE("redeclaration raises NameError") {
    CHECK_THROWS_AS(parse_session("field F = Fp(5)\nfield F = QQ()\n"), ParseError);
}

TEST_CASE("kind mismatches are TypeErrorDSL at parse time") {
    try {
        parse_session("field F = Fp(5)\nring A0 = poly(F; x)\ndgring A = koszul(F; x)\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("TypeErrorDSL") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry line, column and expected set") {
    try {
        parse_session("field F = Fp 5\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.span().line == 1);
        CHECK(e.expected() == "'('");
    }
}

TEST_CASE("bad module differential is TypeErrorDSL at evaluation") {
    SessionAST ast = parse_session("field F = Fp(32003)\n"
                                   "ring A0 = poly(F; x)\n"
                                   "dgring A = ring(A0)\n"
                                   "module M = semifree(A; gens = [(m, 0)], d = { m -> m })\n");
    SessionOptions opt;
    try {
        run_session(ast, opt);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("TypeErrorDSL") != std::string::npos);
    }
}

TEST_CASE("render parses back to an identical AST") {
    std::string text = "field F = Fp(32003)\n"
                       "ring A0 = poly(F; x, y) lex\n"
                       "ring B0 = quotient(A0; x^2 - y)\n"
                       "dgring A = koszul(A0; x*y - 1)\n"
                       "dgring C = extend(A; c:-1 -> x)\n"
                       "map f : A -> A { x -> x, y -> y, e1 -> e1 }\n"
                       "module M = semifree(A; gens = [(m0, 0), (m1, -1)], d = { m1 -> x*m0 })\n"
                       "module R = rigid(A)\n"
                       "rhom M R --window -3..3\n"
                       "verify unit A M --window -2..2\n";
    SessionAST a1 = parse_session(text);
    std::string rendered = render_session(a1);
    SessionAST a2 = parse_session(rendered);
    CHECK(render_session(a2) == rendered);
    CHECK(a1.decls.size() == a2.decls.size());
    CHECK(a1.cmds.size() == a2.cmds.size());
}

TEST_CASE("run a session computing cohomology of the koszul complex") {
    std::string text = "field F = Fp(32003)\n"
                       "ring A0 = poly(F; x)\n"
                       "dgring A = ring(A0)\n"
                       "module K = semifree(A; gens = [(u, 0), (v, -1)], d = { v -> x*u })\n"
                       "cohomology K 0\n"
                       "cohomology K -1\n";
    SessionResult r = run_session(parse_session(text), SessionOptions{});
    CHECK(!r.any_error);
    CHECK(r.reports.size() == 2);
    CHECK(r.reports[0]["result"]["entry"]["0"]["value"] == 1);
    CHECK(r.reports[1]["result"]["entry"].empty());
}

TEST_CASE("empty session gives an empty report list") {
    SessionResult r = run_session(parse_session("# nothing here\n"), SessionOptions{});
    CHECK(r.reports.empty());
    CHECK(!r.any_error);
}

TEST_CASE("command failures do not abort later commands") {
    std::string text = "field F = Fp(32003)\n"
                       "ring A0 = poly(F; x)\n"
                       "dgring A = ring(A0)\n"
                       "ring T0 = poly(F; t)\n"
                       "dgring T = ring(T0)\n"
                       "map f : A -> T { x -> 0 }\n"
                       "module M = h0(A; x)\n"
                       "verify finite f M\n"
                       "gb A0; x^2, x\n";
    SessionResult r = run_session(parse_session(text), SessionOptions{});
    CHECK(r.any_error);
    REQUIRE(r.reports.size() == 2);
    CHECK(r.reports[0]["status"] == "error");
    CHECK(r.reports[0]["error"]["kind"] == "NotCohFinite");
    CHECK(r.reports[1]["status"] == "ok");
    CHECK(r.reports[1]["result"]["basis"][0] == "x");
}

TEST_CASE("reports validate against the shipped schema") {
    std::string text = "field F = Fp(32003)\n"
                       "ring A0 = poly(F; x)\n"
                       "dgring A = ring(A0)\n"
                       "module R = rigid(A)\n"
                       "rigid A\n"
                       "verify rigidity A R --window -2..2\n"
                       "gb A0; x^2 - x\n";
    SessionResult r = run_session(parse_session(text), SessionOptions{});
    json envelope = report_envelope(r);
    std::ifstream in("docs/report.schema.json");
    if (!in) in = std::ifstream("../docs/report.schema.json");
    REQUIRE(bool(in));
    json schema = json::parse(in);
    std::string err;
    bool ok = validate_json(envelope, schema, &err);
    if (!ok) MESSAGE(err);
    CHECK(ok);
}

TEST_CASE("run a verify session end to end") {
    std::string text = "field F = Fp(32003)\n"
                       "ring A0 = poly(F; x)\n"
                       "ring B0 = quotient(A0; x^2)\n"
                       "dgring A = ring(A0)\n"
                       "dgring B = ring(B0)\n"
                       "map f : A -> B { x -> x }\n"
                       "module RA = rigid(A)\n"
                       "verify finite f RA --window -3..3\n";
    SessionResult r = run_session(parse_session(text), SessionOptions{});
    CHECK(!r.any_error);
    CHECK(r.reports[0]["result"]["verdict"] == "pass");
}
