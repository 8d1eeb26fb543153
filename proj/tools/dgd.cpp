#include "dgd/schema.hpp"
#include "dgd/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace dgd;

namespace {

bool parse_window(const std::string& text, int& lo, int& hi) {
    auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, pos));
        hi = std::stoi(text.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

int run_file(const std::string& path, SessionOptions opt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    SessionAST ast;
    try {
        ast = parse_session(text);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    SessionResult res;
    try {
        res = run_session(ast, opt);
    } catch (const Error& e) {
        // declaration-evaluation errors count as parse-level failures
        std::cerr << "session error: " << e.what() << "\n";
        return 2;
    }
    json envelope = report_envelope(res);
    if (opt.format == "json")
        std::cout << envelope.dump(2) << "\n";
    else
        std::cout << render_reports_text(envelope);
    return res.any_error ? 1 : 0;
}

int run_verify(const std::string& family, const std::string& instance,
               const std::string& corpus, SessionOptions opt) {
    CorpusOutcome out;
    try {
        out = run_corpus(corpus, instance, family == "all" ? "" : family, opt);
    } catch (const std::exception& e) {
        std::cerr << "verify error: " << e.what() << "\n";
        return 2;
    }
    if (opt.format == "json") {
        std::cout << out.summary.dump(2) << "\n";
    } else {
        for (const auto& inst : out.summary["instances"]) {
            std::cout << (inst["pass"].get<bool>() ? "pass  " : "FAIL  ")
                      << inst["instance"].get<std::string>();
            if (inst.contains("mismatch"))
                std::cout << "  (" << inst["mismatch"].get<std::string>() << ")";
            if (inst.contains("error"))
                std::cout << "  (" << inst["error"].get<std::string>() << ")";
            std::cout << "\n";
        }
        std::cout << (out.all_pass ? "all instances pass" : "some instances FAILED") << "\n";
    }
    return out.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dgd: duality computations over commutative DG rings"};
    app.require_subcommand(1);

    std::string window = "-6..6";
    std::string format = "text";
    int floor_cap = 40;
    int deepen = 0;
    app.add_option("--window", window, "certified window a..b (default -6..6)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--floor-cap", floor_cap, "maximum resolution span");
    app.add_option("--deepen", deepen, "deepen every resolution floor (stability checks)");

    auto* run = app.add_subcommand("run", "run a session file");
    std::string run_path;
    run->add_option("file", run_path, "session file")->required();

    auto* verify = app.add_subcommand("verify", "run corpus verifications");
    std::string family = "all", instance, corpus = "corpus";
    verify->add_option("family", family, "verify family or 'all'");
    verify->add_option("--instance", instance, "run a single instance");
    verify->add_option("--corpus", corpus, "corpus directory (default ./corpus)");

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    std::string gb_vars = "x,y", gb_order = "grevlex";
    long long gb_p = 32003;
    std::vector<std::string> gb_polys;
    gb->add_option("--vars", gb_vars, "comma separated variables");
    gb->add_option("--order", gb_order, "lex, grlex or grevlex");
    gb->add_option("--char", gb_p, "field characteristic (0 for QQ)");
    gb->add_option("polys", gb_polys, "ideal generators")->required();

    auto* schema = app.add_subcommand("schema", "validate a JSON report against the schema");
    std::string schema_path, report_path;
    schema->add_option("--schema", schema_path, "schema file")->required();
    schema->add_option("report", report_path, "report file")->required();

    CLI11_PARSE(app, argc, argv);

    SessionOptions opt;
    opt.format = format;
    opt.floor_cap = floor_cap;
    opt.extra_floor = deepen;
    if (!parse_window(window, opt.win_lo, opt.win_hi)) {
        std::cerr << "bad window '" << window << "'\n";
        return 2;
    }

    if (run->parsed()) return run_file(run_path, opt);
    if (verify->parsed()) return run_verify(family, instance, corpus, opt);
    if (gb->parsed()) {
        try {
            FieldRef f = gb_p == 0 ? Field::Q() : Field::Fp((uint64_t)gb_p);
            std::vector<std::string> vars;
            std::string cur;
            for (char c : gb_vars + ",") {
                if (c == ',') {
                    if (!cur.empty()) vars.push_back(cur);
                    cur.clear();
                } else if (!std::isspace((unsigned char)c)) {
                    cur.push_back(c);
                }
            }
            MonomialOrder ord;
            if (gb_order == "lex")
                ord.kind = MonomialOrder::Kind::lex;
            else if (gb_order == "grlex")
                ord.kind = MonomialOrder::Kind::grlex;
            RingRef R = Ring::poly_ring(f, vars, ord);
            std::vector<Poly> gens;
            for (const auto& t : gb_polys) gens.push_back(parse_poly(R, t));
            for (const auto& g : buchberger(gens, R)) std::cout << g.to_string() << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "gb error: " << e.what() << "\n";
            return 1;
        }
    }
    if (schema->parsed()) {
        try {
            std::ifstream sin(schema_path), rin(report_path);
            require(bool(sin) && bool(rin), errc::invalid_argument, "cannot open input files");
            json s = json::parse(sin), r = json::parse(rin);
            std::string err;
            if (!validate_json(r, s, &err)) {
                std::cerr << "invalid: " << err << "\n";
                return 1;
            }
            std::cout << "valid\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "schema error: " << e.what() << "\n";
            return 1;
        }
    }
    return 2;
}
