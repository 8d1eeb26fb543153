#ifndef DGD_DSL_HPP
#define DGD_DSL_HPP

#include "dgd/dgring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgd {

// Session files are line oriented with # comments; declarations bind a
// name once, commands run in order. The grammar reference ships in
// docs/dsl.md.

struct SrcSpan {
    int line = 1;
    int col = 1;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, SrcSpan where, std::string expected)
        : Error(errc::invalid_argument,
                what + " at line " + std::to_string(where.line) + ", column " +
                    std::to_string(where.col) +
                    (expected.empty() ? "" : " (expected " + expected + ")")),
          span_(where), expected_(std::move(expected)) {}
    SrcSpan span() const { return span_; }
    const std::string& expected() const { return expected_; }

  private:
    SrcSpan span_;
    std::string expected_;
};

struct Decl {
    enum class Kind {
        field_fp,
        field_q,
        ring_poly,
        ring_quotient,
        dgring_ring,
        dgring_koszul,
        dgring_extend,
        dgring_tensor,
        map,
        module_semifree,
        module_h0,
        module_rigid,
        module_shift,
        module_omega,
    };
    Kind kind;
    SrcSpan span;
    std::string name;
    std::vector<std::string> args;    // referenced declaration names
    std::vector<std::string> texts;   // variable names or polynomial texts
    std::vector<std::pair<std::string, std::string>> assigns; // lhs -> rhs expressions
    std::vector<std::pair<std::string, int>> gens;            // (name, degree)
    long long num = 0;
    std::string order;
};

struct Command {
    enum class Kind { gb, resolve, cohomology, rhom, tensor, hochschild, rigid, omega, shriek,
                      verify };
    Kind kind;
    SrcSpan span;
    std::vector<std::string> args;
    std::vector<std::string> texts; // polynomial texts for gb
    int degree = 0;
    std::optional<int> floor;
    std::optional<std::pair<int, int>> window;
    bool expect_fail = false;
    std::string echo;
};

struct SessionAST {
    std::vector<Decl> decls;
    std::vector<Command> cmds;
};

// Parses and checks names (declared before use, single assignment) and
// declaration-kind signatures. Throws ParseError / Error(NameError-like).
SessionAST parse_session(const std::string& text);

// Renders an AST back to DSL text (normalized whitespace); reparsing the
// render yields an identical AST.
std::string render_session(const SessionAST& ast);

} // namespace dgd

#endif
