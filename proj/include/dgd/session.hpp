#ifndef DGD_SESSION_HPP
#define DGD_SESSION_HPP

#include "dgd/dsl.hpp"
#include "dgd/theorem_lab.hpp"

#include <json.hpp>

namespace dgd {

using json = nlohmann::json;

struct SessionOptions {
    int win_lo = -6, win_hi = 6; // default window for verify/derived commands
    int floor_cap = 40;
    int extra_floor = 0;
    std::string format = "text";
};

struct SessionResult {
    json reports = json::array();
    bool any_error = false;
};

// Evaluates declarations, then runs commands in order; failures in one
// command do not abort subsequent independent commands.
SessionResult run_session(const SessionAST& ast, const SessionOptions& opt);

json fingerprint_json(const CohFingerprint& fp);
json report_envelope(const SessionResult& r);
std::string render_reports_text(const json& envelope);

// Corpus runner: executes every instance under dir/instances and compares
// the verify reports against dir/expected/<name>.json.
struct CorpusOutcome {
    json summary;
    bool all_pass = false;
};
CorpusOutcome run_corpus(const std::string& dir, const std::string& only_instance,
                         const std::string& only_family, const SessionOptions& opt);

} // namespace dgd

#endif
