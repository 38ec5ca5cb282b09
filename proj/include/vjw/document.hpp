#pragma once

#include <optional>
#include <set>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vjw/projectors.hpp"
#include "vjw/report.hpp"

namespace vjw {

// Names of the selectable verification suites.
const std::set<std::string>& known_checks();

// One job as described on the command line.  weight_names order fixes the
// symbol indices t_1..t_n.
struct JobConfig {
    std::string command;  // "compute", "verify", "tl", "specialize"
    std::vector<std::string> weight_names;
    int max_degree = 0;
    std::set<std::string> checks;
    std::map<std::string, long> specialization;
    int tl_n = 0;                             // tl only
    std::optional<std::string> input_path;    // specialize only; not echoed
    std::optional<std::string> output_path;   // transport detail; not echoed

    // Throws ConfigError on duplicate names, unknown checks, specialization
    // of unknown names, negative degree, or too many symbols.
    void validate() const;

    std::vector<WeightExpr> symbolic_weights() const;
    // specialization translated to symbol indices.
    std::map<int, long> assignment() const;
};

// One serialized degree block: the canonical basis it is written in plus the
// sparse matrix.
struct DegreeBlock {
    int degree = 0;
    std::vector<IndexTuple> basis;
    BlockMatrix matrix;
};

// Everything a command emits: stable, diffable, byte-deterministic JSON.
struct ResultDocument {
    static constexpr int kFormatVersion = 1;

    JobConfig config;
    std::vector<std::string> factors;  // e.g. "M(mu1)", "V(1)"
    std::vector<DegreeBlock> blocks;   // ascending degree
    std::set<std::string> checks_run;
    Report violations;
    std::vector<std::string> provenance;

    bool all_checks_passed() const { return violations.empty(); }

    // Canonical serialization; each term carries one t-exponent per declared
    // weight name.
    std::string serialize() const;
    static ResultDocument parse(const std::string& text);
};

nlohmann::ordered_json value_to_json(const RationalFn& v, int n_symbols);
RationalFn value_from_json(const nlohmann::ordered_json& j);

}  // namespace vjw
