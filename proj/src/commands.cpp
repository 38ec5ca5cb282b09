#include "vjw/commands.hpp"

#include <fstream>
#include <sstream>

#include "vjw/error.hpp"
#include "vjw/qfield.hpp"

namespace vjw {

namespace {

std::vector<std::string> factor_names(const std::vector<ModuleDesc>& factors,
                                      const std::vector<std::string>& names) {
    std::vector<std::string> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(f.to_string(names));
    return out;
}

std::vector<DegreeBlock> to_degree_blocks(const std::vector<ModuleDesc>& factors,
                                          const std::map<int, BlockMatrix>& blocks) {
    std::vector<DegreeBlock> out;
    out.reserve(blocks.size());
    for (const auto& [k, m] : blocks)
        out.push_back({k, graded_basis(factors, k).vectors, m});
    return out;
}

void require_weights(const JobConfig& config, size_t n, const std::string& what) {
    if (config.weight_names.size() < n)
        throw ConfigError(what + " requires at least " + std::to_string(n) + " weights");
}

RationalFn q_power_rf(long e) {
    return RationalFn::from_poly(
        LaurentPoly::monomial(LaurentMono::q_power(static_cast<int32_t>(e))));
}

void run_pascal(Report& report) {
    for (int k = 1; k <= 30; ++k) {
        for (int j = 1; j <= k; ++j) {
            RationalFn lhs = q_binomial(k + 1, j);
            RationalFn rhs = q_power_rf(-k + j - 1) * q_binomial(k, j - 1) +
                             q_power_rf(j) * q_binomial(k, j);
            if (!(lhs == rhs))
                report.push_back(
                    {"pascal", k, j, -1, "two-term recurrence fails at (k, j)"});
        }
    }
}

void run_relations(const JobConfig& config, Report& report) {
    std::vector<std::pair<std::string, std::vector<ModuleDesc>>> families;
    families.push_back({"V(1)", {ModuleDesc::finite_irrep(1)}});
    auto ws = config.symbolic_weights();
    if (!ws.empty()) families.push_back({"M(" + config.weight_names[0] + ")",
                                         {ModuleDesc::verma(ws[0])}});
    if (ws.size() >= 2)
        families.push_back(
            {"M(" + config.weight_names[0] + ")(x)M(" + config.weight_names[1] + ")",
             {ModuleDesc::verma(ws[0]), ModuleDesc::verma(ws[1])}});
    for (const auto& [label, factors] : families) {
        for (Violation v : check_quantum_relations(factors, config.max_degree)) {
            v.detail = label;
            report.push_back(std::move(v));
        }
    }
}

void run_coassoc(const JobConfig& config, Report& report) {
    require_weights(config, 3, "coassoc check");
    auto ws = config.symbolic_weights();
    std::vector<ModuleDesc> factors{ModuleDesc::verma(ws[0]), ModuleDesc::verma(ws[1]),
                                    ModuleDesc::verma(ws[2])};
    for (Violation v : check_coassociativity(factors, config.max_degree))
        report.push_back(std::move(v));
}

void run_ef_identity(const JobConfig& config, Report& report) {
    require_weights(config, 2, "ef_identity check");
    auto ws = config.symbolic_weights();
    for (int k = 0; k <= config.max_degree; ++k) {
        BlockMatrix prod = e_block(ws[0], ws[1], k) * f_block(ws[0], ws[1], k);
        for (const auto& [r, c] : matrix_differences(prod, BlockMatrix::identity(1)))
            report.push_back({"ef_identity", k, r, c, "E∘F is not the identity"});
    }
}

void run_intertwiner(const JobConfig& config, Report& report) {
    require_weights(config, 2, "intertwiner check");
    auto ws = config.symbolic_weights();
    const int D = config.max_degree;
    std::vector<std::pair<std::string, IntertwinerBlocks>> maps;
    maps.push_back({"E[" + config.weight_names[0] + "," + config.weight_names[1] + "]",
                    e_family(ws[0], ws[1], D)});
    maps.push_back({"F[" + config.weight_names[0] + "," + config.weight_names[1] + "]",
                    f_family(ws[0], ws[1], D)});
    if (ws.size() >= 3) {
        std::vector<ModuleDesc> trailing;
        for (size_t i = 2; i < ws.size(); ++i) trailing.push_back(ModuleDesc::verma(ws[i]));
        maps.push_back({"E[...;trailing]", splice_family(maps[0].second, trailing, D)});
        maps.push_back({"F[...;trailing]", splice_family(maps[1].second, trailing, D)});
    }
    for (const auto& [label, phi] : maps) {
        for (Violation v : check_intertwiner(phi, D)) {
            v.detail = label;
            report.push_back(std::move(v));
        }
    }
}

void run_oracle(const JobConfig& config, Report& report) {
    require_weights(config, 2, "oracle check");
    auto ws = config.symbolic_weights();
    const int D = config.max_degree;
    IntertwinerBlocks closed = f_family(ws[0], ws[1], D);
    IntertwinerBlocks recursive = f_oracle(ws[0], ws[1], D);
    for (int k = 0; k <= D; ++k) {
        for (const auto& [r, c] : matrix_differences(closed.blocks.at(k),
                                                     recursive.blocks.at(k)))
            report.push_back({"oracle", k, r, c,
                              "closed form disagrees with the recursive construction"});
    }
}

void run_idempotent(const JobConfig& config, Report& report) {
    require_weights(config, 2, "idempotent check");
    ProjectorBlocks p =
        extended_jw(config.symbolic_weights(), config.max_degree, config.weight_names);
    for (Violation v : verify_idempotent(p)) report.push_back(std::move(v));
    for (Violation v : check_trace_one(p)) report.push_back(std::move(v));
}

}  // namespace

ResultDocument cmd_compute(const JobConfig& config) {
    config.validate();
    require_weights(config, 2, "compute");
    ResultDocument doc;
    doc.config = config;
    if (!config.specialization.empty() &&
        config.specialization.size() != config.weight_names.size())
        throw ConfigError("specialization must assign every weight");

    ProjectorBlocks p =
        extended_jw(config.symbolic_weights(), config.max_degree, config.weight_names);
    doc.factors = factor_names(p.factors, config.weight_names);
    doc.blocks = to_degree_blocks(p.factors, p.blocks);
    if (!config.specialization.empty()) {
        auto asg = config.assignment();
        for (auto& b : doc.blocks) b.matrix = b.matrix.specialized(asg);
    }
    doc.provenance = p.provenance;
    return doc;
}

ResultDocument cmd_verify(const JobConfig& config) {
    config.validate();
    if (!config.specialization.empty())
        throw ConfigError("verify runs symbolically; --at is not supported here");
    std::set<std::string> selected = config.checks;
    if (selected.empty()) {
        // Everything that the weight count supports.
        selected.insert("pascal");
        if (!config.weight_names.empty()) selected.insert("relations");
        if (config.weight_names.size() >= 2)
            selected.insert({"idempotent", "intertwiner", "ef_identity", "oracle"});
        if (config.weight_names.size() >= 3) selected.insert("coassoc");
    }
    ResultDocument doc;
    doc.config = config;
    doc.config.checks = selected;
    doc.checks_run = selected;
    for (const auto& check : selected) {
        if (check == "pascal") run_pascal(doc.violations);
        else if (check == "relations") run_relations(config, doc.violations);
        else if (check == "coassoc") run_coassoc(config, doc.violations);
        else if (check == "ef_identity") run_ef_identity(config, doc.violations);
        else if (check == "intertwiner") run_intertwiner(config, doc.violations);
        else if (check == "oracle") run_oracle(config, doc.violations);
        else if (check == "idempotent") run_idempotent(config, doc.violations);
    }
    return doc;
}

ResultDocument cmd_tl(const JobConfig& config, int max_n) {
    config.validate();
    if (config.tl_n > max_n)
        throw ConfigError("tl size " + std::to_string(config.tl_n) +
                          " exceeds the resource guard (" + std::to_string(max_n) +
                          "); raise --max-n explicitly if intended");
    ProjectorBlocks p = jw(config.tl_n);
    ResultDocument doc;
    doc.config = config;
    doc.config.max_degree = p.cutoff;
    doc.factors = factor_names(p.factors, {});
    doc.blocks = to_degree_blocks(p.factors, p.blocks);
    doc.checks_run = {"idempotent"};
    doc.violations = verify_idempotent(p);
    doc.provenance = p.provenance;
    return doc;
}

ResultDocument cmd_specialize(const JobConfig& config) {
    // The weight names live in the input document, so full validation waits
    // until the configs are merged below.
    if (!config.input_path)
        throw ConfigError("specialize requires --in with a previously computed document");
    std::ifstream in(*config.input_path);
    if (!in) throw IoError("cannot open " + *config.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + *config.input_path);

    ResultDocument doc = ResultDocument::parse(buf.str());
    JobConfig merged = doc.config;
    merged.command = "specialize";
    merged.specialization = config.specialization;
    merged.output_path = config.output_path;
    merged.validate();
    if (merged.specialization.size() != merged.weight_names.size())
        throw ConfigError("specialization must assign every weight of the document");

    auto asg = merged.assignment();
    for (auto& b : doc.blocks) b.matrix = b.matrix.specialized(asg);
    doc.config = merged;
    return doc;
}

int exit_code_for(const ResultDocument& doc) {
    return doc.all_checks_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace vjw
