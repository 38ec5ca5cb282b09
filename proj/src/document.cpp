#include "vjw/document.hpp"

#include <nlohmann/json.hpp>

#include "vjw/error.hpp"

namespace vjw {

using json = nlohmann::ordered_json;

const std::set<std::string>& known_checks() {
    static const std::set<std::string> checks{"idempotent", "intertwiner", "ef_identity",
                                              "oracle",     "pascal",      "relations",
                                              "coassoc"};
    return checks;
}

void JobConfig::validate() const {
    if (max_degree < 0) throw ConfigError("max degree must be non-negative");
    if (weight_names.size() > static_cast<size_t>(kMaxSymbols))
        throw ConfigError("at most " + std::to_string(kMaxSymbols) + " weights supported");
    std::set<std::string> seen;
    for (const auto& name : weight_names) {
        if (name.empty()) throw ConfigError("empty weight name");
        if (!seen.insert(name).second) throw ConfigError("duplicate weight name: " + name);
    }
    for (const auto& c : checks)
        if (!known_checks().count(c)) throw ConfigError("unknown check: " + c);
    for (const auto& [name, value] : specialization) {
        (void)value;
        if (!seen.count(name))
            throw ConfigError("specialization names unknown weight: " + name);
    }
    if (command == "tl" && tl_n < 1) throw ConfigError("tl requires n >= 1");
}

std::vector<WeightExpr> JobConfig::symbolic_weights() const {
    std::vector<WeightExpr> ws;
    ws.reserve(weight_names.size());
    for (size_t i = 0; i < weight_names.size(); ++i)
        ws.push_back(WeightExpr::symbol(static_cast<int>(i)));
    return ws;
}

std::map<int, long> JobConfig::assignment() const {
    std::map<int, long> out;
    for (size_t i = 0; i < weight_names.size(); ++i) {
        auto it = specialization.find(weight_names[i]);
        if (it != specialization.end()) out.emplace(static_cast<int>(i), it->second);
    }
    return out;
}

namespace {

json poly_to_json(const LaurentPoly& p, int n_symbols) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json term;
        term["coeff"] = t.coeff.get_str();
        term["q"] = t.mono.q_exp;
        json ts = json::array();
        for (int j = 0; j < n_symbols; ++j) ts.push_back(t.mono.t_exps[j]);
        term["t"] = std::move(ts);
        terms.push_back(std::move(term));
    }
    return terms;
}

LaurentPoly poly_from_json(const json& j) {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(j.size());
    for (const auto& term : j) {
        LaurentMono m;
        m.q_exp = term.at("q").get<int32_t>();
        const auto& ts = term.at("t");
        if (ts.size() > static_cast<size_t>(kMaxSymbols))
            throw IoError("too many symbol exponents in polynomial term");
        for (size_t i = 0; i < ts.size(); ++i) m.t_exps[i] = ts[i].get<int32_t>();
        Rat coeff;
        try {
            coeff = Rat(term.at("coeff").get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw IoError("malformed coefficient in polynomial term");
        }
        coeff.canonicalize();
        terms.push_back({m, std::move(coeff)});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

json value_to_json(const RationalFn& v, int n_symbols) {
    json out;
    out["num"] = poly_to_json(v.numerator(), n_symbols);
    out["den"] = poly_to_json(v.denominator(), n_symbols);
    return out;
}

RationalFn value_from_json(const json& j) {
    LaurentPoly num = poly_from_json(j.at("num"));
    LaurentPoly den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw IoError("zero denominator in document");
    return RationalFn::from_ratio(num, den);
}

std::string ResultDocument::serialize() const {
    const int n_symbols = static_cast<int>(config.weight_names.size());
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = config.command;
    json cfg;
    cfg["weights"] = config.weight_names;
    cfg["max_degree"] = config.max_degree;
    if (!config.checks.empty()) cfg["checks"] = config.checks;
    if (!config.specialization.empty()) cfg["specialization"] = config.specialization;
    if (config.command == "tl") cfg["n"] = config.tl_n;
    doc["config"] = std::move(cfg);
    doc["factors"] = factors;
    json jblocks = json::array();
    for (const auto& b : blocks) {
        json jb;
        jb["degree"] = b.degree;
        json jbasis = json::array();
        for (const auto& t : b.basis) jbasis.push_back(t);
        jb["basis"] = std::move(jbasis);
        json jentries = json::array();
        for (const auto& [rc, v] : b.matrix.entries()) {
            json je;
            je["row"] = rc.first;
            je["col"] = rc.second;
            je["value"] = value_to_json(v, n_symbols);
            jentries.push_back(std::move(je));
        }
        jb["entries"] = std::move(jentries);
        jblocks.push_back(std::move(jb));
    }
    doc["blocks"] = std::move(jblocks);
    doc["checks_run"] = checks_run;
    json jviol = json::array();
    for (const auto& v : violations) {
        json jv;
        jv["check"] = v.check;
        jv["degree"] = v.degree;
        jv["row"] = v.row;
        jv["col"] = v.col;
        jv["detail"] = v.detail;
        jviol.push_back(std::move(jv));
    }
    doc["violations"] = std::move(jviol);
    doc["provenance"] = provenance;
    return doc.dump(2) + "\n";
}

ResultDocument ResultDocument::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("cannot parse document: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != kFormatVersion)
            throw IoError("unsupported document format version");
        ResultDocument out;
        out.config.command = doc.at("command").get<std::string>();
        const json& cfg = doc.at("config");
        out.config.weight_names = cfg.at("weights").get<std::vector<std::string>>();
        out.config.max_degree = cfg.at("max_degree").get<int>();
        if (cfg.contains("checks"))
            out.config.checks = cfg.at("checks").get<std::set<std::string>>();
        if (cfg.contains("specialization"))
            out.config.specialization =
                cfg.at("specialization").get<std::map<std::string, long>>();
        if (cfg.contains("n")) out.config.tl_n = cfg.at("n").get<int>();
        out.factors = doc.at("factors").get<std::vector<std::string>>();
        for (const auto& jb : doc.at("blocks")) {
            DegreeBlock b;
            b.degree = jb.at("degree").get<int>();
            for (const auto& jt : jb.at("basis")) b.basis.push_back(jt.get<IndexTuple>());
            long dim = static_cast<long>(b.basis.size());
            b.matrix = BlockMatrix(dim, dim);
            for (const auto& je : jb.at("entries"))
                b.matrix.set(je.at("row").get<long>(), je.at("col").get<long>(),
                             value_from_json(je.at("value")));
            out.blocks.push_back(std::move(b));
        }
        out.checks_run = doc.at("checks_run").get<std::set<std::string>>();
        for (const auto& jv : doc.at("violations"))
            out.violations.push_back({jv.at("check").get<std::string>(),
                                      jv.at("degree").get<int>(), jv.at("row").get<long>(),
                                      jv.at("col").get<long>(),
                                      jv.at("detail").get<std::string>()});
        out.provenance = doc.at("provenance").get<std::vector<std::string>>();
        return out;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed document: ") + e.what());
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace vjw
