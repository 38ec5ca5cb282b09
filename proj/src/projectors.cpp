#include "vjw/projectors.hpp"

#include "vjw/error.hpp"
#include "vjw/qfield.hpp"

namespace vjw {

ProjectorBlocks jw(int n) {
    if (n < 1) throw ConfigError("jw requires n >= 1");
    std::vector<ModuleDesc> factors{ModuleDesc::finite_irrep(1)};
    ProjectorBlocks p{factors, {}, 1, {"P[1] = Id"}};
    p.blocks.emplace(0, BlockMatrix::identity(1));
    p.blocks.emplace(1, BlockMatrix::identity(1));
    for (int m = 2; m <= n; ++m) {
        factors.push_back(ModuleDesc::finite_irrep(1));
        // Previous projector as an IntertwinerBlocks so it can be extended
        // by ⊗Id through the same splicing path as everything else.
        IntertwinerBlocks prev{p.factors, p.factors, std::move(p.blocks), p.cutoff};
        std::vector<ModuleDesc> one{ModuleDesc::finite_irrep(1)};
        IntertwinerBlocks e = tl_e(m, m - 1);
        RationalFn scalar = RationalFn::from_ratio(poly_q_int(m - 1), poly_q_int(m));
        ProjectorBlocks next{factors, {}, m, {}};
        for (int k = 0; k <= m; ++k) {
            BlockMatrix ext = splice(prev, one, k);
            BlockMatrix mixed = (ext * e.blocks.at(k) * ext).scaled(scalar);
            next.blocks.emplace(k, ext + mixed);
        }
        next.provenance = std::move(p.provenance);
        next.provenance.push_back("P[" + std::to_string(m) + "] = P[" + std::to_string(m - 1) +
                                  "]⊗Id + ([" + std::to_string(m - 1) + "]/[" +
                                  std::to_string(m) + "]) (P⊗Id) e_" + std::to_string(m - 1) +
                                  " (P⊗Id)");
        p = std::move(next);
    }
    return p;
}

ProjectorBlocks extended_jw(const std::vector<WeightExpr>& weights, int D,
                            const std::vector<std::string>& names) {
    if (weights.size() < 2) throw ConfigError("extended_jw requires at least two weights");
    if (D < 0) throw ConfigError("extended_jw requires a non-negative cutoff");
    const WeightExpr& mu = weights[0];
    const WeightExpr& lambda = weights[1];
    auto render = [&names](const std::vector<WeightExpr>& ws) {
        std::string s;
        for (size_t i = 0; i < ws.size(); ++i) {
            if (i) s += ", ";
            s += ws[i].to_string(names);
        }
        return s;
    };

    std::vector<ModuleDesc> factors;
    factors.reserve(weights.size());
    for (const auto& w : weights) factors.push_back(ModuleDesc::verma(w));

    ProjectorBlocks p{factors, {}, D, {}};
    if (weights.size() == 2) {
        for (int k = 0; k <= D; ++k)
            p.blocks.emplace(k, f_block(mu, lambda, k) * e_block(mu, lambda, k));
        p.provenance.push_back("P[" + render(weights) + "] = F[" + render(weights) + "] E[" +
                               render(weights) + "]");
        return p;
    }

    std::vector<WeightExpr> fused{mu + lambda};
    fused.insert(fused.end(), weights.begin() + 2, weights.end());
    ProjectorBlocks inner = extended_jw(fused, D, names);

    std::vector<ModuleDesc> trailing(factors.begin() + 2, factors.end());
    IntertwinerBlocks e = e_family(mu, lambda, D);
    IntertwinerBlocks f = f_family(mu, lambda, D);
    for (int k = 0; k <= D; ++k) {
        BlockMatrix fuse = splice(e, trailing, k);
        BlockMatrix unfuse = splice(f, trailing, k);
        p.blocks.emplace(k, unfuse * inner.blocks.at(k) * fuse);
    }
    p.provenance.push_back("P[" + render(weights) + "] = F[" + mu.to_string(names) + ", " +
                           lambda.to_string(names) + "; ...] P[" + render(fused) + "] E[" +
                           mu.to_string(names) + ", " + lambda.to_string(names) + "; ...]");
    p.provenance.insert(p.provenance.end(), inner.provenance.begin(), inner.provenance.end());
    return p;
}

Report verify_idempotent(const ProjectorBlocks& p) {
    Report report;
    for (const auto& [k, block] : p.blocks) {
        BlockMatrix square = block * block;
        auto diffs = matrix_differences(square, block);
        if (!diffs.empty()) {
            auto [r, c] = diffs.front();
            report.push_back({"idempotent", k, r, c,
                              "P^2 differs from P at this entry (and " +
                                  std::to_string(diffs.size() - 1) + " more)"});
        }
    }
    return report;
}

Report check_trace_one(const ProjectorBlocks& p) {
    Report report;
    for (const auto& [k, block] : p.blocks) {
        RationalFn tr = block.trace();
        if (!(tr == RationalFn::one()))
            report.push_back({"trace", k, -1, -1, "trace = " + tr.to_string()});
    }
    return report;
}

IntertwinerBlocks f_oracle(const WeightExpr& mu, const WeightExpr& lambda, int D) {
    std::vector<ModuleDesc> pair{ModuleDesc::verma(mu), ModuleDesc::verma(lambda)};
    IntertwinerBlocks out{{ModuleDesc::verma(mu + lambda)}, pair, {}, D};
    BlockMatrix column(1, 1);
    column.set(0, 0, RationalFn::one());
    out.blocks.emplace(0, column);
    for (int k = 0; k < D; ++k) {
        LaurentPoly b = bracket(mu + lambda - k);
        if (b.is_zero())
            throw PoleError("oracle divisor [" + (mu + lambda - k).to_string() +
                                "] is identically zero",
                            (mu + lambda - k).to_string());
        RationalFn inv = RationalFn::from_factored(bracket(WeightExpr(1)), {std::move(b)});
        column = (tensor_action(Gen::F, pair, k) * column).scaled(inv);
        out.blocks.emplace(k + 1, column);
    }
    return out;
}

}  // namespace vjw
