#include "vjw/actions.hpp"

#include "vjw/error.hpp"
#include "vjw/qfield.hpp"

namespace vjw {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::K: return "K";
        case Gen::KInv: return "K^-1";
        case Gen::E: return "E";
        case Gen::F: return "F";
    }
    throw Error("unknown generator");
}

int gen_degree_shift(Gen g) {
    switch (g) {
        case Gen::K:
        case Gen::KInv: return 0;
        case Gen::E: return -1;
        case Gen::F: return 1;
    }
    throw Error("unknown generator");
}

namespace {

RationalFn q_power(const WeightExpr& e) {
    return RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::from_weight(e)));
}

// K-eigenvalue exponent of v_{t[lo..hi)}: sum of w_j - 2 i_j over the range.
WeightExpr k_exponent(const std::vector<ModuleDesc>& factors, const IndexTuple& t, size_t lo,
                      size_t hi) {
    WeightExpr e;
    for (size_t j = lo; j < hi; ++j) e = e + factors[j].weight - 2L * t[j];
    return e;
}

// Action of E or F on a single factor: (new index, coefficient) or nothing
// when the coefficient [i] resp. [w - i] vanishes (module boundaries).
std::optional<std::pair<int, RationalFn>> single_factor(Gen g, const ModuleDesc& m, int i) {
    if (g == Gen::E) {
        if (i == 0) return std::nullopt;
        return std::pair{i - 1, RationalFn::from_poly(poly_q_int(i))};
    }
    RationalFn c = q_int(m.weight - i);  // F coefficient; zero kills v_{cap+1}
    if (c.is_zero()) return std::nullopt;
    return std::pair{i + 1, std::move(c)};
}

using TermList = std::vector<std::pair<IndexTuple, RationalFn>>;

// Applies Delta^{n-1}(g) for g in {E, F} to v_{t[lo..hi)}, iterating the
// two-factor coproduct Delta(E) = E ⊗ K + 1 ⊗ E and
// Delta(F) = F ⊗ 1 + K^{-1} ⊗ F in the requested bracketing.
TermList act_range(Gen g, const std::vector<ModuleDesc>& factors, const IndexTuple& t, size_t lo,
                   size_t hi, Bracketing br) {
    TermList out;
    if (lo >= hi) return out;
    if (hi - lo == 1) {
        if (auto term = single_factor(g, factors[lo], t[lo]))
            out.push_back({IndexTuple{term->first}, std::move(term->second)});
        return out;
    }
    if (br == Bracketing::LeftNested) {
        size_t last = hi - 1;
        TermList head = act_range(g, factors, t, lo, last, br);
        if (g == Gen::E) {
            // E ⊗ K: the last factor contributes its K-eigenvalue.
            RationalFn kq = q_power(k_exponent(factors, t, last, hi));
            for (auto& [tt, c] : head) {
                tt.push_back(t[last]);
                out.push_back({std::move(tt), c * kq});
            }
            if (auto term = single_factor(g, factors[last], t[last])) {
                IndexTuple tt(t.begin() + lo, t.begin() + last);
                tt.push_back(term->first);
                out.push_back({std::move(tt), std::move(term->second)});
            }
        } else {
            for (auto& [tt, c] : head) {
                tt.push_back(t[last]);
                out.push_back({std::move(tt), std::move(c)});
            }
            if (auto term = single_factor(g, factors[last], t[last])) {
                RationalFn kinv = q_power(-k_exponent(factors, t, lo, last));
                IndexTuple tt(t.begin() + lo, t.begin() + last);
                tt.push_back(term->first);
                out.push_back({std::move(tt), kinv * term->second});
            }
        }
        return out;
    }
    // RightNested: first factor against the rest.
    TermList tail = act_range(g, factors, t, lo + 1, hi, br);
    if (g == Gen::E) {
        if (auto term = single_factor(g, factors[lo], t[lo])) {
            RationalFn kq = q_power(k_exponent(factors, t, lo + 1, hi));
            IndexTuple tt{term->first};
            tt.insert(tt.end(), t.begin() + lo + 1, t.begin() + hi);
            out.push_back({std::move(tt), term->second * kq});
        }
        for (auto& [tt, c] : tail) {
            IndexTuple full{t[lo]};
            full.insert(full.end(), tt.begin(), tt.end());
            out.push_back({std::move(full), std::move(c)});
        }
    } else {
        if (auto term = single_factor(g, factors[lo], t[lo])) {
            IndexTuple tt{term->first};
            tt.insert(tt.end(), t.begin() + lo + 1, t.begin() + hi);
            out.push_back({std::move(tt), std::move(term->second)});
        }
        RationalFn kinv = q_power(-(factors[lo].weight - 2L * t[lo]));
        for (auto& [tt, c] : tail) {
            IndexTuple full{t[lo]};
            full.insert(full.end(), tt.begin(), tt.end());
            out.push_back({std::move(full), kinv * c});
        }
    }
    return out;
}

}  // namespace

BlockMatrix tensor_action(Gen g, const std::vector<ModuleDesc>& factors, int k,
                          Bracketing bracketing) {
    GradedBasis src = graded_basis(factors, k);
    GradedBasis dst = graded_basis(factors, k + gen_degree_shift(g));
    BlockMatrix m(static_cast<long>(dst.dim()), static_cast<long>(src.dim()));
    if (g == Gen::K || g == Gen::KInv) {
        WeightExpr total;
        for (const auto& f : factors) total = total + f.weight;
        total = total - 2L * k;
        RationalFn scalar = q_power(g == Gen::K ? total : -total);
        for (long c = 0; c < static_cast<long>(src.dim()); ++c) m.set(c, c, scalar);
        return m;
    }
    for (long c = 0; c < static_cast<long>(src.dim()); ++c) {
        for (auto& [tt, coeff] : act_range(g, factors, src.vectors[c], 0, factors.size(),
                                           bracketing)) {
            if (coeff.is_zero()) continue;
            long r = basis_index(dst, tt);
            if (r < 0) throw Error("generator action left the graded basis");
            m.add_at(r, c, coeff);
        }
    }
    return m;
}

BlockMatrix verma_action(Gen g, const WeightExpr& w, int k) {
    return tensor_action(g, {ModuleDesc::verma(w)}, k);
}

std::map<int, BlockMatrix> irrep_action(Gen g, int k_dim) {
    std::map<int, BlockMatrix> family;
    for (int d = 0; d <= k_dim; ++d)
        family.emplace(d, tensor_action(g, {ModuleDesc::finite_irrep(k_dim)}, d));
    return family;
}

namespace {

void report_differences(const BlockMatrix& lhs, const BlockMatrix& rhs, const std::string& check,
                        int degree, Report& report) {
    for (const auto& [r, c] : matrix_differences(lhs, rhs))
        report.push_back({check, degree, r, c, ""});
}

}  // namespace

Report check_quantum_relations(const std::vector<ModuleDesc>& factors, int D) {
    Report report;
    RationalFn q2 = q_power(WeightExpr(2)), qm2 = q_power(WeightExpr(-2));
    RationalFn inv_b1 = RationalFn::from_factored(LaurentPoly::one(), {bracket(WeightExpr(1))});
    std::map<int, BlockMatrix> K, KInv, E, F;
    for (int k = -1; k <= D + 1; ++k) {
        K.emplace(k, tensor_action(Gen::K, factors, k));
        KInv.emplace(k, tensor_action(Gen::KInv, factors, k));
    }
    for (int k = -1; k <= D; ++k) F.emplace(k, tensor_action(Gen::F, factors, k));
    for (int k = 0; k <= D + 1; ++k) E.emplace(k, tensor_action(Gen::E, factors, k));

    for (int k = 0; k <= D; ++k) {
        if (k >= 1)
            report_differences(K.at(k - 1) * E.at(k), (E.at(k) * K.at(k)).scaled(q2),
                               "relation:KE", k, report);
        if (k <= D - 1) {
            report_differences(K.at(k + 1) * F.at(k), (F.at(k) * K.at(k)).scaled(qm2),
                               "relation:KF", k, report);
            BlockMatrix lhs = E.at(k + 1) * F.at(k) - F.at(k - 1) * E.at(k);
            BlockMatrix rhs = (K.at(k) - KInv.at(k)).scaled(inv_b1);
            report_differences(lhs, rhs, "relation:EF-FE", k, report);
        }
    }
    return report;
}

Report check_coassociativity(const std::vector<ModuleDesc>& factors, int D) {
    Report report;
    for (Gen g : {Gen::K, Gen::KInv, Gen::E, Gen::F}) {
        for (int k = 0; k <= D; ++k) {
            BlockMatrix left = tensor_action(g, factors, k, Bracketing::LeftNested);
            BlockMatrix right = tensor_action(g, factors, k, Bracketing::RightNested);
            report_differences(left, right, "coassoc:" + gen_name(g), k, report);
        }
    }
    return report;
}

}  // namespace vjw
