#include "vjw/intertwiners.hpp"

#include "vjw/error.hpp"
#include "vjw/qfield.hpp"

namespace vjw {

IntertwinerBlocks identity_family(const std::vector<ModuleDesc>& factors, int D) {
    IntertwinerBlocks out{factors, factors, {}, D};
    for (int k = 0; k <= D; ++k)
        out.blocks.emplace(k, BlockMatrix::identity(
                                  static_cast<long>(graded_basis(factors, k).dim())));
    return out;
}

IntertwinerBlocks compose(const IntertwinerBlocks& a, const IntertwinerBlocks& b) {
    if (a.src_factors != b.dst_factors) throw Error("composition factor mismatch");
    IntertwinerBlocks out{b.src_factors, a.dst_factors, {}, std::min(a.cutoff, b.cutoff)};
    for (int k = 0; k <= out.cutoff; ++k) out.blocks.emplace(k, a.blocks.at(k) * b.blocks.at(k));
    return out;
}

BlockMatrix e_block(const WeightExpr& mu, const WeightExpr& lambda, int k) {
    std::vector<ModuleDesc> src{ModuleDesc::verma(mu), ModuleDesc::verma(lambda)};
    GradedBasis basis = graded_basis(src, k);
    BlockMatrix m(1, static_cast<long>(basis.dim()));
    for (long c = 0; c < static_cast<long>(basis.dim()); ++c) {
        long i = basis.vectors[c][0], j = basis.vectors[c][1];
        WeightExpr exp = (lambda - j) * i;  // i(lambda - j)
        m.set(0, c, RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::from_weight(exp))));
    }
    return m;
}

BlockMatrix f_block(const WeightExpr& mu, const WeightExpr& lambda, int k) {
    std::vector<ModuleDesc> dst{ModuleDesc::verma(mu), ModuleDesc::verma(lambda)};
    GradedBasis basis = graded_basis(dst, k);
    BlockMatrix m(static_cast<long>(basis.dim()), 1);

    // Common denominator prod_{i<k} [mu+lambda-i].  Writing [x] = <x>/<1>
    // with <x> = q^x - q^{-x}, the <1> powers cancel between the numerator
    // products (j + (k-j) = k brackets) and the denominator (k brackets), so
    // only plain brackets remain on both sides.
    std::vector<LaurentPoly> den;
    den.reserve(k);
    for (int i = 0; i < k; ++i) {
        LaurentPoly b = bracket(mu + lambda - i);
        if (b.is_zero())
            throw PoleError("denominator [" + (mu + lambda - i).to_string() +
                                "] is identically zero",
                            (mu + lambda - i).to_string());
        den.push_back(std::move(b));
    }

    for (long r = 0; r < static_cast<long>(basis.dim()); ++r) {
        long j = basis.vectors[r][0];  // row tuple is (j, k-j)
        WeightExpr exp = -((mu - j) * (k - j));
        LaurentPoly num = q_binomial(k, static_cast<int>(j)).numerator();
        num = num.shifted(LaurentMono::from_weight(exp));
        for (long i = 0; i < j; ++i) num = num * bracket(mu - i);
        for (long i = 0; i < k - j; ++i) num = num * bracket(lambda - i);
        m.set(r, 0, RationalFn::from_factored(std::move(num), den));
    }
    return m;
}

IntertwinerBlocks e_family(const WeightExpr& mu, const WeightExpr& lambda, int D) {
    IntertwinerBlocks out{{ModuleDesc::verma(mu), ModuleDesc::verma(lambda)},
                          {ModuleDesc::verma(mu + lambda)},
                          {},
                          D};
    for (int k = 0; k <= D; ++k) out.blocks.emplace(k, e_block(mu, lambda, k));
    return out;
}

IntertwinerBlocks f_family(const WeightExpr& mu, const WeightExpr& lambda, int D) {
    IntertwinerBlocks out{{ModuleDesc::verma(mu + lambda)},
                          {ModuleDesc::verma(mu), ModuleDesc::verma(lambda)},
                          {},
                          D};
    for (int k = 0; k <= D; ++k) out.blocks.emplace(k, f_block(mu, lambda, k));
    return out;
}

BlockMatrix tensor_insert(const std::vector<ModuleDesc>& pre, const IntertwinerBlocks& mid,
                          const std::vector<ModuleDesc>& post, int k) {
    auto concat = [](const std::vector<ModuleDesc>& a, const std::vector<ModuleDesc>& b,
                     const std::vector<ModuleDesc>& c) {
        std::vector<ModuleDesc> out = a;
        out.insert(out.end(), b.begin(), b.end());
        out.insert(out.end(), c.begin(), c.end());
        return out;
    };
    GradedBasis src = graded_basis(concat(pre, mid.src_factors, post), k);
    GradedBasis dst = graded_basis(concat(pre, mid.dst_factors, post), k);
    BlockMatrix out(static_cast<long>(dst.dim()), static_cast<long>(src.dim()));

    const size_t np = pre.size(), nm = mid.src_factors.size();
    std::map<int, std::pair<GradedBasis, GradedBasis>> mid_bases;  // degree -> (src, dst)

    for (long c = 0; c < static_cast<long>(src.dim()); ++c) {
        const IndexTuple& t = src.vectors[c];
        int d = 0;
        for (size_t j = np; j < np + nm; ++j) d += t[j];
        auto bit = mid_bases.find(d);
        if (bit == mid_bases.end())
            bit = mid_bases
                      .emplace(d, std::pair{graded_basis(mid.src_factors, d),
                                            graded_basis(mid.dst_factors, d)})
                      .first;
        IndexTuple mid_part(t.begin() + np, t.begin() + np + nm);
        long mc = basis_index(bit->second.first, mid_part);
        if (mc < 0) throw Error("tensor_insert source tuple outside middle basis");
        auto block_it = mid.blocks.find(d);
        if (block_it == mid.blocks.end())
            throw Error("tensor_insert missing base block at degree " + std::to_string(d));
        const GradedBasis& mid_dst = bit->second.second;
        for (const auto& [rc, v] : block_it->second.entries()) {
            if (rc.second != mc) continue;
            IndexTuple full(t.begin(), t.begin() + np);
            const IndexTuple& mid_out = mid_dst.vectors[rc.first];
            full.insert(full.end(), mid_out.begin(), mid_out.end());
            full.insert(full.end(), t.begin() + np + nm, t.end());
            long r = basis_index(dst, full);
            if (r < 0) throw Error("tensor_insert target tuple outside basis");
            out.add_at(r, c, v);
        }
    }
    return out;
}

BlockMatrix splice(const IntertwinerBlocks& base, const std::vector<ModuleDesc>& trailing,
                   int k) {
    return tensor_insert({}, base, trailing, k);
}

IntertwinerBlocks splice_family(const IntertwinerBlocks& base,
                                const std::vector<ModuleDesc>& trailing, int D) {
    auto extend = [&trailing](std::vector<ModuleDesc> fs) {
        fs.insert(fs.end(), trailing.begin(), trailing.end());
        return fs;
    };
    IntertwinerBlocks out{extend(base.src_factors), extend(base.dst_factors), {}, D};
    for (int k = 0; k <= D; ++k) out.blocks.emplace(k, splice(base, trailing, k));
    return out;
}

BlockMatrix cap_matrix() {
    BlockMatrix m(2, 1);  // degree-1 basis [(0,1), (1,0)]
    m.set(0, 0, RationalFn::one());
    m.set(1, 0, RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::q_power(-1), Rat(-1))));
    return m;
}

BlockMatrix cup_matrix() {
    BlockMatrix m(1, 2);
    m.set(0, 0, RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::q_power(1), Rat(-1))));
    m.set(0, 1, RationalFn::one());
    return m;
}

IntertwinerBlocks tl_e(int n, int i) {
    if (n < 1) throw ConfigError("tl_e requires n >= 1");
    if (i < 1 || i > n - 1) throw ConfigError("tl_e strand index out of range");
    std::vector<ModuleDesc> pair{ModuleDesc::finite_irrep(1), ModuleDesc::finite_irrep(1)};
    IntertwinerBlocks mid{pair, pair, {}, 2};
    mid.blocks.emplace(0, BlockMatrix(1, 1));  // v_{0,0} ↦ 0
    mid.blocks.emplace(1, cap_matrix() * cup_matrix());
    mid.blocks.emplace(2, BlockMatrix(1, 1));  // v_{1,1} ↦ 0
    std::vector<ModuleDesc> pre(i - 1, ModuleDesc::finite_irrep(1));
    std::vector<ModuleDesc> post(n - i - 1, ModuleDesc::finite_irrep(1));
    std::vector<ModuleDesc> all(n, ModuleDesc::finite_irrep(1));
    IntertwinerBlocks out{all, all, {}, n};
    for (int k = 0; k <= n; ++k) out.blocks.emplace(k, tensor_insert(pre, mid, post, k));
    return out;
}

Report check_intertwiner(const IntertwinerBlocks& phi, int D) {
    Report report;
    auto block = [&phi](int k) -> const BlockMatrix& {
        auto it = phi.blocks.find(k);
        if (it == phi.blocks.end())
            throw Error("intertwiner missing block at degree " + std::to_string(k));
        return it->second;
    };
    for (int k = 0; k <= D; ++k) {
        BlockMatrix lhs = tensor_action(Gen::K, phi.dst_factors, k) * block(k);
        BlockMatrix rhs = block(k) * tensor_action(Gen::K, phi.src_factors, k);
        for (const auto& [r, c] : matrix_differences(lhs, rhs))
            report.push_back({"intertwiner:K", k, r, c, ""});
    }
    for (int k = 1; k <= D; ++k) {
        BlockMatrix lhs = tensor_action(Gen::E, phi.dst_factors, k) * block(k);
        BlockMatrix rhs = block(k - 1) * tensor_action(Gen::E, phi.src_factors, k);
        for (const auto& [r, c] : matrix_differences(lhs, rhs))
            report.push_back({"intertwiner:E", k, r, c, ""});
    }
    for (int k = 0; k <= D - 1; ++k) {
        BlockMatrix lhs = tensor_action(Gen::F, phi.dst_factors, k) * block(k);
        BlockMatrix rhs = block(k + 1) * tensor_action(Gen::F, phi.src_factors, k);
        for (const auto& [r, c] : matrix_differences(lhs, rhs))
            report.push_back({"intertwiner:F", k, r, c, ""});
    }
    return report;
}

}  // namespace vjw
