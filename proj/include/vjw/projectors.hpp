#pragma once

#include "vjw/intertwiners.hpp"

namespace vjw {

// A degree-graded endomorphism, square on each canonical degree basis, with
// a human-readable trace of how the recursion assembled it.
struct ProjectorBlocks {
    std::vector<ModuleDesc> factors;
    std::map<int, BlockMatrix> blocks;
    int cutoff = 0;
    std::vector<std::string> provenance;
};

// The Jones-Wenzl projector on V_1^{⊗n} over Q(q):
//   P_1 = Id,   P_n = P_{n-1} + ([n-1]/[n]) P_{n-1} e_{n-1} P_{n-1}
// with P_{n-1} extended by ⊗Id.  Blocks for all degrees 0..n.
ProjectorBlocks jw(int n);

// The projector P_{w_1,...,w_n} onto the Verma submodule M(sum w_j) of
// M(w_1) ⊗ ... ⊗ M(w_n), blocks for degrees 0..D:
//   n = 2:  f_block ∘ e_block per degree;
//   n > 2:  spliced-F ∘ P_{w_1+w_2, w_3, ...} ∘ spliced-E.
ProjectorBlocks extended_jw(const std::vector<WeightExpr>& weights, int D,
                            const std::vector<std::string>& names = {});

// Exact blockwise check P·P = P; reports the first differing entry per
// degree block.
Report verify_idempotent(const ProjectorBlocks& p);

// Exact check that every degree block has trace 1 (the projector image is
// one-dimensional per degree).
Report check_trace_one(const ProjectorBlocks& p);

// Independent reconstruction of the M(mu+lambda) -> M(mu) ⊗ M(lambda)
// intertwiner from nothing but the module/coproduct actions: seeds
// v_0 ↦ v_{0,0} and pushes down with
//   G(v_{k+1}) = (tensor F-action of G(v_k)) / [mu+lambda-k].
// Never touches the closed-form coefficients, so agreement with f_family is
// a genuine cross-check.
IntertwinerBlocks f_oracle(const WeightExpr& mu, const WeightExpr& lambda, int D);

}  // namespace vjw
