#pragma once

#include <map>

#include "vjw/actions.hpp"
#include "vjw/block_matrix.hpp"
#include "vjw/report.hpp"

namespace vjw {

// A degree-preserving module map, one block per total degree.  blocks[k]
// maps the canonical degree-k basis of src_factors to the canonical degree-k
// basis of dst_factors.
struct IntertwinerBlocks {
    std::vector<ModuleDesc> src_factors;
    std::vector<ModuleDesc> dst_factors;
    std::map<int, BlockMatrix> blocks;
    int cutoff = 0;
};

// Identity on the given factors, blocks for 0 <= k <= D.
IntertwinerBlocks identity_family(const std::vector<ModuleDesc>& factors, int D);

// Degree-wise composition a ∘ b (b first); factor lists must chain.
IntertwinerBlocks compose(const IntertwinerBlocks& a, const IntertwinerBlocks& b);

// The fusion map M(mu) ⊗ M(lambda) -> M(mu+lambda) at degree k:
// v_{i,j} ↦ q^{i(lambda-j)} v_{i+j}.
BlockMatrix e_block(const WeightExpr& mu, const WeightExpr& lambda, int k);

// Its one-sided inverse M(mu+lambda) -> M(mu) ⊗ M(lambda) at degree k:
//
//   v_k ↦ sum_j  q^{-(k-j)(mu-j)} binom(k, j)
//          (prod_{i<j} [mu-i]) (prod_{i<k-j} [lambda-i]) / prod_{i<k} [mu+lambda-i]
//          v_{j,k-j}
//
// Throws PoleError if some [mu+lambda-i] is identically zero (constant
// weights summing to a value in 0..k-1).
BlockMatrix f_block(const WeightExpr& mu, const WeightExpr& lambda, int k);

IntertwinerBlocks e_family(const WeightExpr& mu, const WeightExpr& lambda, int D);
IntertwinerBlocks f_family(const WeightExpr& mu, const WeightExpr& lambda, int D);

// Degree-k block of Id_pre ⊗ mid ⊗ Id_post.  Needs mid.blocks at every
// degree d <= k that the middle slot can carry; throws Error when one is
// missing.
BlockMatrix tensor_insert(const std::vector<ModuleDesc>& pre, const IntertwinerBlocks& mid,
                          const std::vector<ModuleDesc>& post, int k);

// mid ⊗ Id_trailing at degree k (the extension used by the fusion recursion).
BlockMatrix splice(const IntertwinerBlocks& base, const std::vector<ModuleDesc>& trailing,
                   int k);

IntertwinerBlocks splice_family(const IntertwinerBlocks& base,
                                const std::vector<ModuleDesc>& trailing, int D);

// cap: scalar ↦ v_{0,1} - q^{-1} v_{1,0} and cup: v_{0,1} ↦ -q, v_{1,0} ↦ 1
// (v_{0,0}, v_{1,1} ↦ 0), as vectors over the degree-1 basis [(0,1), (1,0)]
// of V_1 ⊗ V_1.
BlockMatrix cap_matrix();
BlockMatrix cup_matrix();

// The Temperley-Lieb generator e_i = Id^{(i-1)} ⊗ (cap ∘ cup) ⊗ Id^{(n-i-1)}
// on V_1^{⊗n}, all degree blocks 0..n; 1 <= i <= n-1.
IntertwinerBlocks tl_e(int n, int i);

// Verifies K φ = φ K (k <= D), E φ = φ E (1 <= k <= D), F φ = φ F
// (k <= D-1) exactly; empty report iff φ intertwines on the window.
Report check_intertwiner(const IntertwinerBlocks& phi, int D);

}  // namespace vjw
