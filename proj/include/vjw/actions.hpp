#pragma once

#include <map>

#include "vjw/block_matrix.hpp"
#include "vjw/graded_basis.hpp"
#include "vjw/report.hpp"

namespace vjw {

enum class Gen { K, KInv, E, F };

std::string gen_name(Gen g);

// Coproduct iteration order for n-fold tensor products.  LeftNested is the
// canonical choice ((M1 ⊗ M2) ⊗ ...) ⊗ Mn; RightNested exists to test that
// the choice does not matter.
enum class Bracketing { LeftNested, RightNested };

// Degree shift of a generator: K/KInv preserve degree, E lowers by one,
// F raises by one.
int gen_degree_shift(Gen g);

// Matrix of the generator on the degree-k piece of the tensor product, from
// the canonical degree-k basis to the canonical basis in degree
// k + gen_degree_shift(g).  Single factors reproduce the module actions
// K v_i = q^{w-2i} v_i, E v_i = [i] v_{i-1}, F v_i = [w-i] v_{i+1}
// (with v_{k+1} = 0 on the finite irrep V_k).
BlockMatrix tensor_action(Gen g, const std::vector<ModuleDesc>& factors, int k,
                          Bracketing bracketing = Bracketing::LeftNested);

// Single Verma factor M(w) at degree k (1×1, or empty at the E boundary).
BlockMatrix verma_action(Gen g, const WeightExpr& w, int k);

// All degree blocks of the generator on the irrep V_k, degree 0..k_dim.
std::map<int, BlockMatrix> irrep_action(Gen g, int k_dim);

// Exact verification of K E = q^2 E K, K F = q^{-2} F K and
// E F - F E = (K - K^{-1})/(q - q^{-1}) on every degree where all composite
// blocks exist below the cutoff (F-composites need k <= D-1).
Report check_quantum_relations(const std::vector<ModuleDesc>& factors, int D);

// Compares LeftNested and RightNested matrices for every generator and all
// degrees k <= D; needs at least three factors to be meaningful.
Report check_coassociativity(const std::vector<ModuleDesc>& factors, int D);

}  // namespace vjw
