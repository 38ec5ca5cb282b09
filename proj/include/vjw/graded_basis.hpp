#pragma once

#include <vector>

#include "vjw/module_desc.hpp"

namespace vjw {

// Index tuple (i_1, ..., i_n) naming the basis vector v_{i_1} ⊗ ... ⊗ v_{i_n}.
using IndexTuple = std::vector<int>;

// Ordered basis of the total-degree-k piece of a tensor product: all tuples
// with sum k (respecting finite-factor caps), lexicographically ascending.
struct GradedBasis {
    std::vector<ModuleDesc> factors;
    int degree = 0;
    std::vector<IndexTuple> vectors;

    size_t dim() const { return vectors.size(); }
};

// Deterministic canonical basis; empty vector list when degree < 0 or the
// degree exceeds what the finite factors allow.
GradedBasis graded_basis(const std::vector<ModuleDesc>& factors, int degree);

// Position of a tuple in the basis, or -1 if absent.
long basis_index(const GradedBasis& basis, const IndexTuple& t);

}  // namespace vjw
