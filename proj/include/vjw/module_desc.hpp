#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vjw/weight.hpp"

namespace vjw {

// One tensor factor: a Verma module M(w) with (possibly symbolic) highest
// weight, or the (k+1)-dimensional irreducible V_k.
struct ModuleDesc {
    enum class Kind { Verma, FiniteIrrep };

    Kind kind = Kind::Verma;
    WeightExpr weight;  // Verma: highest weight; FiniteIrrep: the constant k

    static ModuleDesc verma(WeightExpr w) { return {Kind::Verma, std::move(w)}; }
    static ModuleDesc finite_irrep(int k);

    bool is_verma() const { return kind == Kind::Verma; }
    // Largest admissible basis index, or nullopt when unbounded (Verma).
    std::optional<int> index_cap() const;

    bool operator==(const ModuleDesc& o) const = default;

    std::string to_string(const std::vector<std::string>& names = {}) const;
};

}  // namespace vjw
