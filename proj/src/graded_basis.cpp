#include "vjw/graded_basis.hpp"

#include <algorithm>

#include "vjw/error.hpp"

namespace vjw {

ModuleDesc ModuleDesc::finite_irrep(int k) {
    if (k < 0) throw ConfigError("finite irrep dimension parameter must be non-negative");
    return {Kind::FiniteIrrep, WeightExpr(k)};
}

std::optional<int> ModuleDesc::index_cap() const {
    if (kind == Kind::Verma) return std::nullopt;
    return static_cast<int>(weight.constant_value());
}

std::string ModuleDesc::to_string(const std::vector<std::string>& names) const {
    if (kind == Kind::Verma) return "M(" + weight.to_string(names) + ")";
    return "V(" + std::to_string(weight.constant_value()) + ")";
}

namespace {

void enumerate(const std::vector<ModuleDesc>& factors, size_t pos, int remaining,
               IndexTuple& current, std::vector<IndexTuple>& out) {
    if (pos == factors.size()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int hi = remaining;
    if (auto cap = factors[pos].index_cap()) hi = std::min(hi, *cap);
    for (int i = 0; i <= hi; ++i) {
        current.push_back(i);
        enumerate(factors, pos + 1, remaining - i, current, out);
        current.pop_back();
    }
}

}  // namespace

GradedBasis graded_basis(const std::vector<ModuleDesc>& factors, int degree) {
    GradedBasis b;
    b.factors = factors;
    b.degree = degree;
    if (degree >= 0) {
        IndexTuple scratch;
        scratch.reserve(factors.size());
        enumerate(factors, 0, degree, scratch, b.vectors);
    }
    return b;
}

long basis_index(const GradedBasis& basis, const IndexTuple& t) {
    auto it = std::lower_bound(basis.vectors.begin(), basis.vectors.end(), t);
    if (it == basis.vectors.end() || *it != t) return -1;
    return it - basis.vectors.begin();
}

}  // namespace vjw
