#pragma once

#include <map>
#include <string>
#include <vector>

namespace vjw {

// Maximum number of formal weight symbols t_1..t_n supported in one scope.
inline constexpr int kMaxSymbols = 8;

// A formal weight  mu = sum_j a_j * mu_j + b  with integer a_j, b.
// The map holds no zero coefficients, so structural equality is value
// equality.
class WeightExpr {
  public:
    WeightExpr() = default;
    explicit WeightExpr(long constant) : offset_(constant) {}

    static WeightExpr symbol(int index);

    const std::map<int, long>& coeffs() const { return coeffs_; }
    long offset() const { return offset_; }

    bool is_constant() const { return coeffs_.empty(); }
    long constant_value() const;  // throws unless is_constant()

    WeightExpr operator+(const WeightExpr& o) const;
    WeightExpr operator-(const WeightExpr& o) const;
    WeightExpr operator-() const;
    WeightExpr operator+(long c) const;
    WeightExpr operator-(long c) const;
    WeightExpr operator*(long s) const;

    bool operator==(const WeightExpr& o) const {
        return offset_ == o.offset_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const WeightExpr& o) const { return !(*this == o); }
    bool operator<(const WeightExpr& o) const {
        if (offset_ != o.offset_) return offset_ < o.offset_;
        return coeffs_ < o.coeffs_;
    }

    // Largest symbol index used, or -1 for constants.
    int max_symbol() const;

    // "mu1 + 2*mu3 - 1" with the given symbol names (defaults to mu1..mun).
    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    std::map<int, long> coeffs_;
    long offset_ = 0;
};

}  // namespace vjw
