#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "vjw/weight.hpp"

namespace vjw {

using Rat = mpq_class;

// Monomial q^q_exp * prod_j t_j^t_exps[j].  Unused symbol slots stay zero, so
// monomials from scopes with fewer symbols compare and multiply consistently.
struct LaurentMono {
    int32_t q_exp = 0;
    std::array<int32_t, kMaxSymbols> t_exps{};

    static LaurentMono one() { return {}; }
    static LaurentMono q_power(int32_t e);
    // q^w after the substitution q^{mu_j} -> t_j.
    static LaurentMono from_weight(const WeightExpr& w);

    bool is_one() const;
    LaurentMono inverse() const;
    LaurentMono operator*(const LaurentMono& o) const;
    LaurentMono operator/(const LaurentMono& o) const;

    bool operator==(const LaurentMono& o) const = default;

    // Canonical total order: lexicographic on (t_exps, q_exp).  Compatible
    // with multiplication; used for term ordering, leading terms, and the
    // serialized rendering.
    std::strong_ordering operator<=>(const LaurentMono& o) const {
        if (auto c = t_exps <=> o.t_exps; c != 0) return c;
        return q_exp <=> o.q_exp;
    }
};

struct LaurentMonoHash {
    size_t operator()(const LaurentMono& m) const;
};

// Sparse Laurent polynomial with arbitrary-precision rational coefficients.
// Terms are kept strictly descending in the canonical monomial order with no
// zero coefficients; the zero polynomial has no terms.
class LaurentPoly {
  public:
    struct Term {
        LaurentMono mono;
        Rat coeff;
    };

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one();
    static LaurentPoly constant(Rat c);
    static LaurentPoly monomial(const LaurentMono& m, Rat c = Rat(1));
    // Builds from arbitrary (mono, coeff) pairs: collects, drops zeros, sorts.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // Adopts terms that are already strictly descending, with distinct
    // monomials and no zero coefficients.
    static LaurentPoly from_sorted_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool has_integer_coeffs() const;

    const Term& leading() const { return terms_.front(); }
    const Term& trailing() const { return terms_.back(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly shifted(const LaurentMono& m) const;  // multiply by a monomial
    LaurentPoly scaled_shifted(const Rat& c, const LaurentMono& m) const;

    // Structural equality (canonical forms, so also value equality).
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Deterministic total order on polynomials, used to keep denominator
    // factor lists sorted.
    static bool less(const LaurentPoly& a, const LaurentPoly& b);

    // Substitutes t_j -> q^{assignment[j]}.  Every symbol occurring in the
    // polynomial must be assigned; throws ConfigError otherwise.
    LaurentPoly specialized(const std::map<int, long>& assignment) const;

    int max_symbol() const;  // largest t index with a nonzero exponent, or -1

    std::string to_string(const std::vector<std::string>& t_names = {}) const;

  private:
    friend class PolyAccumulator;
    std::vector<Term> terms_;
};

// The unit u = coeff * q^mono such that  p = u * canonical_part, where the
// canonical part has integer coprime coefficients, zero minimum exponent in
// every variable, and positive leading coefficient.
struct PolyUnit {
    Rat coeff;
    LaurentMono mono;
};

// Splits a nonzero polynomial into unit * canonical part.
std::pair<PolyUnit, LaurentPoly> canonical_split(const LaurentPoly& p);

// Exact division in the Laurent ring: returns p/d if d divides p, otherwise
// nullopt.  Uses per-variable degree bounds to reject non-multiples quickly.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

// Accumulates sums of polynomial products without materializing
// intermediates.  add_product uses an integer fast path when both operands
// have integer coefficients.
class PolyAccumulator {
  public:
    void add(const LaurentPoly& p);
    void add_scaled(const LaurentPoly& p, const Rat& c, const LaurentMono& shift);
    void add_product(const LaurentPoly& a, const LaurentPoly& b);
    bool empty() const { return acc_.empty(); }
    LaurentPoly take();

  private:
    std::unordered_map<LaurentMono, Rat, LaurentMonoHash> acc_;
};

}  // namespace vjw
