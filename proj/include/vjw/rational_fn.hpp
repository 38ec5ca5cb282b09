#pragma once

#include <string>
#include <vector>

#include "vjw/laurent.hpp"

namespace vjw {

// Element of the fraction field, kept as
//
//     num / (factors[0] * factors[1] * ... )
//
// where every denominator factor is canonical: integer coprime coefficients,
// minimum exponent zero in each variable, positive leading coefficient.  All
// unit freedom (rational scale, monomial shift) lives in the numerator.  The
// factor list is sorted and duplicates are allowed.
//
// Keeping the denominator factored instead of expanded is what makes large
// matrix computations feasible: the factors arising in practice are shared
// across entries, so cancellation is a cheap exact-division probe instead of
// a multivariate gcd.
class RationalFn {
  public:
    RationalFn() = default;  // zero

    static RationalFn zero() { return {}; }
    static RationalFn one() { return from_poly(LaurentPoly::one()); }
    static RationalFn constant(Rat c) { return from_poly(LaurentPoly::constant(std::move(c))); }
    static RationalFn from_poly(LaurentPoly p);
    // num/den with cancellation; throws DivisionByZeroError if den is zero.
    static RationalFn from_ratio(const LaurentPoly& num, const LaurentPoly& den);
    static RationalFn from_factored(LaurentPoly num, std::vector<LaurentPoly> factors);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.empty() && num_.is_one(); }
    bool is_polynomial() const { return den_.empty(); }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<LaurentPoly>& denominator_factors() const { return den_; }
    LaurentPoly denominator() const;  // expanded product (1 if empty)

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;  // throws on zero divisor
    RationalFn inverse() const;

    RationalFn scaled(const Rat& c) const;

    // Value equality via cross multiplication after stripping common factors.
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    // Substitutes t_j -> q^{assignment[j]} in numerator and denominator and
    // reduces the univariate result.  Throws PoleError if a denominator
    // factor vanishes under the assignment, ConfigError if a symbol that
    // occurs is not assigned.
    RationalFn specialized(const std::map<int, long>& assignment) const;

    int max_symbol() const;

    std::string to_string(const std::vector<std::string>& t_names = {}) const;

  private:
    friend class RationalSum;
    LaurentPoly num_;
    std::vector<LaurentPoly> den_;
};

// Running sum of products of rational functions.  Defers cancellation to
// take(), which matters in matrix products where all summands share the same
// denominator factors.
class RationalSum {
  public:
    void add(const RationalFn& f);
    void add_product(const RationalFn& a, const RationalFn& b);
    bool empty() const { return num_.is_zero(); }
    RationalFn take();

  private:
    void merge(LaurentPoly incoming_num, const std::vector<LaurentPoly>& incoming_den);
    LaurentPoly num_;
    std::vector<LaurentPoly> den_;
};

// gcd of two univariate-in-q Laurent polynomials, canonical (primitive,
// minimum exponent zero, positive leading coefficient); gcd(p, 0) = p made
// canonical.  Inputs must not involve any t symbol.
LaurentPoly gcd_q(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace vjw
