#include "vjw/qfield.hpp"

#include <mutex>
#include <vector>

#include "vjw/error.hpp"

namespace vjw {

LaurentPoly bracket(const WeightExpr& w) {
    return LaurentPoly::from_terms({{LaurentMono::from_weight(w), Rat(1)},
                                    {LaurentMono::from_weight(-w), Rat(-1)}});
}

LaurentPoly poly_q_int(long n) {
    if (n == 0) return LaurentPoly::zero();
    bool neg = n < 0;
    long m = neg ? -n : n;
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(m);
    for (long e = m - 1; e >= 1 - m; e -= 2)
        terms.push_back({LaurentMono::q_power(static_cast<int32_t>(e)), Rat(neg ? -1 : 1)});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial(int k) {
    if (k < 0) throw ConfigError("q_factorial of negative argument");
    static std::mutex mtx;
    static std::vector<LaurentPoly> cache{LaurentPoly::one()};  // [0]! = 1
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(cache.back() * poly_q_int(static_cast<long>(cache.size())));
    return cache[k];
}

RationalFn q_int(const WeightExpr& w) {
    if (w.is_constant()) return RationalFn::from_poly(poly_q_int(w.constant_value()));
    return RationalFn::from_ratio(bracket(w), bracket(WeightExpr(1)));
}

RationalFn q_binomial(int k, int l) {
    if (l < 0 || l > k)
        throw ConfigError("q_binomial(" + std::to_string(k) + ", " + std::to_string(l) +
                          ") requires 0 <= l <= k");
    return RationalFn::from_factored(q_factorial(k), {q_factorial(l), q_factorial(k - l)});
}

RationalFn specialize(const RationalFn& f, const std::map<int, long>& assignment) {
    return f.specialized(assignment);
}

}  // namespace vjw
