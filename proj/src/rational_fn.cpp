#include "vjw/rational_fn.hpp"

#include <algorithm>

#include "vjw/error.hpp"

namespace vjw {

namespace {

bool factor_less(const LaurentPoly& a, const LaurentPoly& b) { return LaurentPoly::less(a, b); }

LaurentPoly product_of(const std::vector<LaurentPoly>& fs) {
    LaurentPoly p = LaurentPoly::one();
    for (const auto& f : fs) p = p * f;
    return p;
}

// Splits two sorted factor multisets into (common, only_a, only_b).
void split_common(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b,
                  std::vector<LaurentPoly>& common, std::vector<LaurentPoly>& only_a,
                  std::vector<LaurentPoly>& only_b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (factor_less(a[i], b[j])) {
            only_a.push_back(a[i++]);
        } else if (factor_less(b[j], a[i])) {
            only_b.push_back(b[j++]);
        } else {
            common.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    only_a.insert(only_a.end(), a.begin() + i, a.end());
    only_b.insert(only_b.end(), b.begin() + j, b.end());
}

std::vector<LaurentPoly> merge_sorted(const std::vector<LaurentPoly>& a,
                                      const std::vector<LaurentPoly>& b) {
    std::vector<LaurentPoly> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), factor_less);
    return out;
}

// Cancels denominator factors that divide the numerator exactly.  Factors
// are assumed canonical and sorted; removal preserves both.
void cancel(LaurentPoly& num, std::vector<LaurentPoly>& den) {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (size_t i = 0; i < den.size();) {
        if (auto q = divide_exact(num, den[i])) {
            num = std::move(*q);
            den.erase(den.begin() + i);
            // A duplicate of the removed factor sits at the same index; try
            // it against the reduced numerator before moving on.
        } else {
            ++i;
        }
    }
}

}  // namespace

RationalFn RationalFn::from_poly(LaurentPoly p) {
    RationalFn f;
    f.num_ = std::move(p);
    return f;
}

RationalFn RationalFn::from_ratio(const LaurentPoly& num, const LaurentPoly& den) {
    return from_factored(num, {den});
}

RationalFn RationalFn::from_factored(LaurentPoly num, std::vector<LaurentPoly> factors) {
    RationalFn f;
    f.num_ = std::move(num);
    for (auto& raw : factors) {
        if (raw.is_zero()) throw DivisionByZeroError("zero denominator factor");
        if (f.num_.is_zero()) continue;
        auto [unit, core] = canonical_split(raw);
        f.num_ = f.num_.scaled_shifted(1 / unit.coeff, unit.mono.inverse());
        if (!core.is_one()) f.den_.push_back(std::move(core));
    }
    if (f.num_.is_zero()) {
        f.den_.clear();
        return f;
    }
    std::sort(f.den_.begin(), f.den_.end(), factor_less);
    cancel(f.num_, f.den_);
    return f;
}

LaurentPoly RationalFn::denominator() const { return product_of(den_); }

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RationalFn r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        std::vector<LaurentPoly> common, mine, theirs;
        split_common(den_, o.den_, common, mine, theirs);
        r.num_ = num_ * product_of(theirs) + o.num_ * product_of(mine);
        r.den_ = merge_sorted(common, merge_sorted(mine, theirs));
    }
    cancel(r.num_, r.den_);
    return r;
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (is_zero() || o.is_zero()) return {};
    RationalFn r;
    // Cancel across the product first: each side's numerator against the
    // other side's factors.  Smaller divisions than attacking the product.
    LaurentPoly na = num_, nb = o.num_;
    std::vector<LaurentPoly> da = den_, db = o.den_;
    cancel(na, db);
    cancel(nb, da);
    r.num_ = na * nb;
    r.den_ = merge_sorted(da, db);
    cancel(r.num_, r.den_);
    return r;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return from_factored(denominator(), {num_});
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    return *this * o.inverse();
}

RationalFn RationalFn::scaled(const Rat& c) const {
    if (c == 0) return {};
    RationalFn r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    return r;
}

bool RationalFn::operator==(const RationalFn& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    std::vector<LaurentPoly> common, mine, theirs;
    split_common(den_, o.den_, common, mine, theirs);
    return num_ * product_of(theirs) == o.num_ * product_of(mine);
}

RationalFn RationalFn::specialized(const std::map<int, long>& assignment) const {
    LaurentPoly num = num_.specialized(assignment);
    LaurentPoly den = LaurentPoly::one();
    for (const auto& f : den_) {
        LaurentPoly fs = f.specialized(assignment);
        if (fs.is_zero())
            throw PoleError("denominator factor " + f.to_string() +
                                " vanishes under the given specialization",
                            f.to_string());
        den = den * fs;
    }
    if (num.is_zero()) return {};
    if (!den.is_one()) {
        LaurentPoly g = gcd_q(num, den);
        if (!g.is_one()) {
            num = *divide_exact(num, g);
            den = *divide_exact(den, g);
        }
    }
    return from_factored(std::move(num), {den});
}

int RationalFn::max_symbol() const {
    int m = num_.max_symbol();
    for (const auto& f : den_) m = std::max(m, f.max_symbol());
    return m;
}

std::string RationalFn::to_string(const std::vector<std::string>& t_names) const {
    if (den_.empty()) return num_.to_string(t_names);
    std::string num = num_.to_string(t_names);
    if (num_.size() > 1) num = "(" + num + ")";
    return num + "/(" + denominator().to_string(t_names) + ")";
}

void RationalSum::add(const RationalFn& f) { merge(f.num_, f.den_); }

void RationalSum::add_product(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return;
    merge(a.num_ * b.num_, merge_sorted(a.den_, b.den_));
}

void RationalSum::merge(LaurentPoly incoming_num, const std::vector<LaurentPoly>& incoming_den) {
    if (incoming_num.is_zero()) return;
    if (num_.is_zero()) {
        num_ = std::move(incoming_num);
        den_ = incoming_den;
        return;
    }
    if (den_ == incoming_den) {
        num_ = num_ + incoming_num;
        return;
    }
    std::vector<LaurentPoly> common, mine, theirs;
    split_common(den_, incoming_den, common, mine, theirs);
    num_ = num_ * product_of(theirs) + incoming_num * product_of(mine);
    den_ = merge_sorted(common, merge_sorted(mine, theirs));
}

RationalFn RationalSum::take() {
    RationalFn r;
    if (!num_.is_zero()) {
        cancel(num_, den_);
        r.num_ = std::move(num_);
        r.den_ = std::move(den_);
    }
    num_ = LaurentPoly::zero();
    den_.clear();
    return r;
}

namespace {

// Remainder of ordinary (non-negative exponent, q-only) polynomial division.
LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
    const auto& bl = b.leading();
    while (!a.is_zero() && a.leading().mono.q_exp >= bl.mono.q_exp) {
        Rat c = a.leading().coeff / bl.coeff;
        auto shift = LaurentMono::q_power(a.leading().mono.q_exp - bl.mono.q_exp);
        a = a - b.scaled_shifted(c, shift);
    }
    return a;
}

}  // namespace

LaurentPoly gcd_q(const LaurentPoly& a, const LaurentPoly& b) {
    auto canon = [](const LaurentPoly& p) { return canonical_split(p).second; };
    if (a.is_zero() && b.is_zero()) return LaurentPoly::zero();
    if (a.is_zero()) return canon(b);
    if (b.is_zero()) return canon(a);
    if (a.max_symbol() >= 0 || b.max_symbol() >= 0)
        throw Error("gcd_q requires univariate polynomials in q");
    LaurentPoly x = canon(a), y = canon(b);
    while (!y.is_zero()) {
        LaurentPoly r = poly_mod(x, y);
        x = std::move(y);
        // Strip content and shift each round to keep coefficients small.
        y = r.is_zero() ? LaurentPoly::zero() : canon(r);
    }
    return x;
}

}  // namespace vjw
