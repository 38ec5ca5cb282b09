#include <random>

#include "doctest.h"

#include "vjw/error.hpp"
#include "vjw/qfield.hpp"

using namespace vjw;

namespace {

LaurentMono mono(int32_t q, int32_t t1 = 0, int32_t t2 = 0) {
    LaurentMono m;
    m.q_exp = q;
    m.t_exps[0] = t1;
    m.t_exps[1] = t2;
    return m;
}

LaurentPoly random_poly(std::mt19937& rng, int max_terms, int exp_range,
                        bool integer_coeffs = true) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int32_t> exp(-exp_range, exp_range);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<LaurentPoly::Term> terms;
    for (int i = nterms(rng); i > 0; --i) {
        Rat c(num(rng), integer_coeffs ? 1 : den(rng));
        c.canonicalize();
        terms.push_back({mono(exp(rng), exp(rng), exp(rng)), c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly random_nonzero(std::mt19937& rng, int max_terms, int exp_range,
                           bool integer_coeffs = true) {
    while (true) {
        LaurentPoly p = random_poly(rng, max_terms, exp_range, integer_coeffs);
        if (!p.is_zero()) return p;
    }
}

bool strictly_descending(const LaurentPoly& p) {
    for (size_t i = 1; i < p.size(); ++i)
        if (!(p.terms()[i - 1].mono > p.terms()[i].mono)) return false;
    return true;
}

RationalFn q_pow(int e) {
    return RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::q_power(e)));
}

const WeightExpr mu = WeightExpr::symbol(0);
const WeightExpr lam = WeightExpr::symbol(1);

}  // namespace

TEST_SUITE("qfield") {

TEST_CASE("weight expressions are exact integer affine forms") {
    WeightExpr w = mu + lam * 2 - 3;
    CHECK(w.offset() == -3);
    CHECK(w.coeffs().at(0) == 1);
    CHECK(w.coeffs().at(1) == 2);
    CHECK(!w.is_constant());
    CHECK(w.max_symbol() == 1);
    CHECK(w.to_string() == "mu1 + 2*mu2 - 3");
    CHECK((mu - mu).is_constant());
    CHECK((mu - mu + 5).constant_value() == 5);
    CHECK(WeightExpr(0).to_string() == "0");
    CHECK((-w).offset() == 3);
    CHECK_THROWS(w.constant_value());
}

TEST_CASE("monomial order is total and compatible with multiplication") {
    LaurentMono a = mono(3, 1, 0), b = mono(-5, 1, 0), c = mono(7, 0, 2);
    CHECK(a > b);      // same t part, higher q
    CHECK(a > c);      // t1 beats t2 regardless of q
    CHECK(a * b == mono(-2, 2, 0));
    CHECK(a / b == mono(8, 0, 0));
    CHECK(a.inverse() * a == LaurentMono::one());
    LaurentMono shift = mono(2, -1, 4);
    CHECK((a > c) == (a * shift > c * shift));
}

TEST_CASE("polynomial ring axioms hold on random samples") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 60; ++iter) {
        LaurentPoly a = random_poly(rng, 8, 5, iter % 2 == 0);
        LaurentPoly b = random_poly(rng, 8, 5, iter % 3 == 0);
        LaurentPoly c = random_poly(rng, 6, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly::zero());
        CHECK(a * LaurentPoly::one() == a);
        CHECK(a + (-a) == LaurentPoly::zero());
        CHECK(strictly_descending(a * b));
        CHECK(strictly_descending(a + b));
    }
}

TEST_CASE("dense and hashed products agree") {
    std::mt19937 rng(7);
    // Unstructured random operands.
    for (int iter = 0; iter < 60; ++iter) {
        LaurentPoly a = random_nonzero(rng, 25, 8);
        LaurentPoly b = random_nonzero(rng, 25, 8);
        PolyAccumulator acc;
        acc.add_product(a, b);
        CHECK(a * b == acc.take());
    }
    // Parity-structured operands (bracket products), the shape that matters
    // for projector arithmetic.
    LaurentPoly p1 = LaurentPoly::one(), p2 = LaurentPoly::one();
    for (int i = 0; i < 5; ++i) {
        p1 = p1 * bracket(mu - i);
        p2 = p2 * bracket(lam - i);
    }
    PolyAccumulator acc;
    acc.add_product(p1, p2);
    CHECK(p1 * p2 == acc.take());
    CHECK(strictly_descending(p1 * p2));
}

TEST_CASE("oversized coefficients and exponent boxes fall back gracefully") {
    // Coefficients far beyond 64 bits.
    mpz_class big = 1;
    big <<= 100;
    LaurentPoly a = LaurentPoly::from_terms(
        {{mono(0), Rat(big)}, {mono(1, 1), Rat(big + 7)}, {mono(2, 0, 1), Rat(-3)}});
    LaurentPoly b = LaurentPoly::from_terms({{mono(0), Rat(big - 1)}, {mono(-1, 2), Rat(5)}});
    LaurentPoly prod = a * b;
    PolyAccumulator acc;
    acc.add_product(a, b);
    CHECK(prod == acc.take());
    CHECK(prod.leading().coeff == Rat(big + 7) * 5);  // t1^3 q^0 term

    // Exponent spread too wide for any sensible grid.
    LaurentPoly sparse1 =
        LaurentPoly::from_terms({{mono(0), Rat(1)}, {mono(2000000), Rat(1)}});
    LaurentPoly sparse2 =
        LaurentPoly::from_terms({{mono(0), Rat(1)}, {mono(1999999), Rat(-1)}});
    LaurentPoly sp = sparse1 * sparse2;
    CHECK(sp.size() == 4);
    CHECK(sp.leading().mono == mono(3999999));
    CHECK(strictly_descending(sp));
}

TEST_CASE("canonical split factors out the full unit") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 40; ++iter) {
        LaurentPoly p = random_nonzero(rng, 8, 5, false);
        auto [unit, core] = canonical_split(p);
        CHECK(core.scaled_shifted(unit.coeff, unit.mono) == p);
        CHECK(core.has_integer_coeffs());
        CHECK(core.leading().coeff > 0);
        mpz_class content = 0;
        int32_t min_q = core.terms()[0].mono.q_exp;
        for (const auto& t : core.terms()) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            min_q = std::min(min_q, t.mono.q_exp);
        }
        CHECK(content == 1);
        CHECK(min_q == 0);
        // Splitting a canonical polynomial is a no-op.
        auto [u2, core2] = canonical_split(core);
        CHECK(u2.coeff == 1);
        CHECK(u2.mono.is_one());
        CHECK(core2 == core);
    }
    auto [u, c] = canonical_split(LaurentPoly::monomial(mono(2, 1), Rat(-5, 3)));
    CHECK(c.is_one());
    CHECK(u.coeff == Rat(-5, 3));
    CHECK(u.mono == mono(2, 1));
    CHECK_THROWS_AS(canonical_split(LaurentPoly::zero()), DivisionByZeroError);
}

TEST_CASE("exact division inverts multiplication and rejects non-multiples") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        LaurentPoly p = random_poly(rng, 6, 4, iter % 2 == 0);
        LaurentPoly d = random_nonzero(rng, 4, 3);
        auto q = divide_exact(p * d, d);
        REQUIRE(q.has_value());
        CHECK(*q == p);
        if (!p.is_zero() && d.size() > 1) {
            // d | p·d + 1 would make d a unit, impossible with two terms.
            CHECK(!divide_exact(p * d + LaurentPoly::one(), d).has_value());
        }
    }
    // Structured case: clearing one bracket from a product of brackets.
    LaurentPoly prod = bracket(mu) * bracket(mu - 1) * bracket(mu + lam - 2);
    auto q = divide_exact(prod, bracket(mu - 1));
    REQUIRE(q.has_value());
    CHECK(*q == bracket(mu) * bracket(mu + lam - 2));
    CHECK(!divide_exact(prod, bracket(mu - 3)).has_value());
    CHECK(!divide_exact(bracket(mu), bracket(lam)).has_value());
    CHECK(divide_exact(LaurentPoly::zero(), bracket(mu)) == LaurentPoly::zero());
    CHECK_THROWS_AS(divide_exact(bracket(mu), LaurentPoly::zero()), DivisionByZeroError);
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(5);
    std::map<int, long> at{{0, 2}, {1, -3}};
    for (int iter = 0; iter < 30; ++iter) {
        LaurentPoly a = random_poly(rng, 8, 4, false);
        LaurentPoly b = random_poly(rng, 8, 4);
        CHECK((a + b).specialized(at) == a.specialized(at) + b.specialized(at));
        CHECK((a * b).specialized(at) == a.specialized(at) * b.specialized(at));
        CHECK(a.specialized(at).max_symbol() == -1);
    }
    // t1 -> q^2:  t1 q^{-1} - t1^{-1} q  becomes  q - q^{-1}.
    CHECK(bracket(mu - 1).specialized(at) == bracket(WeightExpr(1)));
    CHECK_THROWS_AS(bracket(mu).specialized({{1, 2}}), ConfigError);
}

TEST_CASE("brackets and quantum integers") {
    CHECK(bracket(WeightExpr(0)).is_zero());
    CHECK(bracket(mu) ==
          LaurentPoly::from_terms({{mono(0, 1), Rat(1)}, {mono(0, -1), Rat(-1)}}));
    CHECK(poly_q_int(0).is_zero());
    CHECK(poly_q_int(1).is_one());
    CHECK(poly_q_int(2) == LaurentPoly::from_terms({{mono(1), Rat(1)}, {mono(-1), Rat(1)}}));
    CHECK(poly_q_int(3) ==
          LaurentPoly::from_terms({{mono(2), Rat(1)}, {mono(0), Rat(1)}, {mono(-2), Rat(1)}}));
    CHECK(poly_q_int(-4) == -poly_q_int(4));
    for (long n = 1; n <= 12; ++n) {
        // [n] (q - q^{-1}) = q^n - q^{-n}
        CHECK(poly_q_int(n) * bracket(WeightExpr(1)) == bracket(WeightExpr(n)));
    }
    CHECK(q_factorial(0).is_one());
    CHECK(q_factorial(4) == poly_q_int(2) * poly_q_int(3) * poly_q_int(4));
    CHECK_THROWS_AS(q_factorial(-1), ConfigError);

    // Symbolic [w] is a genuine fraction with denominator q - q^{-1}.
    RationalFn qmu = q_int(mu);
    CHECK(!qmu.is_polynomial());
    CHECK(qmu * RationalFn::from_poly(bracket(WeightExpr(1))) ==
          RationalFn::from_poly(bracket(mu)));
    CHECK(q_int(WeightExpr(5)) == RationalFn::from_poly(poly_q_int(5)));
    CHECK(q_int(mu - mu).is_zero());
}

TEST_CASE("Gaussian binomials are polynomial and satisfy the recurrence") {
    for (int k = 0; k <= 9; ++k) {
        CHECK(q_binomial(k, 0).is_one());
        CHECK(q_binomial(k, k).is_one());
        for (int l = 0; l <= k; ++l) {
            RationalFn b = q_binomial(k, l);
            CHECK(b.is_polynomial());
            CHECK(b == q_binomial(k, k - l));
        }
        if (k >= 1) CHECK(q_binomial(k, 1) == q_int(WeightExpr(k)));
    }
    // binom(k+1, j) = q^{-k+j-1} binom(k, j-1) + q^{j} binom(k, j)
    for (int k = 1; k <= 12; ++k)
        for (int j = 1; j <= k; ++j)
            CHECK(q_binomial(k + 1, j) ==
                  q_pow(-k + j - 1) * q_binomial(k, j - 1) + q_pow(j) * q_binomial(k, j));
    CHECK_THROWS_AS(q_binomial(3, 4), ConfigError);
    CHECK_THROWS_AS(q_binomial(3, -1), ConfigError);
}

TEST_CASE("rational function field axioms") {
    std::mt19937 rng(4242);
    auto random_fn = [&rng]() {
        return RationalFn::from_ratio(random_poly(rng, 5, 3, false),
                                      random_nonzero(rng, 3, 2));
    };
    for (int iter = 0; iter < 25; ++iter) {
        RationalFn a = random_fn(), b = random_fn(), c = random_fn();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFn::zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RationalFn::one());
            CHECK(b / a * a == b);
        }
    }
    // Common factors do not affect value equality.
    LaurentPoly n = random_nonzero(rng, 4, 3), d = random_nonzero(rng, 3, 2);
    LaurentPoly extra = random_nonzero(rng, 3, 2);
    CHECK(RationalFn::from_ratio(n * extra, d * extra) == RationalFn::from_ratio(n, d));
    CHECK_THROWS_AS(RationalFn::one() / RationalFn::zero(), DivisionByZeroError);
}

TEST_CASE("denominator factor lists stay canonical") {
    RationalFn f = RationalFn::from_factored(bracket(mu).scaled(Rat(3, 2)),
                                             {bracket(mu + lam), bracket(mu + lam - 1)});
    REQUIRE(f.denominator_factors().size() == 2);
    for (const auto& fac : f.denominator_factors()) {
        auto [u, core] = canonical_split(fac);
        CHECK(u.coeff == 1);
        CHECK(u.mono.is_one());
    }
    // The monomial units of the given factors were folded into the numerator.
    CHECK(f == RationalFn::from_ratio(bracket(mu).scaled(Rat(3, 2)),
                                      bracket(mu + lam) * bracket(mu + lam - 1)));
    // from_factored cancels: (mu-bracket)^2 / mu-bracket collapses.
    RationalFn g = RationalFn::from_factored(bracket(mu) * bracket(mu), {bracket(mu)});
    CHECK(g.is_polynomial());
    CHECK(g == RationalFn::from_poly(bracket(mu)));
}

TEST_CASE("deferred sums of products match the naive fold") {
    std::mt19937 rng(777);
    auto random_fn = [&rng]() {
        return RationalFn::from_ratio(random_poly(rng, 4, 3),
                                      random_nonzero(rng, 2, 2));
    };
    for (int iter = 0; iter < 20; ++iter) {
        RationalSum sum;
        RationalFn naive = RationalFn::zero();
        for (int k = 0; k < 6; ++k) {
            RationalFn a = random_fn(), b = random_fn();
            sum.add_product(a, b);
            naive = naive + a * b;
        }
        CHECK(sum.take() == naive);
    }
}

TEST_CASE("univariate gcd supports specialization reduction") {
    LaurentPoly two = poly_q_int(2), three = poly_q_int(3);
    CHECK(gcd_q(two, three).is_one());
    LaurentPoly a = two * two * three, b = two * poly_q_int(5);
    LaurentPoly g = gcd_q(a, b);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
    CHECK(divide_exact(g, two).has_value());  // [2] is a common factor
    auto [u, core] = canonical_split(poly_q_int(7).scaled(Rat(6)));
    CHECK(gcd_q(poly_q_int(7).scaled(Rat(6)), poly_q_int(7)) == core);
}

TEST_CASE("rational function specialization reduces and reports poles") {
    std::map<int, long> at{{0, 3}};
    CHECK(specialize(q_int(mu), at) == q_int(WeightExpr(3)));
    // [mu] / [mu+1] at mu = -1 divides by [0] = 0.
    RationalFn f = q_int(mu) / q_int(mu + 1);
    CHECK_THROWS_AS(specialize(f, {{0, -1}}), PoleError);
    CHECK(specialize(f, {{0, 1}}) == q_int(WeightExpr(1)) / q_int(WeightExpr(2)));
    // The result is reduced: (q^2-q^{-2})/(q-q^{-1}) collapses to [2].
    RationalFn g = RationalFn::from_ratio(bracket(mu), bracket(WeightExpr(1)));
    RationalFn gs = specialize(g, {{0, 2}});
    CHECK(gs.is_polynomial());
    CHECK(gs == RationalFn::from_poly(poly_q_int(2)));
    CHECK_THROWS_AS(specialize(q_int(mu), {{1, 1}}), ConfigError);
}

}  // TEST_SUITE
