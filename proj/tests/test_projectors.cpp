#include "doctest.h"

#include "vjw/error.hpp"
#include "vjw/projectors.hpp"
#include "vjw/qfield.hpp"

using namespace vjw;

namespace {

const WeightExpr mu = WeightExpr::symbol(0);
const WeightExpr lam = WeightExpr::symbol(1);

RationalFn q_weight(const WeightExpr& w) {
    return RationalFn::from_poly(LaurentPoly::monomial(LaurentMono::from_weight(w)));
}

IntertwinerBlocks as_intertwiner(const ProjectorBlocks& p) {
    return {p.factors, p.factors, p.blocks, p.cutoff};
}

}  // namespace

TEST_SUITE("projectors") {

TEST_CASE("one strand: the projector is the identity") {
    ProjectorBlocks p = jw(1);
    for (const auto& [k, m] : p.blocks) CHECK(m == BlockMatrix::identity(m.rows()));
    CHECK(p.blocks.size() == 2);  // degrees 0 and 1
}

TEST_CASE("two strands, explicit matrix") {
    ProjectorBlocks p = jw(2);
    LaurentPoly two = poly_q_int(2);
    const BlockMatrix& m = p.blocks.at(1);
    CHECK(m.at(0, 0) ==
          RationalFn::from_ratio(LaurentPoly::monomial(LaurentMono::q_power(-1)), two));
    CHECK(m.at(0, 1) == RationalFn::from_ratio(LaurentPoly::one(), two));
    CHECK(m.at(1, 0) == RationalFn::from_ratio(LaurentPoly::one(), two));
    CHECK(m.at(1, 1) ==
          RationalFn::from_ratio(LaurentPoly::monomial(LaurentMono::q_power(1)), two));
    CHECK(p.blocks.at(0) == BlockMatrix::identity(1));
    CHECK(p.blocks.at(2) == BlockMatrix::identity(1));
}

TEST_CASE("classical projectors are idempotent and kill every cap-cup") {
    for (int n = 1; n <= 4; ++n) {
        ProjectorBlocks p = jw(n);
        CHECK(verify_idempotent(p).empty());
        IntertwinerBlocks pp = as_intertwiner(p);
        for (int i = 1; i < n; ++i) {
            IntertwinerBlocks left = compose(tl_e(n, i), pp);
            IntertwinerBlocks right = compose(pp, tl_e(n, i));
            for (const auto& [k, m] : left.blocks) CHECK(m.is_zero());
            for (const auto& [k, m] : right.blocks) CHECK(m.is_zero());
        }
        CHECK(!p.provenance.empty());
    }
}

TEST_CASE("extended projector, first degree in closed form") {
    ProjectorBlocks p = extended_jw({mu, lam}, 1);
    CHECK(p.blocks.at(0) == BlockMatrix::identity(1));
    const BlockMatrix& m = p.blocks.at(1);
    RationalFn s = q_int(mu + lam);
    CHECK(m.at(0, 0) == q_weight(-mu) * q_int(lam) / s);
    CHECK(m.at(0, 1) == q_weight(lam - mu) * q_int(lam) / s);
    CHECK(m.at(1, 0) == q_int(mu) / s);
    CHECK(m.at(1, 1) == q_weight(lam) * q_int(mu) / s);
}

TEST_CASE("extended projectors are idempotent with trace-one blocks") {
    ProjectorBlocks p2 = extended_jw({mu, lam}, 4);
    CHECK(verify_idempotent(p2).empty());
    CHECK(check_trace_one(p2).empty());

    ProjectorBlocks p3 = extended_jw({mu, lam, WeightExpr::symbol(2)}, 3);
    CHECK(verify_idempotent(p3).empty());
    CHECK(check_trace_one(p3).empty());

    ProjectorBlocks p4 = extended_jw(
        {mu, lam, WeightExpr::symbol(2), WeightExpr::symbol(3)}, 2);
    CHECK(verify_idempotent(p4).empty());
    CHECK(check_trace_one(p4).empty());
    CHECK(!p4.provenance.empty());
}

TEST_CASE("the projector fixes unfused vectors and kills the e-kernel") {
    // P ∘ F = F and E ∘ P = E on the fused module, a direct consequence of
    // E F = Id that exercises the composition plumbing.
    IntertwinerBlocks f = f_family(mu, lam, 4), e = e_family(mu, lam, 4);
    ProjectorBlocks p = extended_jw({mu, lam}, 4);
    IntertwinerBlocks pp = as_intertwiner(p);
    IntertwinerBlocks pf = compose(pp, f);
    IntertwinerBlocks ep = compose(e, pp);
    for (int k = 0; k <= 4; ++k) {
        CHECK(pf.blocks.at(k) == f.blocks.at(k));
        CHECK(ep.blocks.at(k) == e.blocks.at(k));
    }
}

TEST_CASE("oracle reconstruction agrees with the closed form") {
    IntertwinerBlocks closed = f_family(mu, lam, 5);
    IntertwinerBlocks oracle = f_oracle(mu, lam, 5);
    for (int k = 0; k <= 5; ++k) CHECK(oracle.blocks.at(k) == closed.blocks.at(k));

    // Deeper pole-free integer specializations.
    IntertwinerBlocks c2 = f_family(WeightExpr(-1), WeightExpr(-2), 8);
    IntertwinerBlocks o2 = f_oracle(WeightExpr(-1), WeightExpr(-2), 8);
    for (int k = 0; k <= 8; ++k) CHECK(o2.blocks.at(k) == c2.blocks.at(k));
}

TEST_CASE("corrupted blocks are caught by both verifiers") {
    ProjectorBlocks p = extended_jw({mu, lam}, 3);
    p.blocks[2] = p.blocks[2].scaled(q_weight(WeightExpr(1)));
    Report idem = verify_idempotent(p);
    REQUIRE(!idem.empty());
    CHECK(idem[0].check == "idempotent");
    CHECK(idem[0].degree == 2);
    Report tr = check_trace_one(p);
    REQUIRE(!tr.empty());
    CHECK(tr[0].check == "trace");
    CHECK(tr[0].degree == 2);
}

TEST_CASE("specialization commutes with the construction") {
    std::map<int, long> at2{{0, -1}, {1, -2}};
    ProjectorBlocks sym2 = extended_jw({mu, lam}, 4);
    ProjectorBlocks num2 = extended_jw({WeightExpr(-1), WeightExpr(-2)}, 4);
    for (const auto& [k, m] : sym2.blocks) CHECK(m.specialized(at2) == num2.blocks.at(k));

    std::map<int, long> at3{{0, -2}, {1, -1}, {2, -3}};
    ProjectorBlocks sym3 = extended_jw({mu, lam, WeightExpr::symbol(2)}, 3);
    ProjectorBlocks num3 =
        extended_jw({WeightExpr(-2), WeightExpr(-1), WeightExpr(-3)}, 3);
    for (const auto& [k, m] : sym3.blocks) CHECK(m.specialized(at3) == num3.blocks.at(k));
}

TEST_CASE("invalid configurations are rejected") {
    CHECK_THROWS_AS(extended_jw({mu}, 3), ConfigError);
    CHECK_THROWS_AS(extended_jw({mu, lam}, -1), ConfigError);
    // Constant weights summing into the degree window pole out.
    CHECK_THROWS_AS(extended_jw({WeightExpr(2), WeightExpr(-1)}, 2), PoleError);
    CHECK_NOTHROW(extended_jw({WeightExpr(2), WeightExpr(-1)}, 1));
}

}  // TEST_SUITE
