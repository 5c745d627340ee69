#include <cstdint>
#include <optional>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "vext/errors.hpp"
#include "vext/vreal.hpp"

using namespace vext;

namespace {

// Independent pointwise oracle: select the branch by residue, evaluate raw.
std::optional<Rat> rat_at(const VirtualReal& a, std::int64_t i) {
    int j = static_cast<int>((i - 1) % a.period());
    return a.branch_func(j).eval_at(i);
}

VirtualReal cyc2(std::int64_t a, std::int64_t b) {
    return VirtualReal::cyclic({RatFunc(Rat(a)), RatFunc(Rat(b))});
}

VirtualReal ratio(Poly num, Poly den) {
    return VirtualReal::cyclic({RatFunc(std::move(num), std::move(den))});
}

// All branches converge to the same limit c.
VirtualReal with_limit(gen::Rng& rng, const Rat& c) {
    int period = static_cast<int>(rng.pick(1, 3));
    std::vector<RatFunc> branches;
    for (int j = 0; j < period; ++j) {
        Poly den = rng.nonzero_poly(3);
        while (den.degree() < 1) den = rng.nonzero_poly(3);
        RatFunc tail(rng.poly(den.degree() - 1), den);
        branches.push_back(add(RatFunc(c), tail, default_caps()));
    }
    return VirtualReal::cyclic(branches);
}

}  // namespace

TEST_CASE("arithmetic with infinite quantities matches pointwise sampling") {
    VirtualReal inf = VirtualReal::infinity();
    VirtualReal eps = VirtualReal::epsilon();
    VirtualReal one = VirtualReal::constant(1);

    VirtualReal succ = vr_add(inf, one);
    CHECK(succ.to_text() == "(n+1)/1");
    VirtualReal prod = vr_mul(inf, succ);
    CHECK(prod.to_text() == "(n^2+n)/1");
    CHECK(vr_mul(eps, inf) == one);
    CHECK(vr_mul(eps, inf).to_text() == "1");
    CHECK(vr_div(prod, inf) == succ);

    for (std::int64_t i = 40; i <= 60; ++i) {
        CHECK(*rat_at(succ, i) == Rat(i + 1));
        CHECK(*rat_at(prod, i) == Rat(i * i + i));
        CHECK(*rat_at(eps, i) * *rat_at(inf, i) == Rat(1));
    }

    VirtualReal square = vr_pow(vr_add(one, eps), 2);
    StandardPart sp = standard_part(square);
    REQUIRE(sp.status == StStatus::Defined);
    CHECK(*sp.value == Rat(1));
    for (std::int64_t i = 10; i <= 14; ++i)
        CHECK(*rat_at(square, i) == Rat(i + 1, i) * Rat(i + 1, i));

    CHECK(vr_pow(inf, 3) == vr_mul(inf, vr_mul(inf, inf)));
    CHECK(vr_pow(inf, -1) == eps);
}

TEST_CASE("sum, difference and product are pointwise eventually") {
    gen::Rng rng(88101);
    for (int trial = 0; trial < 200; ++trial) {
        VirtualReal a = rng.vreal();
        VirtualReal b = rng.vreal();
        VirtualReal s = vr_add(a, b);
        VirtualReal d = vr_sub(a, b);
        VirtualReal p = vr_mul(a, b);
        for (std::int64_t i = 37; i <= 40; ++i) {
            std::optional<Rat> xa = rat_at(a, i), xb = rat_at(b, i);
            if (!xa || !xb) continue;
            if (auto xs = rat_at(s, i)) CHECK(*xs == *xa + *xb);
            if (auto xd = rat_at(d, i)) CHECK(*xd == *xa - *xb);
            if (auto xp = rat_at(p, i)) CHECK(*xp == *xa * *xb);
        }
    }
}

TEST_CASE("division by a value with an identically zero branch is rejected") {
    VirtualReal one = VirtualReal::constant(1);
    CHECK_THROWS_AS(vr_div(one, cyc2(0, 1)), ZeroBranchDivisor);
    CHECK_THROWS_AS(vr_div(one, VirtualReal::constant(0)), ZeroBranchDivisor);
    CHECK_THROWS_AS(vr_pow(cyc2(0, 1), -1), ZeroBranchDivisor);

    CHECK(vr_div(one, VirtualReal::epsilon()) == VirtualReal::infinity());
    CHECK(vr_div(cyc2(2, -2), cyc2(1, -1)) == VirtualReal::constant(2));
}

TEST_CASE("nonzero values can multiply to zero") {
    VirtualReal a = cyc2(0, 1);
    VirtualReal b = cyc2(1, 0);
    VirtualReal zero = VirtualReal::constant(0);
    CHECK(vr_mul(a, b) == zero);
    // Distinct classes: each factor has a nonzero branch, so neither is zero,
    // yet pointwise comparison with zero is mixed because one branch agrees.
    CHECK_FALSE(a == zero);
    CHECK_FALSE(b == zero);
    CHECK(vr_eq(a, zero) == EventualTruth::Mixed);
    CHECK(vr_eq(b, zero) == EventualTruth::Mixed);
    CHECK(vr_ne(a, zero) == EventualTruth::Mixed);
    CHECK(vr_ne(b, zero) == EventualTruth::Mixed);
}

TEST_CASE("ring axioms hold under fuzzing") {
    gen::Rng rng(88102);
    VirtualReal zero = VirtualReal::constant(0);
    VirtualReal one = VirtualReal::constant(1);
    for (int trial = 0; trial < 300; ++trial) {
        VirtualReal a = rng.vreal();
        VirtualReal b = rng.vreal();
        VirtualReal c = rng.vreal();
        CHECK(vr_add(a, b) == vr_add(b, a));
        CHECK(vr_mul(a, b) == vr_mul(b, a));
        CHECK(vr_add(vr_add(a, b), c) == vr_add(a, vr_add(b, c)));
        CHECK(vr_mul(vr_mul(a, b), c) == vr_mul(a, vr_mul(b, c)));
        CHECK(vr_mul(a, vr_add(b, c)) == vr_add(vr_mul(a, b), vr_mul(a, c)));
        CHECK(vr_add(a, zero) == a);
        CHECK(vr_mul(a, one) == a);
        CHECK(vr_add(a, vr_neg(a)) == zero);
        CHECK(vr_sub(a, b) == vr_add(a, vr_neg(b)));
    }
}

TEST_CASE("eventual sign ignores transient behavior") {
    // Positive for small indices, negative for all large ones.
    RatFunc f(gen::poly_of({0, 0, 999, -2}), gen::poly_of({5, 1}));
    CHECK(f.eventual_sign() == Sign::negative);
    CHECK(*f.eval_at(100) > 0);
    CHECK(*f.eval_at(10000) < 0);
    CHECK(f.diverges());
    CHECK(!f.limit().has_value());

    VirtualReal v = VirtualReal::cyclic({f});
    CHECK(vr_lt(v, VirtualReal::constant(0)) == EventualTruth::EventuallyTrue);
    CHECK(classify(v) == NumClass::Infinite);
}

TEST_CASE("alternating sign values are incomparable with zero") {
    VirtualReal alt = cyc2(-1, 1);
    VirtualReal zero = VirtualReal::constant(0);

    CHECK(vr_le(alt, zero) == EventualTruth::Mixed);
    CHECK(vr_le(zero, alt) == EventualTruth::Mixed);
    CHECK(vr_lt(alt, zero) == EventualTruth::Mixed);
    CHECK(vr_gt(alt, zero) == EventualTruth::Mixed);
    CHECK(vr_eq(alt, zero) == EventualTruth::EventuallyFalse);
    CHECK(vr_ne(alt, zero) == EventualTruth::EventuallyTrue);

    std::vector<Sign> signs = vr_branch_signs(alt, zero);
    REQUIRE(signs.size() == 2);
    CHECK(signs[0] == Sign::negative);
    CHECK(signs[1] == Sign::positive);

    CHECK(vr_abs(alt) == VirtualReal::constant(1));
    CHECK(vr_sign(alt) == alt);
    CHECK(vr_sign(VirtualReal::epsilon()) == VirtualReal::constant(1));
    CHECK(vr_sign(vr_neg(VirtualReal::infinity())) == VirtualReal::constant(-1));
    CHECK(vr_pow(alt, 2) == VirtualReal::constant(1));
}

TEST_CASE("classification covers every magnitude class") {
    VirtualReal eps = VirtualReal::epsilon();
    CHECK(classify(VirtualReal::constant(0)) == NumClass::Zero);
    CHECK(classify(eps) == NumClass::Infinitesimal);
    CHECK(classify(vr_neg(eps)) == NumClass::Infinitesimal);
    CHECK(classify(VirtualReal::constant(7)) == NumClass::Finite);
    CHECK(classify(ratio(gen::poly_of({1, 1}), gen::poly_of({0, 1}))) == NumClass::Finite);
    CHECK(classify(VirtualReal::infinity()) == NumClass::Infinite);
    CHECK(classify(ratio(gen::poly_of({1, 0, 1}), gen::poly_of({0, 2}))) == NumClass::Infinite);
    CHECK(classify(VirtualReal::cyclic({RatFunc::index_reciprocal(), RatFunc::index()})) ==
          NumClass::Mixed);

    CHECK(num_class_name(NumClass::Zero) == "zero");
    CHECK(num_class_name(NumClass::Infinitesimal) == "infinitesimal");
    CHECK(num_class_name(NumClass::Finite) == "appreciable-finite");
    CHECK(num_class_name(NumClass::Infinite) == "infinite");
    CHECK(num_class_name(NumClass::Mixed) == "mixed");

    VirtualReal near_one = vr_add(VirtualReal::constant(1), vr_add(eps, vr_pow(eps, 2)));
    StandardPart sp = standard_part(near_one);
    REQUIRE(sp.status == StStatus::Defined);
    CHECK(*sp.value == Rat(1));
    CHECK(sp.describe() == "1 (exact)");
    CHECK(classify(vr_sub(near_one, VirtualReal::constant(1))) == NumClass::Infinitesimal);
}

TEST_CASE("standard part statuses and field behavior") {
    CHECK(standard_part(VirtualReal::infinity()).status == StStatus::InfiniteBranch);
    CHECK(standard_part(VirtualReal::infinity()).describe() == "undefined (infinite branch)");
    CHECK(standard_part(cyc2(1, 2)).status == StStatus::BranchesDisagree);
    CHECK(standard_part(cyc2(1, 2)).describe() == "undefined (branch limits disagree)");

    StandardPart sp = standard_part(ratio(gen::poly_of({1, 1}), gen::poly_of({0, 1})));
    REQUIRE(sp.status == StStatus::Defined);
    CHECK(*sp.value == Rat(1));

    gen::Rng rng(88103);
    for (int trial = 0; trial < 100; ++trial) {
        Rat ca = rng.rat(), cb = rng.rat();
        VirtualReal a = with_limit(rng, ca);
        VirtualReal b = with_limit(rng, cb);
        StandardPart ssum = standard_part(vr_add(a, b));
        StandardPart sprod = standard_part(vr_mul(a, b));
        StandardPart sneg = standard_part(vr_neg(a));
        REQUIRE(ssum.status == StStatus::Defined);
        REQUIRE(sprod.status == StStatus::Defined);
        REQUIRE(sneg.status == StStatus::Defined);
        CHECK(*ssum.value == ca + cb);
        CHECK(*sprod.value == ca * cb);
        CHECK(*sneg.value == -ca);
    }
}

TEST_CASE("comparison is a partial order that is not total") {
    gen::Rng rng(88104);
    for (int trial = 0; trial < 200; ++trial) {
        VirtualReal a = rng.vreal();
        CHECK(vr_le(a, a) == EventualTruth::EventuallyTrue);
        CHECK(vr_ge(a, a) == EventualTruth::EventuallyTrue);
        CHECK(vr_eq(a, a) == EventualTruth::EventuallyTrue);
        CHECK(vr_lt(a, a) == EventualTruth::EventuallyFalse);
    }

    for (int trial = 0; trial < 120; ++trial) {
        VirtualReal a = rng.vreal();
        VirtualReal d1 = rng.vreal(3, 3);
        VirtualReal d2 = rng.vreal(3, 3);
        // Squares are eventually nonnegative on every branch.
        VirtualReal b = vr_add(a, vr_pow(d1, 2));
        VirtualReal c = vr_add(b, vr_pow(d2, 2));
        CHECK(vr_le(a, b) == EventualTruth::EventuallyTrue);
        CHECK(vr_le(b, c) == EventualTruth::EventuallyTrue);
        CHECK(vr_le(a, c) == EventualTruth::EventuallyTrue);
    }

    int antisymmetric_hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        VirtualReal a = rng.vreal();
        VirtualReal b = (trial % 4 == 0) ? a : rng.vreal();
        bool le_ab = vr_le(a, b) == EventualTruth::EventuallyTrue;
        bool le_ba = vr_le(b, a) == EventualTruth::EventuallyTrue;
        if (le_ab && le_ba) {
            ++antisymmetric_hits;
            CHECK(vr_eq(a, b) == EventualTruth::EventuallyTrue);
            CHECK(a == b);
        }
    }
    CHECK(antisymmetric_hits >= 50);

    // Neither order holds between the rotations of a two-branch value.
    VirtualReal p = cyc2(0, 1);
    VirtualReal q = cyc2(1, 0);
    CHECK(vr_lt(p, q) == EventualTruth::Mixed);
    CHECK(vr_gt(p, q) == EventualTruth::Mixed);
    CHECK(vr_eq(p, q) == EventualTruth::EventuallyFalse);
}

TEST_CASE("the infinitesimal separates zero from every positive rational") {
    VirtualReal eps = VirtualReal::epsilon();
    VirtualReal inf = VirtualReal::infinity();
    CHECK(vr_gt(eps, VirtualReal::constant(0)) == EventualTruth::EventuallyTrue);

    gen::Rng rng(88105);
    for (int trial = 0; trial < 100; ++trial) {
        Rat q = rng.positive_rat(1000000000, 1000000);
        CHECK(vr_lt(eps, VirtualReal::constant(q)) == EventualTruth::EventuallyTrue);
    }
    for (int trial = 0; trial < 100; ++trial) {
        Rat x(rng.pick(-1000000000000LL, 1000000000000LL), rng.pick(1, 1000));
        CHECK(vr_lt(VirtualReal::constant(x), inf) == EventualTruth::EventuallyTrue);
    }
}

TEST_CASE("integer membership is decided only on safe branches") {
    CHECK(is_virtual_integer(VirtualReal::infinity()));
    CHECK(is_virtual_integer(VirtualReal::constant(7)));
    CHECK(is_virtual_integer(vr_add(VirtualReal::infinity(), VirtualReal::constant(3))));
    CHECK_FALSE(is_virtual_integer(VirtualReal::constant(Rat(1, 2))));
    CHECK_FALSE(is_virtual_integer(
        VirtualReal::cyclic({RatFunc(Rat(7)), RatFunc(Rat(1, 2))})));

    // n^2 + n is always even, but the quotient form is not in the safe fragment.
    CHECK_THROWS_AS(
        is_virtual_integer(ratio(gen::poly_of({0, 1, 1}), gen::poly_of({2}))),
        UndecidableMembership);
    CHECK_THROWS_AS(is_virtual_integer(VirtualReal::epsilon()), UndecidableMembership);
}
