#include <doctest.h>

#include "rackcollapse/nichols.hpp"
#include "rackcollapse/ree_small.hpp"
#include "rackcollapse/suzuki.hpp"

using namespace rackcollapse;

namespace {

Perm cycle(size_t n, std::initializer_list<uint16_t> pts) {
    Perm p = Perm::identity(n);
    auto it = pts.begin();
    for (; it != pts.end(); ++it) {
        auto next = std::next(it);
        p.img[*it] = next == pts.end() ? *pts.begin() : *next;
    }
    return p;
}

} // namespace

TEST_CASE("exact roots of unity") {
    CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
    CHECK(RootOfUnity(4, 0).is_one());
    CHECK(RootOfUnity(2, 1).is_minus_one());
    CHECK(RootOfUnity(3, 2).is_primitive_cube_root());
    CHECK_FALSE(RootOfUnity(6, 1).is_primitive_cube_root());

    const RootOfUnity w(3, 1);
    CHECK((w * w) == RootOfUnity(3, 2));
    CHECK((w * w.inverse()).is_one());
    CHECK((w * RootOfUnity(2, 1)) == RootOfUnity(6, 5));
    CHECK(w.pow(3).is_one());
    CHECK(w.pow(2) == RootOfUnity(3, 2));
    CHECK_THROWS_AS(RootOfUnity(0, 0), std::invalid_argument);
}

TEST_CASE("cyclic decompositions") {
    // C6 as a single 6-cycle
    PermGroup c6 = PermGroup::from_generators({cycle(6, {0, 1, 2, 3, 4, 5})}, 6);
    const auto f6 = cyclic_decomposition(c6);
    REQUIRE(f6.size() == 1);
    CHECK(f6[0].order == 6);

    // Z(U^-) of the GF(8) Suzuki group: three factors of order 2
    SzContext sz(1);
    const FieldCtx& f = sz.field();
    std::vector<Perm> zu;
    for (unsigned i = 0; i < 3; ++i) zu.push_back(sz.u_perm(f.zero(), f.from_value(1u << i)));
    const auto fz = cyclic_decomposition(PermGroup::from_generators(zu, 65));
    CHECK(fz.size() == 3);
    for (const CyclicFactor& fac : fz) CHECK(fac.order == 2);

    // C4 x C2 decomposes with orders multiplying to 8
    PermGroup c4c2 = PermGroup::from_generators({cycle(6, {0, 1, 2, 3}), cycle(6, {4, 5})}, 6);
    const auto f42 = cyclic_decomposition(c4c2);
    REQUIRE(f42.size() == 2);
    CHECK(f42[0].order * f42[1].order == 8);
    CHECK(std::max(f42[0].order, f42[1].order) == 4);

    PermGroup s3 = PermGroup::from_generators({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3);
    CHECK_THROWS_AS(cyclic_decomposition(s3), std::invalid_argument);
}

TEST_CASE("character tables") {
    SzContext sz(1);
    const FieldCtx& f = sz.field();
    std::vector<Perm> zu;
    for (unsigned i = 0; i < 3; ++i) zu.push_back(sz.u_perm(f.zero(), f.from_value(1u << i)));
    AbelianData A(PermGroup::from_generators(zu, 65));

    const std::vector<Character> chars = characters(A);
    REQUIRE(chars.size() == 8);
    CHECK(chars[0].is_trivial());

    // values are +-1 and characters are pairwise distinct as functions
    const std::vector<Perm> elems = A.group().elements();
    std::vector<std::vector<uint64_t>> tables;
    for (const Character& chi : chars) {
        std::vector<uint64_t> row;
        for (const Perm& x : elems) {
            const RootOfUnity v = chi(x);
            CHECK((v.is_one() || v.is_minus_one()));
            row.push_back(v.order() * 10 + v.exponent());
        }
        CHECK(std::find(tables.begin(), tables.end(), row) == tables.end());
        tables.push_back(std::move(row));
        for (const Perm& x : elems)
            for (const Perm& y : elems) CHECK(chi(compose(x, y)) == chi(x) * chi(y));
    }
}

TEST_CASE("braiding matrices over the suzuki involution subrack") {
    SzContext sz(1);
    const FieldCtx& f = sz.field();
    PermGroup H = sz.subgroup_T_ZU();
    const Perm g = sz.u_perm(f.zero(), f.one());
    std::vector<Perm> zu;
    for (unsigned i = 0; i < 3; ++i) zu.push_back(sz.u_perm(f.zero(), f.from_value(1u << i)));
    AbelianData A(PermGroup::from_generators(zu, 65));

    const std::vector<Character> chars = characters(A);
    // trivial character: all-ones matrix, verdict R1
    const BraidingMatrix b0 = braiding(H, g, A, chars[0]);
    CHECK(b0.size == 7);
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) CHECK(b0.at(i, j).is_one());
    const Verdict v0 = verdict(b0);
    CHECK(v0.infinite);
    CHECK(v0.rule == "R1");

    // all characters: q_ii = chi(g) and the matrix matches the direct
    // formula q_ij = chi(U(0, phi(k_j k_i^-1))) under the torus
    // parametrization x_i = U(0, phi(k_i)^-1)
    auto phi_preimage = [&](FieldElem c) {
        for (uint32_t v = 1; v < f.q(); ++v)
            if (phi(f.from_value(v)) == c) return f.from_value(v);
        throw std::logic_error("phi preimage missing");
    };
    std::vector<FieldElem> k_of;
    {
        const BraidingMatrix probe = braiding(H, g, A, chars[0]);
        for (const Perm& x : probe.subrack) {
            FieldElem c = f.zero();
            for (uint32_t b = 1; b < f.q(); ++b)
                if (sz.u_perm(f.zero(), f.from_value(b)) == x) c = f.from_value(b);
            REQUIRE(!c.is_zero());
            k_of.push_back(phi_preimage(inv(c)));
        }
    }
    for (const Character& chi : chars) {
        const BraidingMatrix B = braiding(H, g, A, chi);
        REQUIRE(B.size == 7);
        for (size_t i = 0; i < 7; ++i) CHECK(B.at(i, i) == chi(g));
        for (size_t i = 0; i < 7; ++i)
            for (size_t j = 0; j < 7; ++j) {
                const FieldElem ratio = k_of[j] * inv(k_of[i]);
                CHECK(B.at(i, j) == chi(sz.u_perm(f.zero(), phi(ratio))));
            }
        const Verdict v = verdict(B);
        CHECK(v.infinite);
        if (chi(g).is_minus_one()) {
            CHECK(v.rule == "R2");
            // re-check the witness cycle against the matrix
            REQUIRE(v.witness.size() >= 3);
            for (size_t i = 0; i < v.witness.size(); ++i) {
                const uint32_t a = v.witness[i];
                const uint32_t b = v.witness[(i + 1) % v.witness.size()];
                CHECK((B.at(a, b) * B.at(b, a)).is_minus_one());
            }
        } else {
            CHECK(v.rule == "R1");
        }
    }

    // transversal independence: multiplying each conjugator by a central
    // element keeps every braiding entry identical
    const ClassOrbit orbit = conj_orbit(g, H.generators());
    std::vector<Perm> alt;
    for (size_t i = 0; i < orbit.size(); ++i)
        if (A.contains(orbit.elements[i]))
            alt.push_back(i == 0 ? orbit.conjugators[i]
                                 : compose(orbit.conjugators[i], sz.u_perm(f.zero(), f.one())));
    for (const Character& chi : chars) {
        const BraidingMatrix B1 = braiding(H, g, A, chi);
        const BraidingMatrix B2 = braiding(H, g, A, chi, 2000000, &alt);
        REQUIRE(B1.size == B2.size);
        CHECK(B1.subrack == B2.subrack);
        for (size_t i = 0; i < B1.size; ++i)
            for (size_t j = 0; j < B1.size; ++j) CHECK(B1.at(i, j) == B2.at(i, j));
    }
}

TEST_CASE("closure violations are refused") {
    // G = S4, g = (01), A = <(01),(23)>: the transversal element (02)
    // drags g to (12), which is outside A, so the character cannot be
    // evaluated there.
    PermGroup s4 = PermGroup::from_generators({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1})}, 4);
    const Perm g = cycle(4, {0, 1});
    AbelianData A(PermGroup::from_generators({cycle(4, {0, 1}), cycle(4, {2, 3})}, 4));
    const std::vector<Character> chars = characters(A);
    const std::vector<Perm> transversal{Perm::identity(4), cycle(4, {0, 2})};
    CHECK_THROWS_AS(braiding(s4, g, A, chars[1], 2000000, &transversal), ClosureViolation);
}

TEST_CASE("generalized dynkin diagrams and verdicts") {
    // all-ones 2x2: no edges, R1
    BraidingMatrix ones;
    ones.size = 2;
    ones.q.assign(4, RootOfUnity::one());
    CHECK(gdd(ones).edges.empty());
    CHECK(verdict(ones).rule == "R1");

    // 2x2 with q01*q10 = 1: two isolated vertices
    BraidingMatrix iso;
    iso.size = 2;
    iso.q = {RootOfUnity::minus_one(), RootOfUnity(4, 1), RootOfUnity(4, 3), RootOfUnity::minus_one()};
    CHECK(gdd(iso).edges.empty());
    // diagonal -1 but no cycle: Unknown
    CHECK_FALSE(verdict(iso).infinite);
    CHECK(verdict(iso).rule.empty());

    // omega triangle (every entry w, edge labels w^2): R3
    const RootOfUnity w(3, 1), w2(3, 2);
    BraidingMatrix tri;
    tri.size = 3;
    tri.q.assign(9, w);
    const Gdd tg = gdd(tri);
    CHECK(tg.edges.size() == 3);
    for (const GddEdge& e : tg.edges) CHECK(e.label == w2);
    const Verdict tv = verdict(tri);
    CHECK(tv.infinite);
    CHECK(tv.rule == "R3");

    // verdict invariant under simultaneous index permutation
    BraidingMatrix perm3;
    perm3.size = 3;
    perm3.q.assign(9, RootOfUnity::one());
    const uint32_t shuffle[3] = {2, 0, 1};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) perm3.q[3 * shuffle[i] + shuffle[j]] = tri.at(i, j);
    const Verdict pv = verdict(perm3);
    CHECK(pv.infinite);
    CHECK(pv.rule == tv.rule);
}

TEST_CASE("real odd-order rule") {
    SzContext sz(0);
    const PermGroup& G = sz.group();
    for (const ClassOrbit& c : conjugacy_classes(G)) {
        const uint64_t ord = element_order(c.representative);
        const bool expect = ord == 5;  // the only odd order > 1 in this group
        CHECK(az_real_odd(G, c.representative) == expect);
    }
    ReeG23 ree = build_2g2_3();
    CHECK_FALSE(az_real_odd(ree.group, ree.phi));  // order 3 but not real
}

TEST_CASE("braiding analysis of the T Z(U^-) involution class") {
    const InvolutionBraidingReport rep = involution_braiding_analysis(1);
    CHECK(rep.span_contains_one);
    CHECK(rep.all_infinite);
    REQUIRE(rep.per_character.size() == 8);
    for (const CharacterVerdict& cv : rep.per_character) {
        const bool trivial =
            std::all_of(cv.exponents.begin(), cv.exponents.end(), [](uint32_t e) { return e == 0; });
        if (trivial) CHECK(cv.v.rule == "R1");
        else if (cv.chi_g.is_minus_one()) CHECK(cv.v.rule == "R2");
        else CHECK(cv.v.rule == "R1");
    }
    const InvolutionBraidingReport span32 = involution_braiding_analysis(2);
    CHECK(span32.span_contains_one);
    CHECK(span32.per_character.empty());
}

TEST_CASE("braiding analysis of the phi class") {
    const FrobeniusBraidingReport rep = frobenius_braiding_analysis();
    CHECK(rep.centralizer_order == 18);
    CHECK(rep.subrack_size == 3);
    CHECK(rep.subrack_commutes);
    CHECK(rep.cyclic_conjugator_found);
    CHECK(rep.transversal_independent);
    CHECK(rep.all_infinite);
    REQUIRE(rep.per_character.size() == 9);
    unsigned r1 = 0, r3 = 0;
    for (const CharacterVerdict& cv : rep.per_character) {
        if (cv.v.rule == "R1") ++r1;
        if (cv.v.rule == "R3") ++r3;
        CHECK((cv.chi_g.is_one() ? cv.v.rule == "R1" : cv.v.rule == "R3"));
    }
    CHECK(r1 == 3);
    CHECK(r3 == 6);
}
