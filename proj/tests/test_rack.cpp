#include <doctest.h>

#include "rackcollapse/rack.hpp"
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

PermGroup s3() { return PermGroup::from_generators({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}, 3); }

} // namespace

TEST_CASE("conjugation racks") {
    PermGroup g = s3();
    ConjClassRack transpositions = conj_rack(g, cycle(3, {0, 1}));
    CHECK(transpositions.size() == 3);
    CHECK(transpositions.has_table());

    // singleton rack for a central element
    const Perm six = cycle(6, {0, 1, 2, 3, 4, 5});
    PermGroup c6 = PermGroup::from_generators({six}, 6);
    ConjClassRack central = conj_rack(c6, compose(six, six));
    CHECK(central.size() == 1);
    CHECK(check_axioms(central, 10, 1).pass);

    CHECK_THROWS_AS(conj_rack(g, cycle(4, {0, 1})), std::invalid_argument);
}

TEST_CASE("axioms pass on real classes and fail on corrupted tables") {
    PermGroup g = s3();
    ConjClassRack rack = conj_rack(g, cycle(3, {0, 1}));
    const AxiomReport rep = check_axioms(rack, 1000, 7);
    CHECK(rep.pass);
    CHECK(rep.exhaustive);
    CHECK(rep.indecomposable.has_value());
    CHECK(*rep.indecomposable);  // transpositions generate S3

    // dihedral table of the transposition rack, then corrupt one entry
    std::vector<std::vector<uint32_t>> table(3, std::vector<uint32_t>(3));
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j) table[i][j] = rack.op_index(i, j);
    CHECK(check_axioms_table(table, 1000, 7).pass);

    auto corrupted = table;
    corrupted[0][1] = corrupted[0][2];  // breaks bijectivity of x0 > .
    const AxiomReport bad = check_axioms_table(corrupted, 1000, 7);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.violation.has_value());

    auto out_of_range = table;
    out_of_range[1][1] = 99;
    const AxiomReport closure_fail = check_axioms_table(out_of_range, 1000, 7);
    CHECK_FALSE(closure_fail.pass);
    CHECK(closure_fail.violation->axiom == "closure");

    // self-distributive failure with intact rows: one 3-cycle row, two
    // identity rows (x=y=z=0 already violates).
    const std::vector<std::vector<uint32_t>> twisted{{1, 2, 0}, {0, 1, 2}, {0, 1, 2}};
    const AxiomReport sd = check_axioms_table(twisted, 1000, 7);
    CHECK_FALSE(sd.pass);
    CHECK(sd.violation->axiom == "self-distributivity");
}

TEST_CASE("axioms exhaustively on every class of a small group") {
    PermGroup g = s3();
    for (const ClassOrbit& c : conjugacy_classes(g)) {
        ConjClassRack rack(g, c);
        const AxiomReport rep = check_axioms(rack, 0, 1);
        CHECK(rep.pass);
        CHECK(rep.exhaustive);
    }
}

TEST_CASE("large classes fall back to sampling") {
    SzContext sz(1);
    const FieldCtx& f = sz.field();
    ConjClassRack rack = conj_rack(sz.group(), sz.u_perm(f.zero(), f.one()));
    CHECK(rack.size() == 455);
    CHECK(rack.has_table());  // 455 < 512

    // order-5 class has 5824 elements: no table, sampled triples
    Perm order5;
    for (const ClassOrbit& c : conjugacy_classes(sz.group()))
        if (element_order(c.representative) == 5) order5 = c.representative;
    REQUIRE(order5.degree() == 65);
    ConjClassRack big = conj_rack(sz.group(), order5);
    CHECK(big.size() == 5824);
    CHECK_FALSE(big.has_table());
    const AxiomReport rep = check_axioms(big, 2000, 42);
    CHECK(rep.pass);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.triples_checked == 2000);
}

TEST_CASE("commuting sets") {
    PermGroup g = s3();
    CHECK(is_commuting_set({}));
    CHECK(is_commuting_set({cycle(3, {0, 1, 2}), cycle(3, {0, 2, 1})}));
    CHECK_FALSE(is_commuting_set({cycle(3, {0, 1}), cycle(3, {0, 2})}));
}
