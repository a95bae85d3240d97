#include <doctest.h>

#include <unordered_set>

#include "rackcollapse/rack.hpp"
#include "rackcollapse/ree_small.hpp"

using namespace rackcollapse;

namespace {

size_t oracle_order(const std::vector<Perm>& gens, size_t degree) {
    std::unordered_set<Perm, PermHash> seen{Perm::identity(degree)};
    std::vector<Perm> queue{Perm::identity(degree)};
    for (size_t k = 0; k < queue.size(); ++k)
        for (const Perm& g : gens) {
            Perm y = compose(g, queue[k]);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    return seen.size();
}

} // namespace

TEST_CASE("projective line groups") {
    PermGroup psl8 = build_psl2(8);
    CHECK(psl8.degree() == 9);
    CHECK(psl8.order() == 504);
    CHECK(oracle_order(psl8.generators(), 9) == 504);

    CHECK(build_psl2(2).order() == 6);
    CHECK(build_psl2(5).order() == 60);
    CHECK(build_psl2(4).order() == 60);
    CHECK(build_psl2(9).order() == 360);
    CHECK_THROWS_AS(build_psl2(7), std::invalid_argument);
    CHECK_THROWS_AS(build_psl2(33), std::invalid_argument);
}

TEST_CASE("smallest ree group of type G2") {
    ReeG23 ree = build_2g2_3();
    const PermGroup& G = ree.group;
    CHECK(G.degree() == 9);
    CHECK(G.order() == 1512);
    CHECK(element_order(ree.phi) == 3);

    // PSL2(8) sits inside with index 3
    CHECK(ree.psl2_8.order() == 504);
    for (const Perm& g : ree.psl2_8.generators()) CHECK(G.contains(g));
    CHECK_FALSE(ree.psl2_8.contains(ree.phi));

    CHECK(centralizer(G, ree.phi).order() == 18);
    CHECK_FALSE(is_real(G, ree.phi));
}

TEST_CASE("borel subgroup and its extension") {
    ReeG23 ree = build_2g2_3();
    CHECK(ree.borel_b1.order() == 56);
    CHECK(ree.borel_ext.order() == 168);
    CHECK(ree.borel_ext.contains(ree.phi));
    CHECK(ree.borel_b1.contains(ree.u11));
    CHECK(element_order(ree.u11) == 2);

    // orbit of phi under B1:<phi> has |B1|/2 elements
    const ClassOrbit orbit = conj_orbit(ree.phi, ree.borel_ext.generators());
    CHECK(orbit.size() == 28);

    // C_{B1}(phi) = <u11>
    std::vector<Perm> cent;
    for (const Perm& x : ree.borel_b1.elements())
        if (compose(x, ree.phi) == compose(ree.phi, x)) cent.push_back(x);
    CHECK(cent.size() == 2);
    CHECK((cent[0] == ree.u11 || cent[1] == ree.u11));
}

TEST_CASE("order 3 classes") {
    ReeG23 ree = build_2g2_3();
    const PermGroup& G = ree.group;
    std::vector<const ClassOrbit*> order3;
    const auto classes = conjugacy_classes(G);
    for (const ClassOrbit& c : classes)
        if (element_order(c.representative) == 3) order3.push_back(&c);
    REQUIRE(order3.size() == 3);

    unsigned real = 0;
    std::vector<const ClassOrbit*> nonreal;
    for (const ClassOrbit* c : order3) {
        if (c->contains(c->representative.inverse())) ++real;
        else nonreal.push_back(c);
    }
    CHECK(real == 1);
    REQUIRE(nonreal.size() == 2);
    CHECK(nonreal[0]->contains(nonreal[1]->representative.inverse()));
    CHECK(nonreal[1]->contains(nonreal[0]->representative.inverse()));
}

TEST_CASE("the three phi cosets in the centralizer") {
    ReeG23 ree = build_2g2_3();
    const ClassOrbit orbit = conj_orbit(ree.phi, ree.group.generators());
    PermGroup C = centralizer(ree.group, ree.phi);
    std::vector<Perm> inter;
    for (const Perm& x : C.elements())
        if (orbit.contains(x)) inter.push_back(x);
    CHECK(inter.size() == 3);
    CHECK(is_commuting_set(inter));
}
