#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "plmorse/correspond.hpp"
#include "plmorse/rpbuild.hpp"

using namespace plmorse;

namespace {

const CorrespondenceEntry* find_entry(const CorrespondenceMap& map, Vertex v, int index) {
    for (const auto& e : map.entries)
        if (e.vertex == v && e.index == index) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("the projective plane pairing is bijective") {
    auto rp2 = fixtures::projective_plane();
    auto V = fixtures::rp2_expected_field();
    auto map = correspondence(rp2.K, rp2.f, V);

    REQUIRE(map.entries.size() == 3);
    CHECK(map.unmatched.empty());
    CHECK(map.bijective);

    auto* minimum = find_entry(map, 0, 0);
    REQUIRE(minimum != nullptr);
    CHECK(minimum->level == 1.0);
    CHECK(minimum->multiplicity == 1);
    REQUIRE(minimum->matched.size() == 1);
    CHECK(minimum->matched[0].first == Simplex({0}));
    CHECK(minimum->matched[0].second == 1.0);

    auto* saddle = find_entry(map, 3, 1);
    REQUIRE(saddle != nullptr);
    CHECK(saddle->matched[0].first == Simplex({1, 3}));
    CHECK(saddle->matched[0].second == 4.0);

    auto* maximum = find_entry(map, 5, 2);
    REQUIRE(maximum != nullptr);
    CHECK(maximum->matched[0].first == Simplex({2, 4, 5}));

    auto cert = verify_correspondence(map, true);
    CHECK(cert.clean);
    CHECK(cert.violations.empty());
}

TEST_CASE("a double saddle matches two simplices to one vertex") {
    auto monkey = fixtures::monkey_bipyramid();
    auto V = build_rp_gradient(monkey.K, monkey.f);
    auto map = correspondence(monkey.K, monkey.f, V);

    REQUIRE(map.entries.size() == 5);
    CHECK(map.unmatched.empty());
    CHECK_FALSE(map.bijective);

    auto* apex = find_entry(map, 6, 1);
    REQUIRE(apex != nullptr);
    CHECK(apex->multiplicity == 2);
    REQUIRE(apex->matched.size() == 2);
    CHECK(apex->matched[0].first == Simplex({2, 6}));
    CHECK(apex->matched[1].first == Simplex({4, 6}));
    CHECK(apex->matched[0].second == 10.0);

    for (Vertex v : {0, 2, 4}) {
        auto* entry = find_entry(map, v, 0);
        REQUIRE(entry != nullptr);
        CHECK(entry->multiplicity == 1);
        CHECK(entry->matched.size() == 1);
    }
    auto* top = find_entry(map, 7, 2);
    REQUIRE(top != nullptr);
    CHECK(top->matched[0].first == Simplex({3, 4, 7}));

    // The function is not PL Morse, so the map need not be bijective.
    CHECK(verify_correspondence(map, false).clean);
    CHECK_FALSE(verify_correspondence(map, true).clean);
}

TEST_CASE("removing a pair breaks the certificate") {
    auto rp2 = fixtures::projective_plane();
    auto pairs = fixtures::rp2_expected_field().pairs();
    std::erase(pairs, GradientPair{Simplex({2, 3}), Simplex({1, 2, 3})});
    REQUIRE(pairs.size() == 13);
    GradientField V(pairs);

    auto map = correspondence(rp2.K, rp2.f, V);
    CHECK_FALSE(map.bijective);

    // Vertex 3 now owns two critical edges but expects one.
    auto* saddle = find_entry(map, 3, 1);
    REQUIRE(saddle != nullptr);
    CHECK(saddle->multiplicity == 1);
    CHECK(saddle->matched.size() == 2);

    // The surplus triangle lands at an index where vertex 3 is not
    // critical at all.
    REQUIRE(map.unmatched.size() == 1);
    CHECK(map.unmatched[0] == Simplex({1, 2, 3}));

    auto cert = verify_correspondence(map, false);
    CHECK_FALSE(cert.clean);
    CHECK(cert.violations.size() >= 2);
}

TEST_CASE("a non relatively perfect field leaves orphans on both sides") {
    auto fan = fixtures::saddle_fan();
    auto map = correspondence(fan.K, fan.f, fixtures::fan_pictured_field());
    CHECK_FALSE(map.bijective);

    // The ring vertex of value 7 is PL regular yet carries a critical
    // vertex cell.
    REQUIRE(map.unmatched.size() == 1);
    CHECK(map.unmatched[0] == Simplex({5}));

    // The global minimum expects a cell and has none.
    auto* minimum = find_entry(map, 0, 0);
    REQUIRE(minimum != nullptr);
    CHECK(minimum->multiplicity == 1);
    CHECK(minimum->matched.empty());

    // The local minimum and saddle still line up.
    auto* second = find_entry(map, 2, 0);
    REQUIRE(second != nullptr);
    CHECK(second->matched.size() == 1);
    auto* saddle = find_entry(map, 3, 1);
    REQUIRE(saddle != nullptr);
    CHECK(saddle->matched[0].first == Simplex({2, 3}));

    auto cert = verify_correspondence(map, false);
    CHECK_FALSE(cert.clean);

    // The constructed field on the same input is clean.
    auto built = correspondence(fan.K, fan.f, build_rp_gradient(fan.K, fan.f));
    CHECK(built.bijective);
    CHECK(verify_correspondence(built, true).clean);
}

TEST_CASE("correspondence survives repeated values through the tiebreak") {
    auto tetra_maximal = fixtures::tetra_boundary().maximal;
    auto K = SimplicialComplex::from_maximal(tetra_maximal);
    auto f = VertexScalarField::from_dense({1, 1, 2, 2});
    auto V = build_rp_gradient(K, f);
    auto map = correspondence(K, f, V);
    CHECK(map.bijective);
    CHECK(verify_correspondence(map, is_pl_morse(K, f)).clean);
}
