#include "tdc/coloring.hpp"
#include "tdc/families.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tdc;

TEST_CASE("coloring class round trip") {
    Coloring c = Coloring::from_classes(4, {{0, 3}, {1}, {2}});
    CHECK(c.num_classes == 3);
    CHECK(c.class_of == std::vector<int>{0, 1, 2, 0});
    CHECK(c.classes() == std::vector<std::vector<int>>{{0, 3}, {1}, {2}});
    CHECK_THROWS(Coloring::from_classes(3, {{0, 1}})); // vertex 2 uncovered
    CHECK_THROWS(Coloring::from_classes(3, {{0, 1}, {1, 2}})); // duplicate
}

TEST_CASE("is_proper") {
    Graph c4 = generate({Family::Cycle, 4});
    CHECK(is_proper(c4, Coloring::from_classes(4, {{0, 2}, {1, 3}})));

    std::string reason;
    CHECK_FALSE(is_proper(c4, Coloring::from_classes(4, {{0, 1}, {2, 3}}), &reason));
    CHECK_FALSE(reason.empty());
}

TEST_CASE("two-coloring of an even cycle of length four is total dominator") {
    // C4 is complete bipartite, the one case where two classes suffice
    Graph c4 = generate({Family::Cycle, 4});
    auto res = is_tdc(c4, Coloring::from_classes(4, {{0, 2}, {1, 3}}));
    REQUIRE(std::holds_alternative<TdcCertificate>(res));
    const auto& cert = std::get<TdcCertificate>(res);
    CHECK(validate_tdc_certificate(c4, cert));
}

TEST_CASE("proper coloring that dominates nothing is rejected") {
    // in C6 with three antipodal classes, no vertex sees all of any class
    Graph c6 = generate({Family::Cycle, 6});
    auto res = is_tdc(c6, Coloring::from_classes(6, {{0, 3}, {1, 4}, {2, 5}}));
    REQUIRE(std::holds_alternative<TdcViolation>(res));
    CHECK(std::get<TdcViolation>(res).vertex >= 0);
}

TEST_CASE("tdc is undefined with an isolated vertex") {
    GraphBuilder b(3);
    b.add_edge(0, 1);
    Graph g = b.build();
    CHECK_THROWS(is_tdc(g, Coloring::from_classes(3, {{0, 2}, {1}})));
}

TEST_CASE("is_total_dominating") {
    Graph p4 = generate({Family::Path, 4});
    CHECK(is_total_dominating(p4, {1, 2}));
    CHECK_FALSE(is_total_dominating(p4, {0, 1})); // vertex 3 uncovered
    CHECK_FALSE(is_total_dominating(p4, {1}));    // vertex 1 itself uncovered
}

TEST_CASE("common neighborhood") {
    Graph p4 = generate({Family::Path, 4});
    CHECK(common_neighborhood(p4, {1}) == std::vector<int>{0, 2});
    CHECK(common_neighborhood(p4, {0, 3}).empty());
    CHECK(common_neighborhood(p4, {0, 2}) == std::vector<int>{1});
    CHECK_THROWS(common_neighborhood(p4, {}));
}

TEST_CASE("private neighbors on a path") {
    Graph p4 = generate({Family::Path, 4});
    Coloring c = Coloring::from_classes(4, {{0, 3}, {1}, {2}});
    // class {1} dominates exactly 0 and 2, and neither is dominated by any
    // other class, so both are private
    CHECK(private_neighbors(p4, c, 1) == std::vector<int>{0, 2});
    CHECK(private_neighbors(p4, c, 2) == std::vector<int>{1, 3});
    CHECK(private_neighbors(p4, c, 0).empty());
}

TEST_CASE("certificate validation catches tampering") {
    Graph c4 = generate({Family::Cycle, 4});
    auto res = is_tdc(c4, Coloring::from_classes(4, {{0, 2}, {1, 3}}));
    auto cert = std::get<TdcCertificate>(res);
    CHECK(validate_tdc_certificate(c4, cert));

    TdcCertificate bad = cert;
    bad.witness[0] = cert.coloring.class_of[0]; // own class, not a neighbor set
    std::string reason;
    CHECK_FALSE(validate_tdc_certificate(c4, bad, &reason));
    CHECK_FALSE(reason.empty());
}
