#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "transit/generators.hpp"
#include "transit/recognizers.hpp"

using namespace transit;

namespace {

Graph two_triangles_block() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("find_induced_pattern") {
    SECTION("the house is its own smallest occurrence") {
        auto occ = find_induced_pattern(house_graph(), PatternId::house);
        REQUIRE(occ.has_value());
        CHECK(occ->vertices == std::vector<int>{0, 1, 2, 3, 4});
    }
    SECTION("C6 is a hole") {
        auto occ = find_induced_pattern(cycle_graph(6), PatternId::hole);
        REQUIRE(occ.has_value());
        CHECK(occ->vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
        CHECK(occurrence_matches(cycle_graph(6), *occ));
    }
    SECTION("the domino has no hole but two isometric squares") {
        Graph d = domino_graph();
        CHECK_FALSE(find_induced_pattern(d, PatternId::hole).has_value());
        auto occ = find_induced_pattern(d, PatternId::isometric_hole);
        REQUIRE(occ.has_value());
        CHECK(occ->vertices == std::vector<int>{0, 1, 2, 5});  // first square in cycle order
        CHECK(occurrence_matches(d, *occ));
    }
    SECTION("house inside a larger host") {
        Graph g = house_graph();
        Graph host(7);
        for (auto [u, v] : g.edges()) host.add_edge(u + 2, v + 2);
        host.add_edge(0, 2);
        host.add_edge(1, 2);
        auto occ = find_induced_pattern(host, PatternId::house);
        REQUIRE(occ.has_value());
        CHECK(occ->vertices == std::vector<int>{2, 3, 4, 5, 6});
        CHECK(occurrence_matches(host, *occ));
    }
    SECTION("no false positives on the named graphs") {
        CHECK_FALSE(find_induced_pattern(cycle_graph(6), PatternId::domino).has_value());
        CHECK_FALSE(find_induced_pattern(house_graph(), PatternId::fan3).has_value());
        CHECK_FALSE(find_induced_pattern(fan3_graph(), PatternId::house).has_value());
        CHECK_FALSE(find_induced_pattern(pgraph_graph(), PatternId::domino).has_value());
        CHECK_FALSE(find_induced_pattern(complete_graph(6), PatternId::induced_c4_plus)
                        .has_value());
    }
}

TEST_CASE("chordal recognition") {
    SECTION("trees and complete graphs are chordal with a valid elimination order") {
        for (const Graph& g : {path_graph(6), complete_graph(5), two_triangles_block()}) {
            RecognitionReport rep = is_chordal(g);
            REQUIRE(rep.member);
            REQUIRE(rep.elimination_order.has_value());
            CHECK(detail::is_valid_elimination_order(g, *rep.elimination_order));
        }
    }
    SECTION("C4 and the house are not, certified by an induced cycle") {
        for (const Graph& g : {cycle_graph(4), house_graph()}) {
            RecognitionReport rep = is_chordal(g);
            REQUIRE_FALSE(rep.member);
            REQUIRE(rep.forbidden.has_value());
            CHECK(rep.forbidden->vertices.size() == 4);
            CHECK(occurrence_matches(g, *rep.forbidden));
        }
    }
    SECTION("agrees with induced-cycle emptiness on all connected graphs up to n=6") {
        for (int n = 1; n <= 6; ++n)
            enumerate_connected_labeled(n, [&](const Graph& g) {
                REQUIRE(is_chordal(g).member == enumerate_induced_cycles(g, 4).empty());
            });
    }
    SECTION("disconnected input rejected") {
        CHECK_THROWS_AS(is_chordal(Graph(2)), input_error);
    }
}

TEST_CASE("distance-hereditary recognition") {
    SECTION("domino is out, certified by itself") {
        RecognitionReport rep = is_distance_hereditary(domino_graph());
        REQUIRE_FALSE(rep.member);
        REQUIRE(rep.forbidden.has_value());
        CHECK(rep.forbidden->pattern == PatternId::domino);
        CHECK(occurrence_matches(domino_graph(), *rep.forbidden));
    }
    SECTION("pgraph is in, with a valid pruning sequence") {
        RecognitionReport rep = is_distance_hereditary(pgraph_graph());
        REQUIRE(rep.member);
        REQUIRE(rep.pruning.has_value());
        CHECK(detail::is_valid_pruning_sequence(pgraph_graph(), *rep.pruning));
    }
    SECTION("C5 is out via a hole") {
        RecognitionReport rep = is_distance_hereditary(cycle_graph(5));
        REQUIRE_FALSE(rep.member);
        CHECK(rep.forbidden->pattern == PatternId::hole);
    }
}

TEST_CASE("DH oracles") {
    SECTION("definitional: P4 in, house and C5 out") {
        CHECK(dh_oracle_definition(path_graph(4)));
        CHECK_FALSE(dh_oracle_definition(house_graph()));
        CHECK_FALSE(dh_oracle_definition(cycle_graph(5)));
        CHECK_THROWS_AS(dh_oracle_definition(path_graph(10)), capability_error);
    }
    SECTION("pruning: complete graphs and trees reduce, the domino does not") {
        CHECK(dh_oracle_pruning(complete_graph(6)));
        CHECK(dh_oracle_pruning(path_graph(7)));
        CHECK_FALSE(dh_oracle_pruning(domino_graph()));
    }
    SECTION("the domino offers no pendant or twin at the first step") {
        Graph d = domino_graph();
        for (int v = 0; v < 6; ++v) CHECK(d.degree(v) > 1);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v) {
                if (d.adjacent(u, v))
                    CHECK((d.neighbors(u) & ~vertex_bit(v)) !=
                          (d.neighbors(v) & ~vertex_bit(u)));
                else
                    CHECK(d.neighbors(u) != d.neighbors(v));
            }
    }
    SECTION("three routes agree on all connected graphs up to n=6") {
        for (int n = 1; n <= 6; ++n)
            enumerate_connected_labeled(n, [&](const Graph& g) {
                const bool pattern = is_distance_hereditary(g).member;
                REQUIRE(pattern == dh_oracle_pruning(g));
                REQUIRE(pattern == dh_oracle_definition(g));
            });
    }
}

TEST_CASE("Ptolemaic recognition") {
    SECTION("trees and block graphs are in") {
        CHECK(is_ptolemaic(path_graph(5)).member);
        CHECK(is_ptolemaic(two_triangles_block()).member);
    }
    SECTION("the 3-fan is out by its own pattern") {
        RecognitionReport rep = is_ptolemaic(fan3_graph());
        REQUIRE_FALSE(rep.member);
        REQUIRE(rep.forbidden.has_value());
        CHECK(rep.forbidden->pattern == PatternId::fan3);
    }
    SECTION("the four-point inequality oracle") {
        CHECK_FALSE(ptolemaic_oracle_inequality(cycle_graph(4)));
        CHECK(ptolemaic_oracle_inequality(path_graph(6)));
        CHECK_FALSE(ptolemaic_oracle_inequality(fan3_graph()));
        CHECK_FALSE(is_ptolemaic(fan3_graph()).member);
    }
    SECTION("three routes agree on all connected graphs up to n=6") {
        for (int n = 1; n <= 6; ++n)
            enumerate_connected_labeled(n, [&](const Graph& g) {
                const bool direct = is_ptolemaic(g).member;
                const bool via_dh = is_chordal(g).member && is_distance_hereditary(g).member;
                REQUIRE(direct == via_dh);
                REQUIRE(direct == ptolemaic_oracle_inequality(g));
            });
    }
}

TEST_CASE("bridged recognition") {
    SECTION("K3 is bridged, C5 and the house are not") {
        CHECK(is_bridged(complete_graph(3)).member);
        RecognitionReport c5 = is_bridged(cycle_graph(5));
        REQUIRE_FALSE(c5.member);
        CHECK(c5.forbidden->vertices == std::vector<int>{0, 1, 2, 3, 4});
        RecognitionReport house = is_bridged(house_graph());
        REQUIRE_FALSE(house.member);
        CHECK(house.forbidden->vertices == std::vector<int>{0, 1, 2, 3});  // the square
        CHECK(occurrence_matches(house_graph(), *house.forbidden));
    }
    SECTION("chordal implies bridged on the small corpus") {
        for (int n = 1; n <= 5; ++n)
            enumerate_connected_labeled(n, [&](const Graph& g) {
                if (is_chordal(g).member) REQUIRE(is_bridged(g).member);
            });
    }
}

TEST_CASE("pattern-set recognizers") {
    SECTION("fan3: HHD-free yes, HHD3fan-free no") {
        CHECK(is_hhd_free(fan3_graph()).member);
        RecognitionReport rep = is_hhd3fan_free(fan3_graph());
        REQUIRE_FALSE(rep.member);
        CHECK(rep.forbidden->pattern == PatternId::fan3);
    }
    SECTION("pgraph: HHD3fan-free yes, HHP3fan-free no") {
        CHECK(is_hhd3fan_free(pgraph_graph()).member);
        RecognitionReport rep = is_hhp3fan_free(pgraph_graph());
        REQUIRE_FALSE(rep.member);
        CHECK(rep.forbidden->pattern == PatternId::pgraph);
    }
    SECTION("C6 fails all three via its hole") {
        for (RecognitionReport rep : {is_hhd_free(cycle_graph(6)),
                                      is_hhp3fan_free(cycle_graph(6)),
                                      is_hhd3fan_free(cycle_graph(6))}) {
            REQUIRE_FALSE(rep.member);
            CHECK(rep.forbidden->pattern == PatternId::hole);
        }
    }
    SECTION("HHD3fan-free coincides with distance-hereditary") {
        for (int n = 1; n <= 5; ++n)
            enumerate_connected_labeled(n, [&](const Graph& g) {
                REQUIRE(is_hhd3fan_free(g).member == is_distance_hereditary(g).member);
            });
    }
}

TEST_CASE("class containments across the small corpus") {
    bool dh_not_bridged = false, bridged_not_dh = false;
    for (int n = 1; n <= 5; ++n)
        enumerate_connected_labeled(n, [&](const Graph& g) {
            const bool pt = is_ptolemaic(g).member;
            const bool dh = is_distance_hereditary(g).member;
            const bool br = is_bridged(g).member;
            if (pt) {
                REQUIRE(dh);
                REQUIRE(br);
            }
            dh_not_bridged |= (dh && !br);
            bridged_not_dh |= (br && !dh);
        });
    CHECK(dh_not_bridged);   // e.g. C4
    CHECK(bridged_not_dh);   // e.g. the 3-fan
    CHECK((is_distance_hereditary(cycle_graph(4)).member &&
           !is_bridged(cycle_graph(4)).member));
    CHECK((is_bridged(fan3_graph()).member &&
           !is_distance_hereditary(fan3_graph()).member));
}

TEST_CASE("certificate replay on randomized graphs") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_connected_graph(7, 0.2 + 0.15 * static_cast<double>(seed % 4), seed);
        for (auto make : {is_chordal, is_distance_hereditary, is_ptolemaic, is_bridged,
                          is_hhd_free, is_hhp3fan_free, is_hhd3fan_free}) {
            RecognitionReport rep = make(g);
            if (rep.forbidden) {
                REQUIRE_FALSE(rep.member);
                REQUIRE(occurrence_matches(g, *rep.forbidden));
            }
            if (rep.elimination_order)
                REQUIRE(detail::is_valid_elimination_order(g, *rep.elimination_order));
            if (rep.pruning) REQUIRE(detail::is_valid_pruning_sequence(g, *rep.pruning));
        }
    }
}
