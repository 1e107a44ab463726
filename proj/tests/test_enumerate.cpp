// Injective-morphism search against a generate-and-filter oracle, counting
// formulas, forced assignments, and the parallel/serial agreement.

#include <doctest.h>

#include <ngc/cra.hpp>
#include <ngc/enumerate.hpp>

#include "support.hpp"

using namespace ngc;
using namespace ngc::testing;

namespace {

bool same_morphism_list(const std::vector<GraphMorphism>& a, const std::vector<GraphMorphism>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!morphism_equal(a[i], b[i]))
            return false;
    return true;
}

CraContainer default_corpus() {
    CraInstance instance;
    instance.methods = {"M1", "M2", "M3"};
    instance.attributes = {"A1", "A2", "A3"};
    instance.data_deps = {{"M1", "A1"}};
    instance.class_count = 6;
    return build_cra_container(instance);
}

} // namespace

TEST_CASE("frozen match counts on the assignment container") {
    auto corpus = default_corpus();
    auto t = corpus.container;
    CHECK(graph_size(*t) == 49); // 12 nodes, 36 encapsulation edges, 1 data dep

    auto method_only = make_graph(cra_type_graph(), {{"m", "Method"}}, {});
    CHECK(enumerate_injective_morphisms(method_only, t).size() == 3);

    auto encapsulated = make_graph(cra_type_graph(), {{"m", "Method"}, {"c", "Class"}},
                                   {{"e", "encapsulatesMethod", "c", "m"}});
    CHECK(enumerate_injective_morphisms(encapsulated, t).size() == 18);
}

TEST_CASE("discrete node patterns count falling factorials") {
    for (std::size_t n : {0u, 1u, 3u, 5u}) {
        std::vector<NodeSpec> host_nodes;
        for (std::size_t i = 0; i < n; ++i)
            host_nodes.push_back({"h" + std::to_string(i), "A"});
        auto host = make_graph(two_type_graph(), host_nodes, {});
        for (std::size_t k : {0u, 1u, 2u, 3u}) {
            std::vector<NodeSpec> pattern_nodes;
            for (std::size_t i = 0; i < k; ++i)
                pattern_nodes.push_back({"p" + std::to_string(i), "A"});
            auto pattern = make_graph(two_type_graph(), pattern_nodes, {});
            std::size_t expect = 1;
            for (std::size_t i = 0; i < k; ++i)
                expect *= (i < n) ? n - i : 0;
            CHECK(enumerate_injective_morphisms(pattern, host).size() == expect);
        }
    }
}

TEST_CASE("search agrees with the brute-force oracle, order included") {
    Rng rng(20260815);
    for (int round = 0; round < 60; ++round) {
        auto pattern = random_graph(rng, static_cast<std::size_t>(rng.next(0, 3)),
                                    static_cast<std::size_t>(rng.next(0, 2)));
        auto host = random_graph(rng, static_cast<std::size_t>(rng.next(0, 5)),
                                 static_cast<std::size_t>(rng.next(0, 4)));
        auto expected = brute_force_injections(pattern, host);
        auto actual = enumerate_injective_morphisms(pattern, host);
        REQUIRE(same_morphism_list(actual, expected));
        for (const auto& m : actual) {
            CHECK(validate_morphism(m).ok());
            CHECK(is_injective(m));
        }
    }
}

TEST_CASE("the empty pattern matches exactly once") {
    auto pattern = make_graph(two_type_graph(), {}, {});
    auto host = make_graph(two_type_graph(), {{"v0", "A"}}, {});
    auto found = enumerate_injective_morphisms(pattern, host);
    REQUIRE(found.size() == 1);
    CHECK(found.front().node_map.empty());
    CHECK(found.front().edge_map.empty());
}

TEST_CASE("patterns larger than the host never match") {
    auto pattern = make_graph(two_type_graph(), {{"p0", "A"}, {"p1", "A"}}, {});
    auto host = make_graph(two_type_graph(), {{"v0", "A"}}, {});
    CHECK(enumerate_injective_morphisms(pattern, host).empty());
}

TEST_CASE("type graphs must agree between pattern and host") {
    auto pattern = make_graph(two_type_graph(), {{"p0", "A"}}, {});
    auto host = make_graph(cra_type_graph(), {{"M1", "Method"}}, {});
    CHECK_THROWS_AS(enumerate_injective_morphisms(pattern, host), std::invalid_argument);
}

TEST_CASE("forced assignments restrict the search to extensions") {
    Rng rng(77);
    for (int round = 0; round < 40; ++round) {
        auto pattern = random_graph(rng, static_cast<std::size_t>(rng.next(1, 3)),
                                    static_cast<std::size_t>(rng.next(0, 2)));
        auto host = random_graph(rng, static_cast<std::size_t>(rng.next(1, 5)),
                                 static_cast<std::size_t>(rng.next(0, 4)));
        auto everything = enumerate_injective_morphisms(pattern, host);
        if (everything.empty())
            continue;
        const GraphMorphism& chosen = everything[static_cast<std::size_t>(
            rng.next(0, static_cast<int>(everything.size()) - 1))];

        ForcedAssignment forced;
        forced.node_map[pattern->nodes.begin()->first] =
            chosen.node_map.at(pattern->nodes.begin()->first);
        if (!pattern->edges.empty())
            forced.edge_map[pattern->edges.begin()->first] =
                chosen.edge_map.at(pattern->edges.begin()->first);

        // Filtering the unrestricted list by the forced pairs must give the
        // same morphisms in the same order as the seeded search.
        std::vector<GraphMorphism> expected;
        for (const auto& m : everything) {
            bool keep = true;
            for (const auto& [x, y] : forced.node_map)
                keep = keep && m.node_map.at(x) == y;
            for (const auto& [x, y] : forced.edge_map)
                keep = keep && m.edge_map.at(x) == y;
            if (keep)
                expected.push_back(m);
        }
        auto actual = enumerate_injective_morphisms(pattern, host, forced);
        CHECK(same_morphism_list(actual, expected));
    }
}

TEST_CASE("inconsistent forced assignments yield nothing or throw") {
    auto pattern = make_graph(two_type_graph(), {{"p0", "A"}, {"p1", "B"}},
                              {{"d", "ab", "p0", "p1"}});
    auto host = make_graph(two_type_graph(), {{"v0", "A"}, {"v1", "B"}},
                           {{"e", "ab", "v0", "v1"}});

    ForcedAssignment wrong_type;
    wrong_type.node_map = {{"p0", "v1"}};
    CHECK(enumerate_injective_morphisms(pattern, host, wrong_type).empty());

    ForcedAssignment clash;
    clash.node_map = {{"p0", "v0"}, {"p1", "v0"}};
    CHECK(enumerate_injective_morphisms(pattern, host, clash).empty());

    ForcedAssignment unknown_pattern_id;
    unknown_pattern_id.node_map = {{"zzz", "v0"}};
    CHECK_THROWS_AS(enumerate_injective_morphisms(pattern, host, unknown_pattern_id),
                    std::invalid_argument);

    ForcedAssignment unknown_host_id;
    unknown_host_id.node_map = {{"p0", "zzz"}};
    CHECK_THROWS_AS(enumerate_injective_morphisms(pattern, host, unknown_host_id),
                    std::invalid_argument);

    ForcedAssignment edge_forces_endpoints;
    edge_forces_endpoints.edge_map = {{"d", "e"}};
    auto forced_runs = enumerate_injective_morphisms(pattern, host, edge_forces_endpoints);
    REQUIRE(forced_runs.size() == 1);
    CHECK(forced_runs.front().node_map.at("p0") == "v0");
}

TEST_CASE("parallel and serial enumeration agree above the split threshold") {
    Rng rng(4242);
    for (int round = 0; round < 8; ++round) {
        // Hosts past the size threshold with plenty of candidates at the
        // first pattern node, so the parallel split actually engages.
        auto pattern = random_graph(rng, 3, 2);
        auto host = random_graph(rng, 18, 12);
        REQUIRE(graph_size(*host) >= 24);
        auto serial = enumerate_injective_morphisms_serial(pattern, host);
        auto parallel = enumerate_injective_morphisms(pattern, host);
        CHECK(same_morphism_list(serial, parallel));
    }
}

TEST_CASE("enumeration is stable across repeated runs") {
    auto corpus = default_corpus();
    auto pattern = make_graph(cra_type_graph(),
                              {{"m", "Method"}, {"c1", "Class"}, {"c2", "Class"}},
                              {{"e1", "encapsulatesMethod", "c1", "m"},
                               {"e2", "encapsulatesMethod", "c2", "m"}});
    auto first = enumerate_injective_morphisms(pattern, corpus.container);
    auto second = enumerate_injective_morphisms(pattern, corpus.container);
    CHECK(first.size() == 90); // 3 methods times 6*5 ordered class pairs
    CHECK(same_morphism_list(first, second));
}
