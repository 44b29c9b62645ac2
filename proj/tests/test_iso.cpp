#include <random>

#include <catch_amalgamated.hpp>

#include "graphnil/iso.hpp"

#include "test_support.hpp"

using namespace graphnil;
using namespace testutil;

namespace {

nlohmann::json stable_report(const TheoremReport& r) {
    auto j = theorem_report_to_json(r);
    j.erase("wall_time_ms");
    return j;
}

} // namespace

TEST_CASE("fingerprints") {
    const PrimeField f3(3);
    const auto fp = [&](const Graph& g) { return fingerprint(build_algebra(g, f3)); };

    CHECK(fp(complete_graph(3)) == Fingerprint{6, 3, 3});
    CHECK(fp(Graph(5)) == Fingerprint{5, 0, 5});
    CHECK(fp(matching_component(5)) == Fingerprint{6, 1, 4});

    // the classic collision: path and star on four vertices
    CHECK(fp(path_graph(4)) == Fingerprint{7, 3, 3});
    CHECK(fp(star_graph(4)) == Fingerprint{7, 3, 3});
    CHECK(fp(cycle_graph(4)) == Fingerprint{8, 4, 4});
    CHECK(fp(paw_graph()) == Fingerprint{8, 4, 4});

    CHECK(fp(path_graph(3)) != fp(two_matchings()));

    const auto j = fingerprint_to_json(fp(complete_graph(3)));
    CHECK(j == nlohmann::json{{"dim", 6}, {"derived_dim", 3}, {"center_dim", 3}});
}

TEST_CASE("search finds the identity for identical graphs") {
    const PrimeField f3(3);
    const auto k2 = Graph(2, {{0, 1}});
    SearchStats st;
    const auto w = graded_iso_search(k2, k2, f3, &st);
    REQUIRE(w.has_value());
    CHECK(w->A == Matrix<PrimeField>::identity(f3, 2));
    CHECK(st.nodes > 0);
}

TEST_CASE("search certifies non-isomorphism of fingerprint twins") {
    const PrimeField f3(3);
    SearchStats st;
    CHECK_FALSE(graded_iso_search(path_graph(4), star_graph(4), f3, &st).has_value());
    CHECK(st.nodes > 100); // a real search ran, not a prefilter
    CHECK_FALSE(graded_iso_search(star_graph(4), path_graph(4), f3).has_value());
    CHECK_FALSE(graded_iso_search(cycle_graph(4), paw_graph(), f3).has_value());
    CHECK_FALSE(graded_iso_search(paw_graph(), cycle_graph(4), f3).has_value());
}

TEST_CASE("search witnesses are sound") {
    const PrimeField f5(5);
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto h = permute_graph(g, random_permutation(n, rng));
            const auto w = graded_iso_search(g, h, f5);
            REQUIRE(w.has_value());
            CHECK(is_lie_morphism(*w));
            CHECK(w->A.is_invertible());
            CHECK(w->B.is_invertible());
            CHECK(wedges_respect_edges(w->A, g, h));
        }
}

TEST_CASE("search honors size mismatches and budgets") {
    const PrimeField f3(3);
    CHECK_FALSE(graded_iso_search(Graph(2), Graph(3), f3).has_value());
    CHECK_FALSE(graded_iso_search(path_graph(3), complete_graph(3), f3).has_value());
    CHECK_THROWS_WITH(graded_iso_search(Graph(6), Graph(6), f3),
                      "search space too large (vertex budget is 5)");
    const PrimeField f101(101);
    CHECK_THROWS_WITH(graded_iso_search(Graph(5), Graph(5), f101),
                      "search space too large (p^n over budget)");
}

TEST_CASE("two-route reports") {
    const PrimeField f3(3);

    const auto agree = lie_iso_equivalent(path_graph(3), path_graph(3), f3);
    CHECK(agree.graph_iso);
    CHECK(agree.lie_iso);
    CHECK(agree.graph_witness.has_value());
    CHECK(agree.lie_witness.has_value());

    // different fingerprints: search is skipped entirely
    const auto cheap = lie_iso_equivalent(Graph(4, {{0, 1}, {1, 2}}), two_matchings(), f3);
    CHECK_FALSE(cheap.graph_iso);
    CHECK_FALSE(cheap.lie_iso);
    CHECK(cheap.search_nodes == 0);
    CHECK(cheap.fp_g != cheap.fp_h);

    // equal fingerprints force the full search
    const auto deep = lie_iso_equivalent(path_graph(4), star_graph(4), f3);
    CHECK_FALSE(deep.graph_iso);
    CHECK_FALSE(deep.lie_iso);
    CHECK(deep.fp_g == deep.fp_h);
    CHECK(deep.search_nodes > 100);

    const auto j = iso_report_to_json(agree);
    CHECK(j["graph_iso"] == true);
    CHECK(j["lie_iso"] == true);
    CHECK(j["graph_witness"] == nlohmann::json::array({0, 1, 2}));
    CHECK(j["lie_witness"]["field"] == "fp:3");
    const auto jd = iso_report_to_json(deep);
    CHECK_FALSE(jd.contains("graph_witness"));
    CHECK_FALSE(jd.contains("lie_witness"));
}

TEST_CASE("routes agree on relabeled graphs") {
    const PrimeField f3(3);
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto h = permute_graph(g, random_permutation(n, rng));
            const auto rep = lie_iso_equivalent(g, h, f3);
            CHECK(rep.graph_iso);
            CHECK(rep.lie_iso);
        }
}

TEST_CASE("theorem check at small scale") {
    const PrimeField f3(3);

    const auto r2 = theorem_check(2, f3);
    CHECK(r2.pairs_tested == 6); // three classes, unordered pairs with diagonal
    CHECK(r2.iso_pairs == 3);
    CHECK(r2.violations.empty());
    CHECK(r2.field.to_string() == "fp:3");

    const auto r3 = theorem_check(3, f3);
    CHECK(r3.pairs_tested == 28);
    CHECK(r3.iso_pairs == 7); // only the diagonal: representatives are pairwise non-iso
    CHECK(r3.violations.empty());
    CHECK(r3.max_search_nodes > 0);

    CHECK_THROWS_WITH(theorem_check(6, f3), "vertex budget out of range (1..5)");
    CHECK_THROWS_WITH(theorem_check(0, f3), "vertex budget out of range (1..5)");
}

TEST_CASE("theorem check covers the fingerprint twins") {
    const PrimeField f3(3);
    const auto r = theorem_check(4, f3);
    CHECK(r.pairs_tested == 171); // 18 classes up to four vertices
    CHECK(r.iso_pairs == 18);
    CHECK(r.violations.empty());
    CHECK(r.max_search_nodes > 10000); // the path/star pair needs a full exhaustive search
}

TEST_CASE("theorem check is deterministic and thread count independent") {
    const PrimeField f3(3);
    const auto a = stable_report(theorem_check(3, f3, 1));
    const auto b = stable_report(theorem_check(3, f3, 1));
    const auto c = stable_report(theorem_check(3, f3, 3));
    CHECK(a == b);
    CHECK(a == c);

    const auto j = theorem_report_to_json(theorem_check(2, f3));
    CHECK(j["pairs_tested"] == 6);
    CHECK(j["iso_pairs"] == 3);
    CHECK(j["violations"] == nlohmann::json::array());
    CHECK(j["field"] == "fp:3");
    CHECK(j["n_max"] == 2);
    CHECK(j.contains("wall_time_ms"));
}
