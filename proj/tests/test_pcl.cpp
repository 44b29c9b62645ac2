#include <catch_amalgamated.hpp>

#include "graphnil/pcl.hpp"

#include "test_support.hpp"

using namespace graphnil;
using namespace testutil;

TEST_CASE("free lie data in degree two") {
    const auto d = free_lie_degree2(path_graph(3));
    CHECK(d.generators == 3);
    CHECK(d.degree2_basis ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(d.relations == std::vector<std::pair<int, int>>{{0, 2}});

    const auto full = free_lie_degree2(complete_graph(3));
    CHECK(full.relations.empty());
    const auto none = free_lie_degree2(Graph(3));
    CHECK(none.relations.size() == 3);
}

TEST_CASE("quotient of the free algebra on an edge is heisenberg") {
    const Rationals q;
    const auto pcl = pcl_mod_cube(Graph(2, {{0, 1}}), q);
    CHECK(pcl.table.dim() == 3);
    CHECK(pcl.surviving_pairs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(pcl.table.basis_name(2) == "e0_1");
    auto e0 = vec_zero(q, 3), e1 = vec_zero(q, 3);
    e0[0] = q.one();
    e1[1] = q.one();
    const auto br = pcl.table.bracket(e0, e1);
    CHECK(br[2] == q.one());
    CHECK(q.is_zero(br[0]));
}

TEST_CASE("quotient with no edges is abelian of generator rank") {
    const Rationals q;
    const auto pcl = pcl_mod_cube(Graph(2), q);
    CHECK(pcl.table.dim() == 2);
    CHECK(pcl.surviving_pairs.empty());
    const auto inv = structural_invariants(pcl.table);
    CHECK(inv.is_abelian);
}

TEST_CASE("quotient of the complete graph keeps every wedge") {
    const PrimeField f3(3);
    for (int n = 2; n <= 5; ++n) {
        const auto pcl = pcl_mod_cube(complete_graph(n), f3);
        CHECK(pcl.table.dim() == n + n * (n - 1) / 2);
        CHECK(static_cast<int>(pcl.surviving_pairs.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("survivors are exactly the edges") {
    const Rationals q;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto pcl = pcl_mod_cube(g, q);
            CHECK(pcl.surviving_pairs == g.edges());
        }
}

TEST_CASE("quotient tables are two-step lie algebras") {
    const PrimeField f5(5);
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto pcl = pcl_mod_cube(g, f5);
            const auto inv = structural_invariants(pcl.table);
            CHECK(inv.is_two_step);
            CHECK(jacobi_holds(pcl.table));
        }
}

TEST_CASE("generator identity map certifies the comparison") {
    const Rationals q;
    const auto k2 = verify_remark3(Graph(2, {{0, 1}}), q);
    CHECK(k2.ok);
    CHECK(k2.witness.A == Matrix<Rationals>::identity(q, 2));
    CHECK(k2.witness.B == Matrix<Rationals>::identity(q, 1));

    const PrimeField f3(3);
    const auto p3 = verify_remark3(path_graph(3), f3);
    CHECK(p3.ok);
    CHECK(p3.witness.B == Matrix<PrimeField>::identity(f3, 2));
}

TEST_CASE("comparison holds for every small graph") {
    const Rationals q;
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n))
            CHECK(verify_remark3(g, q).ok);
}
