#include <random>

#include <catch_amalgamated.hpp>

#include "graphnil/iso.hpp"
#include "graphnil/proofreplay.hpp"

#include "test_support.hpp"

using namespace graphnil;
using namespace testutil;

namespace {

template <FieldLike K>
ReplayInput<K> sheared_input(const GradedMap<K>& witness, const Matrix<K>& phi) {
    const GraphLieAlgebra<K> src(witness.source, witness.field());
    const GraphLieAlgebra<K> tgt(witness.target, witness.field());
    return {src, tgt, central_shear(tgt, phi) * witness.full()};
}

} // namespace

TEST_CASE("replaying a vertex swap on one edge") {
    const Rationals q;
    const auto k2 = Graph(2, {{0, 1}});
    const auto swap = functor_pushforward(VertexPermutation({1, 0}), k2, k2, q);
    const GraphLieAlgebra<Rationals> alg(k2, q);
    const ReplayInput<Rationals> in{alg, alg, swap.full()};

    const auto rep = replay(in, {q.one(), q.one()});
    CHECK(rep.all_ok());
    // pi(F(v_0)) = v_1 and pi(F(v_1)) = v_0, exactly
    REQUIRE(rep.s_double_prime.size() == 2);
    CHECK(rep.s_double_prime[0] == std::vector<Rational>{q.zero(), q.one()});
    CHECK(rep.s_double_prime[1] == std::vector<Rational>{q.one(), q.zero()});
    CHECK(rep.induced == k2);
}

TEST_CASE("shears do not disturb the projected vertex set") {
    const Rationals q;
    const auto p3 = path_graph(3);
    const GraphLieAlgebra<Rationals> alg(p3, q);

    // identity composed with the shear v0 -> v0 + e0_1
    Matrix<Rationals> phi(q, 2, 3);
    phi.at(0, 0) = q.one();
    const auto F = central_shear(alg, phi);
    const ReplayInput<Rationals> in{alg, alg, F};

    const auto rep = replay(in, {q.one(), q.from_int(2), q.from_int(3)});
    CHECK(rep.all_ok());
    for (int a = 0; a < 3; ++a) {
        // the central correction is projected away, leaving the standard basis
        const auto expected = [&] {
            auto v = vec_zero(q, 3);
            v[static_cast<std::size_t>(a)] = q.one();
            return v;
        }();
        CHECK(rep.s_double_prime[static_cast<std::size_t>(a)] == expected);
    }
}

TEST_CASE("replay accepts searched witnesses composed with shears") {
    const PrimeField f3(3);
    std::mt19937_64 rng(61);
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto h = permute_graph(g, random_permutation(n, rng));
            const auto w = graded_iso_search(g, h, f3);
            REQUIRE(w.has_value());
            const auto phi = random_matrix(f3, static_cast<std::size_t>(g.edge_count()),
                                           static_cast<std::size_t>(n), rng);
            const auto in = sheared_input(*w, phi);
            const auto rep = replay(in, random_nonzero_tuple(f3, n, rng));
            CHECK(rep.dims_ok);
            CHECK(rep.basis_ok);
            CHECK(rep.induced_iso_ok);
            CHECK(rep.torus_ok);
        }
}

TEST_CASE("replay rejects maps that are not isomorphisms") {
    const Rationals q;
    const auto k2 = Graph(2, {{0, 1}});
    const GraphLieAlgebra<Rationals> alg(k2, q);

    // identity on V with a zeroed central block: not a morphism
    auto bad = Matrix<Rationals>::identity(q, 3);
    bad.at(2, 2) = q.zero();
    CHECK_THROWS_WITH(replay(ReplayInput<Rationals>{alg, alg, bad}, {q.one(), q.one()}),
                      "input map is not a Lie isomorphism");

    // the zero map is a morphism but not invertible
    CHECK_THROWS_WITH(
        replay(ReplayInput<Rationals>{alg, alg, Matrix<Rationals>(q, 3, 3)},
               {q.one(), q.one()}),
        "input map is not a Lie isomorphism");
}

TEST_CASE("torus membership needs nonzero diagonal entries") {
    const Rationals q;
    const auto k2 = Graph(2, {{0, 1}});
    const GraphLieAlgebra<Rationals> alg(k2, q);
    const auto in =
        ReplayInput<Rationals>{alg, alg, Matrix<Rationals>::identity(q, 3)};
    CHECK_THROWS_WITH(replay(in, {q.one(), q.zero()}), "zero diagonal value");
    CHECK_THROWS_WITH(replay(in, {q.one()}), "diagonal length mismatch");
}

TEST_CASE("replay report json") {
    const Rationals q;
    const auto k2 = Graph(2, {{0, 1}});
    const GraphLieAlgebra<Rationals> alg(k2, q);
    const auto rep =
        replay(ReplayInput<Rationals>{alg, alg, Matrix<Rationals>::identity(q, 3)},
               {q.one(), q.from_int(2)});
    const auto j = replay_report_to_json(q, rep);
    CHECK(j["dims_ok"] == true);
    CHECK(j["basis_ok"] == true);
    CHECK(j["induced_iso_ok"] == true);
    CHECK(j["torus_ok"] == true);
    CHECK(j["s_double_prime"] == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));
    CHECK(j["torus_d"] == nlohmann::json::array({"1", "2"}));
    CHECK(j["induced_graph"]["n"] == 2);
}

TEST_CASE("random replays over both field kinds") {
    std::mt19937_64 rng(8);
    auto run = [&](auto field) {
        using K = decltype(field);
        for (int t = 0; t < 10; ++t) {
            const int n = 2 + static_cast<int>(rng() % 3);
            const auto reps = enumerate_graphs(n);
            const auto& g = reps[rng() % reps.size()];
            const GraphLieAlgebra<K> alg(g, field);
            const auto sigma = random_permutation(n, rng);
            const auto h = permute_graph(g, sigma);
            const GraphLieAlgebra<K> tgt(h, field);
            const auto w = functor_pushforward(sigma, g, h, field);
            const auto phi = random_matrix(field, static_cast<std::size_t>(g.edge_count()),
                                           static_cast<std::size_t>(n), rng);
            const ReplayInput<K> in{alg, tgt, central_shear(tgt, phi) * w.full()};
            const auto rep = replay(in, random_nonzero_tuple(field, n, rng));
            CHECK(rep.all_ok());
        }
    };
    run(Rationals{});
    run(PrimeField{7});
}
