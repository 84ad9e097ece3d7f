#include <doctest.h>

#include <random>

#include "glicci/corpus.hpp"
#include "glicci/recognizers.hpp"
#include "oracles.hpp"

using namespace glicci;

namespace {

const SimplicialComplex& rp2() { return corpus_entry("ex53-rp2").complex; }
const SimplicialComplex& ex52() { return corpus_entry("ex52-shifted-not-level").complex; }
const SimplicialComplex& ex54() { return corpus_entry("ex54-char-dependent").complex; }
const SimplicialComplex& v6f10() { return corpus_entry("ex55-v6f10-6").complex; }
const SimplicialComplex& four_points() { return corpus_entry("ex24-four-points").complex; }

}  // namespace

TEST_CASE("cohen_macaulay by Reisner's criterion") {
    CHECK(is_cohen_macaulay(rp2(), FieldSpec::rationals()).value);
    CHECK(is_cohen_macaulay(rp2(), FieldSpec::gf(3)).value);
    PropertyVerdict char2 = is_cohen_macaulay(rp2(), FieldSpec::gf(2));
    CHECK_FALSE(char2.value);
    // the witness re-verifies: that link has nonzero homology below top
    mask_t face = mask_of_vertices(char2.witness.at("face").get<std::vector<int>>(), 6);
    int i = char2.witness.at("i").get<int>();
    SimplicialComplex lk = rp2().link(face);
    CHECK(i < lk.dim());
    CHECK(reduced_homology(lk, FieldSpec::gf(2)).at(i) != 0);

    CHECK(is_cohen_macaulay(ex52(), FieldSpec::rationals()).value);
    CHECK(is_cohen_macaulay(SimplicialComplex::from_facets(5, {{1, 2, 3, 4, 5}}),
                            FieldSpec::gf(7))
              .value);
}

TEST_CASE("2cm") {
    CHECK(is_2cm(four_points(), FieldSpec::rationals()).value);

    PropertyVerdict ex52_verdict = is_2cm(ex52(), FieldSpec::rationals());
    CHECK_FALSE(ex52_verdict.value);
    int k = ex52_verdict.witness.at("k").get<int>();
    SimplicialComplex del = ex52().deletion(vertex_bit(k));
    CHECK((del.dim() != ex52().dim() ||
           !is_cohen_macaulay(del, FieldSpec::rationals()).value));

    CHECK_FALSE(is_2cm(SimplicialComplex::from_facets(2, {{1, 2}}),
                       FieldSpec::rationals())
                    .value);
}

TEST_CASE("gorenstein") {
    SimplicialComplex sphere = SimplicialComplex::from_facets(
        4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(is_gorenstein(sphere, FieldSpec::rationals()).value);
    CHECK(is_gorenstein(sphere, FieldSpec::gf(2)).value);

    CHECK_FALSE(is_gorenstein(four_points(), FieldSpec::rationals()).value);
    CHECK_FALSE(is_gorenstein(rp2(), FieldSpec::rationals()).value);
    // over GF(2) the top homology class exists but connectivity-in-between
    // fails; still not Gorenstein
    CHECK_FALSE(is_gorenstein(rp2(), FieldSpec::gf(2)).value);

    // cones are Gorenstein exactly when their base is
    CHECK(is_gorenstein(sphere.cone(5), FieldSpec::rationals()).value);
    CHECK(is_gorenstein(SimplicialComplex::from_facets(2, {{1, 2}}),
                        FieldSpec::rationals())
              .value);
}

TEST_CASE("shifted") {
    CHECK(is_shifted(ex52()).value);
    CHECK(is_shifted(SimplicialComplex::from_facets(4, {{1, 2, 3, 4}})).value);

    PropertyVerdict v = is_shifted(rp2());
    CHECK_FALSE(v.value);
    // witness re-verifies: the exchange face is missing
    mask_t f = mask_of_vertices(v.witness.at("F").get<std::vector<int>>(), 6);
    int j = v.witness.at("j").get<int>();
    int i = v.witness.at("i").get<int>();
    CHECK(rp2().is_face(f));
    CHECK(j < i);
    CHECK_FALSE(rp2().is_face((f & ~vertex_bit(j)) | vertex_bit(i)));

    // {3} alone is shifted only after relabeling
    SimplicialComplex point3 = SimplicialComplex::from_facets(3, {{3}});
    CHECK(is_shifted(point3).value);
    SimplicialComplex point1 = SimplicialComplex::from_facets(3, {{1}});
    CHECK_FALSE(is_shifted(point1).value);
    CHECK(is_shifted(point1, true).value);

    // the 3-path is a star, so some labeling (center highest) shifts it
    SimplicialComplex path = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}});
    CHECK_FALSE(is_shifted(path).value);
    CHECK(is_shifted(path, true).value);
    // the 4-cycle is not threshold: no labeling works
    CHECK_FALSE(is_shifted(SimplicialComplex::from_facets(
                               4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}),
                           true)
                    .value);
    CHECK_THROWS_AS(is_shifted(corpus_entry("ex54-char-dependent").complex, true, 6),
                    size_guard_exceeded);
}

TEST_CASE("matroid") {
    CHECK(is_matroid(four_points()).value);
    CHECK(is_matroid(SimplicialComplex::from_facets(
                         4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}))
              .value);

    PropertyVerdict v = is_matroid(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}));
    CHECK_FALSE(v.value);
    CHECK(v.witness.at("W").get<std::vector<int>>() == std::vector<int>{1, 2, 3});

    std::mt19937 rng(161803);
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex dc = test::random_complex(rng, 6, 5, true);
        CHECK(is_matroid(dc).value == test::brute_matroid(dc));
    }
}

TEST_CASE("shellable") {
    SimplicialComplex sphere = SimplicialComplex::from_facets(
        4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    PropertyVerdict v = is_shellable(sphere);
    CHECK(v.value);
    std::vector<mask_t> order;
    for (const auto& l : v.witness.at("order"))
        order.push_back(mask_of_vertices(l.get<std::vector<int>>(), 4));
    CHECK(order.size() == 4);
    CHECK(check_shelling_order(sphere, order));

    CHECK_FALSE(is_shellable(rp2()).value);
    CHECK(is_shellable(v6f10()).value);
    CHECK_FALSE(is_shellable(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}})).value);
    CHECK_THROWS_AS(is_shellable(SimplicialComplex::from_facets(3, {{1, 2}, {3}})), not_pure);
    CHECK_THROWS_AS(is_shellable(rp2(), 5), size_guard_exceeded);
}

TEST_CASE("extendably shellable") {
    CHECK(is_extendably_shellable(v6f10()).value);
    CHECK(is_extendably_shellable(SimplicialComplex::from_facets(
                                      4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}))
              .value);
    CHECK_FALSE(is_extendably_shellable(rp2()).value);

    // any stuck prefix must itself be a shelling with no continuation
    PropertyVerdict v = is_extendably_shellable(rp2());
    std::vector<mask_t> prefix;
    for (const auto& l : v.witness.at("stuck_prefix"))
        prefix.push_back(mask_of_vertices(l.get<std::vector<int>>(), 6));
    CHECK(!prefix.empty());
    CHECK(check_shelling_order(rp2(), prefix));
}

TEST_CASE("vertex decomposable") {
    CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(3, {{1, 2, 3}})).value);
    CHECK(is_vertex_decomposable(SimplicialComplex::from_facets(2, {{}})).value);
    CHECK(is_vertex_decomposable(ex52()).value);
    CHECK_FALSE(is_vertex_decomposable(v6f10()).value);

    // witness tree re-verifies structurally
    PropertyVerdict v = is_vertex_decomposable(ex52());
    REQUIRE(v.value);
    CHECK(v.witness.contains("k"));
}

TEST_CASE("weakly vertex decomposable") {
    CHECK_FALSE(is_weakly_vertex_decomposable(rp2(), FieldSpec::rationals(), false).value);
    CHECK(is_weakly_vertex_decomposable(ex54(), FieldSpec::gf(31013), false).value);
    CHECK_FALSE(is_weakly_vertex_decomposable(ex54(), FieldSpec::gf(2), false).value);
    CHECK(is_weakly_vertex_decomposable(SimplicialComplex::from_facets(4, {{1, 2, 3, 4}}),
                                        FieldSpec::rationals(), false)
              .value);

    PropertyVerdict v = is_weakly_vertex_decomposable(ex54(), FieldSpec::gf(31013));
    REQUIRE(v.value);
    std::vector<std::pair<int, std::string>> seq;
    for (const auto& step : v.witness.at("sequence"))
        seq.emplace_back(step.at("k").get<int>(), step.at("branch").get<std::string>());
    CHECK(replay_wvd_sequence(ex54(), FieldSpec::gf(31013), seq));
}

TEST_CASE("wvd failure trace recurses through cone apexes") {
    // the cone over the projective plane: over GF(2) the apex peels and the
    // base then fails, producing a two-node trace
    SimplicialComplex coned = corpus_entry("ex53-rp2").complex.cone(7);
    FieldSpec gf2 = FieldSpec::gf(2);
    CHECK_FALSE(is_weakly_vertex_decomposable(coned, gf2, false).value);
    std::vector<WvdTraceNode> trace = wvd_failure_trace(coned, gf2);
    REQUIRE(trace.size() == 2);
    bool saw_apex = false;
    for (const auto& e : trace[0].entries)
        if (e.k == 7) {
            saw_apex = true;
            CHECK(e.reason.find("cone apex") != std::string::npos);
            CHECK(e.reason.find("node 1") != std::string::npos);
        }
    CHECK(saw_apex);
    CHECK(trace[1].facets == std::vector<std::vector<int>>{
                                 {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                 {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
}

TEST_CASE("wvd failure trace names every vertex with the depth gap") {
    std::vector<WvdTraceNode> trace = wvd_failure_trace(rp2(), FieldSpec::rationals());
    REQUIRE(trace.size() == 1);
    REQUIRE(trace[0].entries.size() == 6);
    for (const auto& e : trace[0].entries) {
        CHECK(e.deletion_depth == 3);
        CHECK(e.deletion_dim == 4);
    }
    CHECK(wvd_failure_trace(four_points(), FieldSpec::rationals()).empty());
}

TEST_CASE("high-dimensional pure complexes are weakly decomposable") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        SimplicialComplex dc = test::random_complex(rng, 5, 6, true);
        if (popcount(dc.existing_vertices()) != dc.ground_set_size()) continue;
        if (dc.dim() < dc.ground_set_size() - 2) continue;
        CHECK(is_weakly_vertex_decomposable(dc, FieldSpec::rationals(), false).value);
        CHECK(is_cohen_macaulay(dc, FieldSpec::rationals()).value);
    }
}

TEST_CASE("octahedron boundary: a two-sphere hits every positive property") {
    // vertices paired 1-2, 3-4, 5-6; facets avoid the three diagonals
    SimplicialComplex oct = SimplicialComplex::from_facets(
        6, {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
            {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});
    CHECK(oct.reduced_euler() == 1);  // chi(S^2) - 1
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::gf(2)}) {
        HomologyProfile h = reduced_homology(oct, f);
        CHECK(h.at(0) == 0);
        CHECK(h.at(1) == 0);
        CHECK(h.at(2) == 1);
        CHECK(is_gorenstein(oct, f).value);
        CHECK(is_2cm(oct, f).value);
        CHECK(is_cohen_macaulay(oct, f).value);
    }
    CHECK(is_vertex_decomposable(oct, false).value);
    CHECK(is_shellable(oct).value);
    // the independence complex of three rank-one pairs
    CHECK(is_matroid(oct).value);
    CHECK(test::brute_matroid(oct));
    CHECK(is_weakly_vertex_decomposable(oct, FieldSpec::gf(3), false).value);
}

TEST_CASE("corpus fixtures re-verify") {
    CHECK(corpus_selftest().empty());
}
