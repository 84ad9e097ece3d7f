#include <doctest.h>

#include <random>

#include "glicci/corpus.hpp"
#include "glicci/homology.hpp"
#include "glicci/linalg.hpp"
#include "oracles.hpp"

using namespace glicci;

TEST_CASE("reduced homology of basic spaces") {
    FieldSpec q = FieldSpec::rationals();
    SimplicialComplex simplex = SimplicialComplex::from_facets(4, {{1, 2, 3, 4}});
    CHECK(reduced_homology(simplex, q).all_zero());
    CHECK(reduced_homology(simplex, FieldSpec::gf(2)).all_zero());

    SimplicialComplex circle = SimplicialComplex::from_facets(3, {{1, 2}, {1, 3}, {2, 3}});
    HomologyProfile h = reduced_homology(circle, q);
    CHECK(h.at(-1) == 0);
    CHECK(h.at(0) == 0);
    CHECK(h.at(1) == 1);

    SimplicialComplex empty = SimplicialComplex::from_facets(3, {{}});
    CHECK(reduced_homology(empty, q).at(-1) == 1);
}

TEST_CASE("projective plane homology depends on the characteristic") {
    const SimplicialComplex& rp2 = corpus_entry("ex53-rp2").complex;

    HomologyProfile over_q = reduced_homology(rp2, FieldSpec::rationals());
    CHECK(over_q.all_zero());

    HomologyProfile over_gf2 = reduced_homology(rp2, FieldSpec::gf(2));
    CHECK(over_gf2.at(0) == 0);
    CHECK(over_gf2.at(1) == 1);
    CHECK(over_gf2.at(2) == 1);

    CHECK(reduced_homology(rp2, FieldSpec::gf(3)).all_zero());

    // independent route: Smith normal form over the integers
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::gf(31013)})
        CHECK(reduced_homology(rp2, f) == test::snf_homology(rp2, f));
}

TEST_CASE("rank route matches Smith normal form on random complexes") {
    std::mt19937 rng(2024);
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3),
                                     FieldSpec::gf(31013)};
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex dc = test::random_complex(rng, 6, 6, false);
        for (const FieldSpec& f : fields) {
            HomologyProfile impl = reduced_homology(dc, f);
            CHECK(impl == test::snf_homology(dc, f));

            long long alternating = 0;
            for (int i = -1; i <= impl.top_index(); ++i)
                alternating += (i % 2 == 0 ? 1 : -1) * impl.at(i);
            CHECK(alternating == dc.reduced_euler());
        }
    }
}

TEST_CASE("sparse elimination handles wide matrices") {
    // Above 5000 columns the rank computation switches to sparse
    // elimination; a block matrix with known rank exercises it.
    int n = 5200;
    SignMatrix m(n, n + 10);
    for (int i = 0; i < n; ++i) {
        m.add(i, i, 1);
        m.add(i, i + 1, i % 2 == 0 ? 1 : -1);
    }
    // duplicate last row: rank stays n - ... rows n-1 and n-2 made dependent
    m.row_entries[static_cast<std::size_t>(n - 1)] =
        m.row_entries[static_cast<std::size_t>(n - 2)];
    CHECK(matrix_rank(m, FieldSpec::rationals()) == n - 1);
    CHECK(matrix_rank(m, FieldSpec::gf(2)) == n - 1);
    CHECK(matrix_rank(m, FieldSpec::gf(31013)) == n - 1);

    // the two routes agree: identical entries, with and without padding
    // columns that flip the dense/sparse choice
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        SignMatrix dense(10, 100);
        std::uniform_int_distribution<int> col(0, 99), sign(0, 1);
        for (int r = 0; r < 10; ++r)
            for (int k = 0; k < 7; ++k) dense.add(r, col(rng), sign(rng) ? 1 : -1);
        SignMatrix padded(10, 5100);
        padded.row_entries = dense.row_entries;
        for (const FieldSpec& f :
             {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(31013)})
            CHECK(matrix_rank(dense, f) == matrix_rank(padded, f));
    }
}

TEST_CASE("field parsing and validation") {
    CHECK(FieldSpec::parse("q").is_rationals());
    CHECK(FieldSpec::parse("gf:31013").p == 31013);
    CHECK(FieldSpec::parse("gf:2") == FieldSpec::gf(2));
    CHECK_THROWS_AS(FieldSpec::parse("gf:4"), invalid_field);
    CHECK_THROWS_AS(FieldSpec::parse("gf:"), invalid_field);
    CHECK_THROWS_AS(FieldSpec::parse("r"), invalid_field);
    CHECK_THROWS_AS(FieldSpec::gf(91), invalid_field);
    CHECK(FieldSpec::gf(2147483647).p == 2147483647);  // 2^31 - 1 is prime
}
