#include <doctest.h>

#include <set>

#include "glicci/census.hpp"

using namespace glicci;

TEST_CASE("enumeration matches brute-force orbit counting") {
    for (int m = 1; m <= 5; ++m) {
        // oracle: canonical forms of every covering pure facet set
        std::set<std::vector<mask_t>> orbits;
        for (int d = 0; d < m; ++d) {
            std::vector<mask_t> cands;
            for (mask_t s = 0; s <= full_mask(m); ++s)
                if (popcount(s) == d + 1) cands.push_back(s);
            int c = static_cast<int>(cands.size());
            for (std::uint64_t sm = 1; sm < (1ull << c); ++sm) {
                std::vector<mask_t> facets;
                mask_t covered = 0;
                for (int j = 0; j < c; ++j)
                    if ((sm >> j) & 1) {
                        facets.push_back(cands[static_cast<std::size_t>(j)]);
                        covered |= cands[static_cast<std::size_t>(j)];
                    }
                if (covered != full_mask(m)) continue;
                orbits.insert(*SimplicialComplex(m, facets).canonical_facets());
            }
        }
        auto enumerated = enumerate_pure_complexes(m);
        CHECK(enumerated.size() == orbits.size());
        for (const auto& dc : enumerated) {
            CHECK(popcount(dc.existing_vertices()) == m);
            CHECK(dc.is_pure());
            CHECK(*dc.canonical_facets() == dc.facets());
        }
    }
    CHECK(enumerate_pure_complexes(0).size() == 1);
}

TEST_CASE("census sweep up to four vertices is violation-free") {
    CensusOptions opts;
    opts.max_n = 4;
    CensusReport report = run_census(opts);
    CHECK(report.violations.empty());
    CHECK(report.complexes > 0);
    CHECK(report.liaison_certificates > 0);
    CHECK(report.stanley_decompositions > 0);  // the four points complex at least
}

TEST_CASE("census reports are deterministic across runs and thread counts") {
    CensusOptions a;
    a.max_n = 4;
    a.threads = 1;
    CensusOptions b = a;
    b.threads = 2;
    nlohmann::json ja = run_census(a).to_json();
    nlohmann::json jb = run_census(b).to_json();
    ja.erase("seconds");
    jb.erase("seconds");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("census guards") {
    CensusOptions opts;
    opts.max_n = 8;
    CHECK_THROWS_AS(run_census(opts), size_guard_exceeded);
    opts.max_n = 7;  // the middle layers of n = 7 are beyond the subset scan
    CHECK_THROWS_AS(run_census(opts), size_guard_exceeded);
}
