#ifndef GLICCI_CORPUS_HPP
#define GLICCI_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "glicci/complex.hpp"

namespace glicci {

// A bundled example complex with its expected verdicts and Betti fixtures.
// Facet lists are derived from the published generator lists of their
// Stanley-Reisner ideals.
struct CorpusEntry {
    std::string id;
    SimplicialComplex complex;
    std::string provenance;
    // (property, field string; "" for field-free) -> expected verdict
    std::map<std::pair<std::string, std::string>, bool> expected;
    // field string -> expected graded Betti numbers
    std::map<std::string, std::map<std::pair<int, int>, long long>> expected_betti;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& id);

// Re-verifies every fixture; returns human-readable mismatches (empty on
// success).
std::vector<std::string> corpus_selftest();

}  // namespace glicci

#endif
