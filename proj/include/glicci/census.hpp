#ifndef GLICCI_CENSUS_HPP
#define GLICCI_CENSUS_HPP

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "glicci/complex.hpp"
#include "glicci/field.hpp"

namespace glicci {

struct CensusOptions {
    int max_n = 6;
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};
    int threads = 0;      // 0 = hardware concurrency
    int layer_guard = 26;  // largest log2 of a facet-subset enumeration per layer
};

// Outcome of sweeping every pure complex on up to max_n vertices (one
// representative per isomorphism class, all vertices existing) against the
// property implications, the identity I_Δ = x_k J_{lk k} + J_{Δ-k}, the two
// depth routes, liaison certificate soundness and the Stanley decomposition
// contracts.
struct CensusReport {
    int max_n = 0;
    std::vector<std::string> field_names;
    long long complexes = 0;
    std::vector<std::string> violations;
    std::map<std::string, long long> strictness;
    long long liaison_certificates = 0;
    long long stanley_decompositions = 0;
    bool found_cm_not_shellable = false;
    bool found_wvd_not_2cm = false;
    double seconds = 0.0;

    nlohmann::json to_json() const;
};

// All pure complexes on exactly [m] (every vertex existing) up to
// isomorphism, as self-canonical facet lists.
std::vector<SimplicialComplex> enumerate_pure_complexes(int m, int layer_guard = 26);

CensusReport run_census(const CensusOptions& options);

}  // namespace glicci

#endif
