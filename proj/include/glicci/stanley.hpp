#ifndef GLICCI_STANLEY_HPP
#define GLICCI_STANLEY_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "glicci/complex.hpp"
#include "glicci/field.hpp"
#include "glicci/recognizers.hpp"

namespace glicci {

// Squarefree Stanley space u·K[Z] with supp(u) ⊆ Z; as combinatorics, the
// face interval [u, Z].  Its dimension is |Z|.
struct StanleySpace {
    mask_t u = 0;
    mask_t z = 0;

    bool operator==(const StanleySpace&) const = default;
};

// A direct-sum decomposition of K[Δ], equivalently an interval partition of
// the face poset.
struct StanleyDecomposition {
    std::vector<StanleySpace> spaces;

    bool operator==(const StanleyDecomposition&) const = default;
};

struct Interval {
    mask_t bottom = 0;
    mask_t top = 0;

    bool operator==(const Interval&) const = default;
};

// Δ = ⊔ [F_i, G_i]; for partitionability every G_i is a facet.
struct IntervalPartition {
    std::vector<Interval> intervals;
};

struct DecompositionCheck {
    bool valid = true;
    std::string diagnostic;
};

inline constexpr int kDefaultSdepthGuard = 10;

// Exact-cover check on the face poset plus the Hilbert series identity
// Σ t^{|u_i|}/(1-t)^{|Z_i|} = H_{K[Δ]}(t) as an independent confirmation.
DecompositionCheck verify_decomposition(const SimplicialComplex& dc,
                                        const StanleyDecomposition& d);
bool decomposition_hilbert_matches(const SimplicialComplex& dc, const StanleyDecomposition& d);

int sdepth_of(const StanleyDecomposition& d);

// Exact sdepth by descending-target backtracking exact-cover search.
int sdepth(const SimplicialComplex& dc, int guard_n = kDefaultSdepthGuard);
std::pair<int, StanleyDecomposition> sdepth_with_decomposition(
    const SimplicialComplex& dc, int guard_n = kDefaultSdepthGuard);

// The constructive decomposition for 2-CM complexes of codimension 3:
// recursion on the vertex count, splitting along the least existing vertex
// into a link part (spaces gain x_k) and a codimension-2 deletion part.
// The result satisfies sdepth_of ≥ depth K[Δ].
StanleyDecomposition stanley_decomposition_2cm_codim3(const SimplicialComplex& dc,
                                                      const FieldSpec& field);

// Facet-topped partition of a Cohen-Macaulay codimension-2 quotient, found
// by deterministic exact-cover search (faces by decreasing cardinality,
// facets in lexicographic order, chronological backtracking).
StanleyDecomposition stanley_decomposition_codim2(const SimplicialComplex& dc,
                                                  const FieldSpec& field);

// Witness: {"intervals": [{"F": [...], "G": [...]}, ...]}.
PropertyVerdict is_partitionable(const SimplicialComplex& dc,
                                 int facet_guard = kDefaultShellingGuard);

// The classical shelling-to-partition construction: interval i is
// [r(F_i), F_i] with r(F_i) the vertices v of F_i whose opposite wall
// F_i - v lies in the prior complex.  The order is re-verified first.
IntervalPartition partition_from_shelling(const SimplicialComplex& dc,
                                          const std::vector<mask_t>& order);

struct DepthSdepthReport {
    int depth = 0;
    int sdepth_lower_bound = 0;
    bool conjecture_holds = false;
    std::string route;
    StanleyDecomposition decomposition;
};

// Reports depth against the best decomposition a route produces
// (2-CM codim 3, CM codim 2, shellable, or exhaustive search within the
// guard).
DepthSdepthReport depth_vs_sdepth(const SimplicialComplex& dc, const FieldSpec& field,
                                  int sdepth_guard = kDefaultSdepthGuard);

StanleyDecomposition decomposition_of_partition(const IntervalPartition& p);
nlohmann::json decomposition_to_json(const StanleyDecomposition& d);
nlohmann::json partition_to_json(const IntervalPartition& p);

}  // namespace glicci

#endif
