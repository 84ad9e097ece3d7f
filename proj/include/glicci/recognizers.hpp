#ifndef GLICCI_RECOGNIZERS_HPP
#define GLICCI_RECOGNIZERS_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "glicci/complex.hpp"
#include "glicci/field.hpp"

namespace glicci {

// Verdict of a property decision, with a structured witness when one is
// meaningful (a failing face, a shelling order, a vertex sequence, ...).
// Witnesses always re-verify under the corresponding checker.
struct PropertyVerdict {
    bool value = false;
    std::optional<FieldSpec> field;
    nlohmann::json witness;  // null when absent

    nlohmann::json to_json(const std::string& property) const;
};

inline constexpr int kDefaultShellingGuard = 20;
inline constexpr int kDefaultLabelingGuard = 8;

// Reisner's criterion: H̃_i(lk F; K) = 0 for every face F and i < dim lk F.
// Failure witness: {"face": [...], "i": int}.
PropertyVerdict is_cohen_macaulay(const SimplicialComplex& dc, const FieldSpec& field);

// CM and every existing-vertex deletion CM of the same dimension.
// Failure witness: {"k": int} or {"reason": "not_cm"}.
PropertyVerdict is_2cm(const SimplicialComplex& dc, const FieldSpec& field);

// Homology-sphere condition on the core (the restriction away from the
// vertices shared by all facets).
PropertyVerdict is_gorenstein(const SimplicialComplex& dc, const FieldSpec& field);

// Exchange condition: F ∈ Δ, j ∈ F, i > j, i ∉ F imply F-{j}∪{i} ∈ Δ.
// With any_labeling, tries all vertex permutations (≤ guard vertices).
// Failure witness (fixed labeling): {"F": [...], "j": int, "i": int}.
PropertyVerdict is_shifted(const SimplicialComplex& dc, bool any_labeling = false,
                           int labeling_guard = kDefaultLabelingGuard);

// Every restriction Δ_W pure; decided through the facet exchange axiom with
// the 2^n restriction scan reserved for the failure witness W.
PropertyVerdict is_matroid(const SimplicialComplex& dc);

// Witness: {"order": [[...], ...]}.  Pure complexes only.
PropertyVerdict is_shellable(const SimplicialComplex& dc, int facet_guard = kDefaultShellingGuard);

// Every partial shelling extends to a complete one.  Failure witness: a
// stuck partial shelling {"stuck_prefix": [[...], ...]}.
PropertyVerdict is_extendably_shellable(const SimplicialComplex& dc,
                                        int facet_guard = kDefaultShellingGuard);

// Witness: the decomposition tree {"simplex": true} or
// {"k": int, "link": ..., "deletion": ...}.
PropertyVerdict is_vertex_decomposable(const SimplicialComplex& dc, bool want_witness = true);

// Witness: {"sequence": [{"k": int, "branch": "cone"|"link"}, ...]}.
PropertyVerdict is_weakly_vertex_decomposable(const SimplicialComplex& dc,
                                              const FieldSpec& field, bool want_witness = true);

// Why a weak vertex decomposition search failed, per recursion node.
struct WvdBranchFailure {
    int k = 0;
    std::string reason;
    int deletion_depth = -1;  // of the deletion ideal's quotient, when computed
    int deletion_dim = -1;
};
struct WvdTraceNode {
    std::vector<std::vector<int>> facets;
    std::vector<WvdBranchFailure> entries;
};

// Full per-vertex failure trace for a non weakly-vertex-decomposable input;
// empty when the complex is weakly vertex-decomposable.
std::vector<WvdTraceNode> wvd_failure_trace(const SimplicialComplex& dc, const FieldSpec& field);
nlohmann::json wvd_trace_to_json(const std::vector<WvdTraceNode>& trace);

// Re-verification helpers for emitted witnesses.
bool check_shelling_order(const SimplicialComplex& dc, const std::vector<mask_t>& order);
bool replay_wvd_sequence(const SimplicialComplex& dc, const FieldSpec& field,
                         const std::vector<std::pair<int, std::string>>& sequence);

// Memoized boolean routes shared by the recursive recognizers; exposed for
// the census and liaison modules.
bool cohen_macaulay_value(const SimplicialComplex& dc, const FieldSpec& field);
bool wvd_value(const SimplicialComplex& dc, const FieldSpec& field);
void clear_recognizer_caches();

}  // namespace glicci

#endif
