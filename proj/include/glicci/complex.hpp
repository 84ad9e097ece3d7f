#ifndef GLICCI_COMPLEX_HPP
#define GLICCI_COMPLEX_HPP

#include <optional>
#include <vector>

#include "glicci/types.hpp"

namespace glicci {

// f-vector (f_{-1}, f_0, ..., f_dim).  f_{-1} = 1 for every nonvoid complex.
struct FVector {
    std::vector<long long> counts;

    long long at_dim(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
    bool operator==(const FVector&) const = default;
};

// A finite simplicial complex on the ground set [n], stored by its facets.
// The ground set may strictly contain the existing vertices, so that cones
// and deletions considered as complexes on [n] keep their ambient ring.
// Values are immutable after construction; all operations are pure.
class SimplicialComplex {
  public:
    // The complex {∅} on the empty ground set.
    SimplicialComplex() : SimplicialComplex(0, {0}) {}

    // Builds the complex generated by `facet_masks`: non-maximal sets are
    // absorbed, duplicates removed.  The void complex (no faces at all) is
    // not constructible; the complex {∅} is (pass a single empty mask).
    SimplicialComplex(int n, std::vector<mask_t> facet_masks);

    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);

    int ground_set_size() const { return n_; }
    const std::vector<mask_t>& facets() const { return facets_; }
    int dim() const { return dim_; }
    mask_t existing_vertices() const { return vertices_; }
    int vertex_count() const { return popcount(vertices_); }

    bool is_pure() const;
    bool is_face(mask_t f) const;
    bool is_cone_with_apex(int k) const;

    // All faces, sorted by mask value.  Enumerated at construction while the
    // estimated count stays below 2^22; larger complexes answer membership
    // by facet containment and refuse whole-face enumeration.
    const std::vector<mask_t>& faces() const;
    long long face_count() const { return static_cast<long long>(faces().size()); }

    FVector f_vector() const;
    long long reduced_euler() const;

    // lk F = {G : F∩G = ∅, F∪G ∈ Δ}.  Throws not_a_face when F ∉ Δ.
    SimplicialComplex link(mask_t f) const;
    // Δ_{-F} = {G : F∩G = ∅}.  F need not be a face.
    SimplicialComplex deletion(mask_t f) const;
    // Faces contained in W.
    SimplicialComplex restriction(mask_t w) const;
    // Faces of cardinality ≤ i+1; requires -1 ≤ i ≤ dim.
    SimplicialComplex skeleton(int i) const;
    // Facets F∪{apex}.  apex may be n+1 (ground set grows by one); an
    // existing vertex is rejected.
    SimplicialComplex cone(int apex) const;

    // Inclusion-minimal non-faces of [n]; these are the generator supports
    // of the Stanley-Reisner ideal.  Sorted by (cardinality, mask).
    std::vector<mask_t> minimal_nonfaces() const;

    // Drops the ground-set slot of a non-existing vertex k; labels above k
    // shift down by one.
    SimplicialComplex drop_ground_vertex(int k) const;

    // Lexicographically least sorted facet-mask list over all permutations
    // of the existing vertices (relabelled to an initial segment).  Used for
    // memoization and census dedup; only available for ≤ 9 existing vertices.
    std::optional<std::vector<mask_t>> canonical_facets() const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

  private:
    int n_;
    std::vector<mask_t> facets_;  // antichain, sorted by mask value
    int dim_;
    mask_t vertices_;
    std::vector<mask_t> faces_;  // empty iff not enumerable
    bool faces_ready_ = false;

    void enumerate_faces(std::vector<mask_t>& out) const;
};

// Keeps only the maximal masks of `sets`, deduplicated and sorted.
std::vector<mask_t> maximal_antichain(std::vector<mask_t> sets);

}  // namespace glicci

#endif
