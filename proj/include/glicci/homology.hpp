#ifndef GLICCI_HOMOLOGY_HPP
#define GLICCI_HOMOLOGY_HPP

#include <vector>

#include "glicci/complex.hpp"
#include "glicci/field.hpp"
#include "glicci/linalg.hpp"

namespace glicci {

// Reduced homology dimensions dim_K H̃_i for i = -1, 0, ..., dim Δ.
struct HomologyProfile {
    std::vector<long long> dims;  // index 0 holds i = -1

    long long at(int i) const {
        std::size_t idx = static_cast<std::size_t>(i + 1);
        return idx < dims.size() ? dims[idx] : 0;
    }
    int top_index() const { return static_cast<int>(dims.size()) - 2; }
    bool all_zero() const {
        for (long long d : dims)
            if (d != 0) return false;
        return true;
    }
    bool operator==(const HomologyProfile&) const = default;
};

// Boundary map from d-faces to (d-1)-faces of the augmented chain complex;
// d = 0 maps vertices onto the empty face.
SignMatrix boundary_matrix(const SimplicialComplex& dc, int d);

// Reduced simplicial homology over the field, by exact rank computations on
// the boundary maps.
HomologyProfile reduced_homology(const SimplicialComplex& dc, const FieldSpec& field);

}  // namespace glicci

#endif
