#include "glicci/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace glicci {

namespace {

// Faces grouped by dimension, each list sorted by mask.
std::vector<std::vector<mask_t>> faces_by_dim(const SimplicialComplex& dc) {
    std::vector<std::vector<mask_t>> by_dim(static_cast<std::size_t>(dc.dim() + 2));
    for (mask_t f : dc.faces()) by_dim[static_cast<std::size_t>(popcount(f))].push_back(f);
    return by_dim;
}

}  // namespace

SignMatrix boundary_matrix(const SimplicialComplex& dc, int d) {
    auto by_dim = faces_by_dim(dc);
    const auto& domain = by_dim.at(static_cast<std::size_t>(d + 1));
    const auto& codomain = by_dim.at(static_cast<std::size_t>(d));
    std::unordered_map<mask_t, int> row_of;
    row_of.reserve(codomain.size());
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row_of[codomain[i]] = static_cast<int>(i);

    SignMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        mask_t f = domain[col];
        int sign = 1;
        mask_t rest = f;
        while (rest != 0) {
            int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            m.add(row_of.at(f & ~vertex_bit(v)), static_cast<int>(col), sign);
            sign = -sign;
        }
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& dc, const FieldSpec& field) {
    int top = dc.dim();
    auto by_dim = faces_by_dim(dc);

    // rank ∂_d for d = 0..top; ∂_{-1} and ∂_{top+1} are zero.
    std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
    for (int d = 0; d <= top; ++d)
        ranks[static_cast<std::size_t>(d)] = matrix_rank(boundary_matrix(dc, d), field);

    HomologyProfile h;
    h.dims.assign(static_cast<std::size_t>(top + 2), 0);
    for (int i = -1; i <= top; ++i) {
        long long chains = static_cast<long long>(by_dim[static_cast<std::size_t>(i + 1)].size());
        long long kernel = (i < 0) ? chains : chains - ranks[static_cast<std::size_t>(i)];
        long long image = (i + 1 > top) ? 0 : ranks[static_cast<std::size_t>(i + 1)];
        h.dims[static_cast<std::size_t>(i + 1)] = kernel - image;
    }
    return h;
}

}  // namespace glicci
