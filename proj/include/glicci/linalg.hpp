#ifndef GLICCI_LINALG_HPP
#define GLICCI_LINALG_HPP

#include <cstdint>
#include <vector>

#include "glicci/field.hpp"

namespace glicci {

// A sparse integer matrix with entries in {-1, 0, 1}; rows hold (column,
// sign) pairs.  This is all simplicial boundary maps need.
struct SignMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> row_entries;

    SignMatrix() = default;
    SignMatrix(int r, int c) : rows(r), cols(c), row_entries(static_cast<std::size_t>(r)) {}
    void add(int r, int c, int sign) {
        row_entries[static_cast<std::size_t>(r)].emplace_back(c, sign);
    }
};

// Exact rank over the given field.  Dense Gaussian elimination up to 5000
// columns, sparse elimination above.  Rationals use arbitrary-precision
// arithmetic; GF(p) uses 64-bit modular arithmetic.
int matrix_rank(const SignMatrix& m, const FieldSpec& field);

}  // namespace glicci

#endif
