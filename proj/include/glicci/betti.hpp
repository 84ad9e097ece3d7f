#ifndef GLICCI_BETTI_HPP
#define GLICCI_BETTI_HPP

#include <map>
#include <string>
#include <vector>

#include "glicci/complex.hpp"
#include "glicci/field.hpp"

namespace glicci {

// Graded Betti numbers β_{i,j}(S/I_Δ).  Rendered in the Macaulay2 layout:
// rows indexed by j-i, columns by i.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> β_{i,j}, nonzero only
    FieldSpec field;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    int projective_dimension() const;
    int max_row() const;  // largest j-i with a nonzero entry
    std::string render() const;

    bool operator==(const BettiTable& o) const { return entries == o.entries && field == o.field; }
};

struct DepthReport {
    int depth = 0;
    int dim = 0;
    bool cohen_macaulay = false;
};

// Hilbert series of K[Δ] in the reduced form numer(t) / (1-t)^denom_pow.
struct HilbertSeries {
    std::vector<long long> numer;  // coefficient of t^k at index k
    int denom_pow = 0;

    std::string to_string() const;
    bool operator==(const HilbertSeries&) const = default;
};

inline constexpr int kDefaultHochsterGuard = 20;

// Hochster's formula: β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W; K), with the
// sum over all W ⊆ [n] evaluated through restrictions memoized on
// W ∩ existing_vertices.
BettiTable hochster_betti(const SimplicialComplex& dc, const FieldSpec& field,
                          int guard_n = kDefaultHochsterGuard);

// depth = n - projective_dimension (Auslander-Buchsbaum), dim = dim Δ + 1.
DepthReport depth_report(const SimplicialComplex& dc, const FieldSpec& field,
                         int guard_n = kDefaultHochsterGuard);
DepthReport depth_report(const BettiTable& table, const SimplicialComplex& dc);

// Field-independent: H(t) = Σ_i f_{i-1} t^i / (1-t)^i, reduced.
HilbertSeries hilbert_series(const SimplicialComplex& dc);

// Cancels common (1-t) factors of numer/(1-t)^denom_pow.
HilbertSeries reduce_series(std::vector<long long> numer, int denom_pow);

// True iff the last Betti column is concentrated in a single row.  Requires
// a Cohen-Macaulay input.
bool is_level(const SimplicialComplex& dc, const FieldSpec& field,
              int guard_n = kDefaultHochsterGuard);

}  // namespace glicci

#endif
