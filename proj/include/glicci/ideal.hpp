#ifndef GLICCI_IDEAL_HPP
#define GLICCI_IDEAL_HPP

#include <vector>

#include "glicci/complex.hpp"
#include "glicci/types.hpp"

namespace glicci {

// A squarefree monomial ideal in n variables, stored by the supports of its
// minimal generators (kept as an antichain at all times).  The zero ideal
// has no generators; the unit ideal has the single generator ∅.
struct SquarefreeMonomialIdeal {
    int n = 0;
    std::vector<mask_t> gens;  // antichain, sorted by (cardinality, mask)

    SquarefreeMonomialIdeal() = default;
    SquarefreeMonomialIdeal(int n_vars, std::vector<mask_t> generators);

    static SquarefreeMonomialIdeal zero(int n_vars) { return {n_vars, {}}; }
    static SquarefreeMonomialIdeal unit(int n_vars) { return {n_vars, {mask_t{0}}}; }
    static SquarefreeMonomialIdeal from_generators(int n_vars,
                                                   const std::vector<std::vector<int>>& gens);

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return !gens.empty() && gens.front() == 0; }
    bool is_proper() const { return !is_unit(); }

    // Monomial membership: some generator divides x_F.
    bool contains_monomial(mask_t f) const;
    // Ideal containment other ⊆ this.
    bool contains(const SquarefreeMonomialIdeal& other) const;

    bool operator==(const SquarefreeMonomialIdeal&) const = default;
};

struct IdealCodimReport {
    int codim = 0;
    bool unmixed = false;
    int dim_quotient = 0;
};

SquarefreeMonomialIdeal stanley_reisner_ideal(const SimplicialComplex& dc);

// Faces = subsets of [n] containing no generator support.  Rejects the unit
// ideal (no complex has an empty Stanley-Reisner ring).
SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal);

// I : x_k, computed on generator supports.
SquarefreeMonomialIdeal colon_by_variable(const SquarefreeMonomialIdeal& ideal, int k);

// Generators of I whose support excludes k; for I_Δ this is the extension
// ideal of the deletion Δ_{-k}.
SquarefreeMonomialIdeal variable_free_part(const SquarefreeMonomialIdeal& ideal, int k);

// x_k·J + c, minimalized.  Requires that x_k divides no generator of J or c
// and that c ⊆ J.
SquarefreeMonomialIdeal bdl_compose(const SquarefreeMonomialIdeal& j,
                                    const SquarefreeMonomialIdeal& c, int k);

IdealCodimReport codim_report(const SquarefreeMonomialIdeal& ideal);

// True iff generator supports are pairwise disjoint.
bool is_complete_intersection(const SquarefreeMonomialIdeal& ideal);

// Sum of two ideals in the same ring, minimalized.
SquarefreeMonomialIdeal ideal_sum(const SquarefreeMonomialIdeal& a,
                                  const SquarefreeMonomialIdeal& b);

// Deletes the (unused) variable slot k, shifting higher labels down.
SquarefreeMonomialIdeal drop_variable(const SquarefreeMonomialIdeal& ideal, int k);

// Inserts a fresh variable slot at position k, shifting labels ≥ k up; the
// inverse of drop_variable.
SquarefreeMonomialIdeal insert_variable(const SquarefreeMonomialIdeal& ideal, int k);

}  // namespace glicci

#endif
