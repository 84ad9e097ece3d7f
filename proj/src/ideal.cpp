#include "glicci/ideal.hpp"

#include <algorithm>

namespace glicci {

namespace {

// Keeps inclusion-minimal masks, deduplicated, sorted by (cardinality, mask).
std::vector<mask_t> minimal_antichain(std::vector<mask_t> sets) {
    std::sort(sets.begin(), sets.end(), [](mask_t a, mask_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<mask_t> out;
    for (mask_t s : sets) {
        bool divisible = false;
        for (mask_t g : out)
            if ((g & s) == g) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(s);
    }
    return out;
}

}  // namespace

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(int n_vars, std::vector<mask_t> generators)
    : n(n_vars) {
    if (n_vars < 0 || n_vars > kMaxGroundSet)
        throw vertex_out_of_range("variable count " + std::to_string(n_vars) + " unsupported");
    for (mask_t g : generators)
        if ((g & ~full_mask(n_vars)) != 0)
            throw vertex_out_of_range("generator outside variable range");
    gens = minimal_antichain(std::move(generators));
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::from_generators(
    int n_vars, const std::vector<std::vector<int>>& generators) {
    std::vector<mask_t> masks;
    masks.reserve(generators.size());
    for (const auto& g : generators) masks.push_back(mask_of_vertices(g, n_vars));
    return SquarefreeMonomialIdeal(n_vars, std::move(masks));
}

bool SquarefreeMonomialIdeal::contains_monomial(mask_t f) const {
    for (mask_t g : gens)
        if ((g & f) == g) return true;
    return false;
}

bool SquarefreeMonomialIdeal::contains(const SquarefreeMonomialIdeal& other) const {
    for (mask_t g : other.gens)
        if (!contains_monomial(g)) return false;
    return true;
}

SquarefreeMonomialIdeal stanley_reisner_ideal(const SimplicialComplex& dc) {
    return SquarefreeMonomialIdeal(dc.ground_set_size(), dc.minimal_nonfaces());
}

SimplicialComplex complex_of_ideal(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_unit()) throw unit_ideal("the unit ideal has no Stanley-Reisner complex");
    // Maximal faces = complements of minimal hitting sets of the generator
    // supports.
    std::vector<mask_t> hitting;
    std::vector<mask_t> partial;

    // Recursive branch on the first generator not yet hit.
    auto recurse = [&](auto&& self, mask_t hit, std::size_t from) -> void {
        mask_t next = 0;
        bool found = false;
        for (std::size_t i = from; i < ideal.gens.size(); ++i) {
            if ((ideal.gens[i] & hit) == 0) {
                next = ideal.gens[i];
                found = true;
                break;
            }
        }
        if (!found) {
            hitting.push_back(hit);
            return;
        }
        mask_t rest = next;
        while (rest != 0) {
            int v = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            self(self, hit | vertex_bit(v), from);
        }
    };
    recurse(recurse, 0, 0);

    // Non-minimal hitting sets give non-maximal faces; the antichain pass in
    // the complex constructor absorbs them.
    std::vector<mask_t> facet_masks;
    facet_masks.reserve(hitting.size());
    mask_t full = full_mask(ideal.n);
    for (mask_t h : hitting) facet_masks.push_back(full & ~h);
    if (facet_masks.empty()) facet_masks.push_back(full);  // zero ideal
    return SimplicialComplex(ideal.n, std::move(facet_masks));
}

SquarefreeMonomialIdeal colon_by_variable(const SquarefreeMonomialIdeal& ideal, int k) {
    if (k < 1 || k > ideal.n) throw vertex_out_of_range("colon variable " + std::to_string(k));
    std::vector<mask_t> gens;
    gens.reserve(ideal.gens.size());
    mask_t b = vertex_bit(k);
    for (mask_t g : ideal.gens) gens.push_back(g & ~b);
    return SquarefreeMonomialIdeal(ideal.n, std::move(gens));
}

SquarefreeMonomialIdeal variable_free_part(const SquarefreeMonomialIdeal& ideal, int k) {
    if (k < 1 || k > ideal.n) throw vertex_out_of_range("variable " + std::to_string(k));
    std::vector<mask_t> gens;
    mask_t b = vertex_bit(k);
    for (mask_t g : ideal.gens)
        if ((g & b) == 0) gens.push_back(g);
    return SquarefreeMonomialIdeal(ideal.n, std::move(gens));
}

SquarefreeMonomialIdeal bdl_compose(const SquarefreeMonomialIdeal& j,
                                    const SquarefreeMonomialIdeal& c, int k) {
    if (j.n != c.n) throw error("mismatched variable counts in bdl_compose");
    if (k < 1 || k > j.n) throw vertex_out_of_range("variable " + std::to_string(k));
    mask_t b = vertex_bit(k);
    for (mask_t g : j.gens)
        if ((g & b) != 0)
            throw variable_collision("x_" + std::to_string(k) + " divides a generator of J");
    for (mask_t g : c.gens)
        if ((g & b) != 0)
            throw variable_collision("x_" + std::to_string(k) + " divides a generator of c");
    if (!j.contains(c)) throw not_subideal("c is not contained in J");
    std::vector<mask_t> gens;
    gens.reserve(j.gens.size() + c.gens.size());
    for (mask_t g : j.gens) gens.push_back(g | b);
    for (mask_t g : c.gens) gens.push_back(g);
    return SquarefreeMonomialIdeal(j.n, std::move(gens));
}

IdealCodimReport codim_report(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_unit()) throw unit_ideal("codim_report needs a proper ideal");
    SimplicialComplex dc = complex_of_ideal(ideal);
    IdealCodimReport r;
    r.dim_quotient = dc.dim() + 1;
    r.codim = ideal.n - r.dim_quotient;
    r.unmixed = dc.is_pure();
    return r;
}

bool is_complete_intersection(const SquarefreeMonomialIdeal& ideal) {
    if (ideal.is_unit()) throw unit_ideal("is_complete_intersection needs a proper ideal");
    mask_t seen = 0;
    for (mask_t g : ideal.gens) {
        if ((g & seen) != 0) return false;
        seen |= g;
    }
    return true;
}

SquarefreeMonomialIdeal ideal_sum(const SquarefreeMonomialIdeal& a,
                                  const SquarefreeMonomialIdeal& b) {
    if (a.n != b.n) throw error("mismatched variable counts in ideal_sum");
    std::vector<mask_t> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return SquarefreeMonomialIdeal(a.n, std::move(gens));
}

SquarefreeMonomialIdeal drop_variable(const SquarefreeMonomialIdeal& ideal, int k) {
    if (k < 1 || k > ideal.n) throw vertex_out_of_range("variable " + std::to_string(k));
    mask_t b = vertex_bit(k);
    mask_t low = b - 1;
    std::vector<mask_t> gens;
    gens.reserve(ideal.gens.size());
    for (mask_t g : ideal.gens) {
        if ((g & b) != 0)
            throw variable_collision("variable " + std::to_string(k) + " still in use");
        gens.push_back((g & low) | ((g >> 1) & ~low));
    }
    return SquarefreeMonomialIdeal(ideal.n - 1, std::move(gens));
}

SquarefreeMonomialIdeal insert_variable(const SquarefreeMonomialIdeal& ideal, int k) {
    if (k < 1 || k > ideal.n + 1) throw vertex_out_of_range("variable " + std::to_string(k));
    mask_t low = vertex_bit(k) - 1;
    std::vector<mask_t> gens;
    gens.reserve(ideal.gens.size());
    for (mask_t g : ideal.gens) gens.push_back((g & low) | ((g & ~low) << 1));
    return SquarefreeMonomialIdeal(ideal.n + 1, std::move(gens));
}

}  // namespace glicci
