#ifndef GLICCI_IO_HPP
#define GLICCI_IO_HPP

#include <iosfwd>
#include <json.hpp>
#include <string>

#include "glicci/complex.hpp"
#include "glicci/ideal.hpp"

namespace glicci {

// Text format: first line "n <int>", one facet per line as space-separated
// 1-based vertices; '#' starts a comment.  A file with no facet lines
// denotes the complex {∅}.  Output facets are sorted lexicographically as
// vertex lists.
SimplicialComplex read_complex_text(std::istream& in);
void write_complex_text(std::ostream& out, const SimplicialComplex& dc);

nlohmann::json complex_to_json(const SimplicialComplex& dc);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// Ideal text format: one generator per line as sorted variable indices.
// The zero ideal has no lines; the unit ideal is only representable in the
// JSON mirror ({"gens": [[]]}).
SquarefreeMonomialIdeal read_ideal_text(std::istream& in, int n_vars);
void write_ideal_text(std::ostream& out, const SquarefreeMonomialIdeal& ideal);

nlohmann::json ideal_to_json(const SquarefreeMonomialIdeal& ideal);
SquarefreeMonomialIdeal ideal_from_json(const nlohmann::json& j);

// Reads a complex from disk, choosing the JSON format for ".json" paths and
// the text format otherwise.
SimplicialComplex load_complex_file(const std::string& path);

std::vector<std::vector<int>> sorted_vertex_lists(const std::vector<mask_t>& masks);

}  // namespace glicci

#endif
