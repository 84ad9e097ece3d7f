#ifndef GLICCI_LIAISON_HPP
#define GLICCI_LIAISON_HPP

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "glicci/field.hpp"
#include "glicci/ideal.hpp"
#include "glicci/recognizers.hpp"

namespace glicci {

// One move of a liaison certificate.  A BasicDoubleLink records
// before = x_k·after + cm_ideal with after = before : x_k and
// cm_ideal = the x_k-free generators of before.  A ConePeel drops a cone
// apex from the ambient variable set; the ideal is unchanged up to
// relabelling.
struct CertificateStep {
    enum class Kind { ConePeel, BasicDoubleLink };
    Kind kind = Kind::BasicDoubleLink;
    int vertex = 0;
    SquarefreeMonomialIdeal before;
    SquarefreeMonomialIdeal after;
    std::optional<SquarefreeMonomialIdeal> cm_ideal;  // present iff BasicDoubleLink
    FieldSpec field;
};

// A chain of cone peels and basic double links ending at a complete
// intersection.
struct GlicciCertificate {
    FieldSpec field;
    int initial_vars = 0;
    std::vector<CertificateStep> steps;
    SquarefreeMonomialIdeal terminal;
};

struct CertificateVerification {
    bool valid = true;
    int failed_step = -1;  // -1 when the terminal or the chain as a whole fails
    std::string condition;
    std::string diagnostic;
};

struct CertificateStats {
    int peels = 0;
    int links = 0;
};

struct not_weakly_vertex_decomposable : error {
    not_weakly_vertex_decomposable(const std::string& what, std::vector<WvdTraceNode> t)
        : error(what), trace(std::move(t)) {}
    std::vector<WvdTraceNode> trace;
};

// Builds the certificate by following the weak vertex decomposition: cone
// branches emit ConePeel steps, link branches emit BasicDoubleLink steps,
// and the chain stops as soon as the current ideal is a complete
// intersection.  Candidate vertices are tried in descending order.  Throws
// not_weakly_vertex_decomposable (with the per-vertex failure trace) when no
// decomposition exists.
GlicciCertificate build_glicci_certificate(const SimplicialComplex& dc, const FieldSpec& field);

// Independently rechecks every step: (a) the link variable divides no
// generator of J or c, (b) c ⊆ J, (c) S/c Cohen-Macaulay over the step
// field, (d) J unmixed, (e) codim J = codim c + 1, (f) before = x_k·J + c;
// apex containment and relabelling for peels; the chain gluing; and that the
// terminal ideal is a complete intersection.  Reports the first violation.
CertificateVerification verify_glicci_certificate(const GlicciCertificate& cert);

CertificateStats certificate_length_stats(const GlicciCertificate& cert);

// The same certificate replayed over a different field.
GlicciCertificate with_field(GlicciCertificate cert, const FieldSpec& field);

nlohmann::json certificate_to_json(const GlicciCertificate& cert);
GlicciCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace glicci

#endif
