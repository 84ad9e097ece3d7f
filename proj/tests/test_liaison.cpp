#include <doctest.h>

#include "glicci/corpus.hpp"
#include "glicci/liaison.hpp"

using namespace glicci;

namespace {

SquarefreeMonomialIdeal gens(int n, const std::vector<std::vector<int>>& g) {
    return SquarefreeMonomialIdeal::from_generators(n, g);
}

}  // namespace

TEST_CASE("four points: one basic double link at the top vertex") {
    const SimplicialComplex& dc = corpus_entry("ex24-four-points").complex;
    GlicciCertificate cert = build_glicci_certificate(dc, FieldSpec::rationals());

    REQUIRE(cert.steps.size() == 1);
    const CertificateStep& s = cert.steps[0];
    CHECK(s.kind == CertificateStep::Kind::BasicDoubleLink);
    CHECK(s.vertex == 4);
    CHECK(s.after == gens(4, {{1}, {2}, {3}}));
    CHECK(*s.cm_ideal == gens(4, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(s.before == gens(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(cert.terminal == gens(4, {{1}, {2}, {3}}));
    CHECK(is_complete_intersection(cert.terminal));

    CHECK(verify_glicci_certificate(cert).valid);
    CertificateStats st = certificate_length_stats(cert);
    CHECK(st.links == 1);
    CHECK(st.peels == 0);
}

TEST_CASE("simplices produce empty certificates") {
    SimplicialComplex simplex = SimplicialComplex::from_facets(4, {{1, 2, 3, 4}});
    GlicciCertificate cert = build_glicci_certificate(simplex, FieldSpec::rationals());
    CHECK(cert.steps.empty());
    CHECK(cert.terminal.is_zero());
    CHECK(verify_glicci_certificate(cert).valid);
    CertificateStats st = certificate_length_stats(cert);
    CHECK(st.links == 0);
    CHECK(st.peels == 0);
}

TEST_CASE("characteristic-dependent certificate at vertex 7") {
    const SimplicialComplex& dc = corpus_entry("ex54-char-dependent").complex;
    GlicciCertificate cert = build_glicci_certificate(dc, FieldSpec::gf(31013));

    REQUIRE(!cert.steps.empty());
    const CertificateStep& first = cert.steps[0];
    CHECK(first.kind == CertificateStep::Kind::BasicDoubleLink);
    CHECK(first.vertex == 7);
    CHECK(first.after == gens(7, {{1}, {2}, {3}, {4}}));
    CHECK(*first.cm_ideal == gens(7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                                      {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}));
    // J is already a complete intersection, so the chain stops there
    CHECK(cert.steps.size() == 1);
    CHECK(cert.terminal == first.after);
    CHECK(verify_glicci_certificate(cert).valid);

    // replaying over GF(2) must fail exactly at the 'c Cohen-Macaulay'
    // hypothesis
    CertificateVerification replay = verify_glicci_certificate(with_field(cert, FieldSpec::gf(2)));
    CHECK_FALSE(replay.valid);
    CHECK(replay.failed_step == 0);
    CHECK(replay.condition == "c");

    CHECK_THROWS_AS(build_glicci_certificate(dc, FieldSpec::gf(2)),
                    not_weakly_vertex_decomposable);
}

TEST_CASE("rp2 has no certificate over the rationals, with a full trace") {
    const SimplicialComplex& rp2 = corpus_entry("ex53-rp2").complex;
    try {
        build_glicci_certificate(rp2, FieldSpec::rationals());
        FAIL("expected not_weakly_vertex_decomposable");
    } catch (const not_weakly_vertex_decomposable& e) {
        REQUIRE(e.trace.size() == 1);
        CHECK(e.trace[0].entries.size() == 6);
        for (const auto& entry : e.trace[0].entries) {
            CHECK(entry.deletion_depth == 3);
            CHECK(entry.deletion_dim == 4);
        }
    }
}

TEST_CASE("hand-built codimension violation is caught at condition e") {
    // x_3·(x_1x_2) + (x_1x_2): codim J = codim c, and c happens to equal J
    GlicciCertificate cert;
    cert.field = FieldSpec::rationals();
    cert.initial_vars = 3;
    CertificateStep s;
    s.kind = CertificateStep::Kind::BasicDoubleLink;
    s.vertex = 3;
    s.after = gens(3, {{1, 2}});
    s.cm_ideal = gens(3, {{1, 2}});
    s.before = gens(3, {{1, 2}});  // x_3 x_1 x_2 + x_1 x_2 minimalizes to x_1 x_2
    s.field = cert.field;
    cert.steps.push_back(s);
    cert.terminal = gens(3, {{1, 2}});

    CertificateVerification v = verify_glicci_certificate(cert);
    CHECK_FALSE(v.valid);
    CHECK(v.failed_step == 0);
    CHECK(v.condition == "e");
}

TEST_CASE("certificate JSON round trip and determinism") {
    const SimplicialComplex& dc = corpus_entry("ex24-four-points").complex;
    GlicciCertificate cert = build_glicci_certificate(dc, FieldSpec::rationals());

    nlohmann::json j = certificate_to_json(cert);
    GlicciCertificate back = certificate_from_json(j);
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(verify_glicci_certificate(back).valid);

    GlicciCertificate again = build_glicci_certificate(dc, FieldSpec::rationals());
    CHECK(certificate_to_json(again).dump() == j.dump());
}

TEST_CASE("peel steps relabel the ambient ring") {
    // the cone over four points: its ideal is not a complete intersection,
    // so the apex must be peeled before the basic double link
    SimplicialComplex cone4 =
        SimplicialComplex::from_facets(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}});
    GlicciCertificate cert = build_glicci_certificate(cone4, FieldSpec::rationals());
    CHECK(verify_glicci_certificate(cert).valid);

    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[0].kind == CertificateStep::Kind::ConePeel);
    CHECK(cert.steps[0].vertex == 5);
    CHECK(cert.steps[0].after.n == 4);
    CHECK(cert.steps[1].kind == CertificateStep::Kind::BasicDoubleLink);
    CHECK(cert.steps[1].vertex == 4);
    CHECK(cert.terminal == gens(4, {{1}, {2}, {3}}));

    nlohmann::json j = certificate_to_json(cert);
    CHECK(certificate_to_json(certificate_from_json(j)).dump() == j.dump());
    CHECK(verify_glicci_certificate(certificate_from_json(j)).valid);
}
