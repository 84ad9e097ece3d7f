#include "glicci/liaison.hpp"

#include <algorithm>
#include <unordered_set>

#include "glicci/betti.hpp"

namespace glicci {

namespace {

std::string failure_key(const SimplicialComplex& dc) {
    auto canon = dc.canonical_facets();
    if (!canon) return {};
    std::string key;
    key.reserve(4 * canon->size());
    for (mask_t f : *canon)
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((f >> (8 * b)) & 0xff));
    return key;
}

struct Builder {
    FieldSpec field;
    std::vector<CertificateStep> steps;
    SquarefreeMonomialIdeal terminal;
    std::unordered_set<std::string> failed;

    bool run(const SimplicialComplex& cur) {
        SquarefreeMonomialIdeal ideal = stanley_reisner_ideal(cur);
        if (is_complete_intersection(ideal)) {
            terminal = ideal;
            return true;
        }
        std::string key = failure_key(cur);
        if (!key.empty() && failed.contains(key)) return false;

        std::vector<int> verts = vertices_of_mask(cur.existing_vertices());
        std::size_t mark = steps.size();
        for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
            int k = *it;
            if (cur.is_cone_with_apex(k)) {
                CertificateStep s;
                s.kind = CertificateStep::Kind::ConePeel;
                s.vertex = k;
                s.before = ideal;
                s.after = drop_variable(ideal, k);
                s.field = field;
                steps.push_back(std::move(s));
                if (run(cur.deletion(vertex_bit(k)).drop_ground_vertex(k))) return true;
                steps.resize(mark);
            } else {
                SimplicialComplex del = cur.deletion(vertex_bit(k));
                if (del.dim() != cur.dim() || !cohen_macaulay_value(del, field)) continue;
                CertificateStep s;
                s.kind = CertificateStep::Kind::BasicDoubleLink;
                s.vertex = k;
                s.before = ideal;
                s.after = colon_by_variable(ideal, k);
                s.cm_ideal = variable_free_part(ideal, k);
                s.field = field;
                steps.push_back(std::move(s));
                if (run(cur.link(vertex_bit(k)).cone(k))) return true;
                steps.resize(mark);
            }
        }
        if (!key.empty()) failed.insert(key);
        return false;
    }
};

}  // namespace

GlicciCertificate build_glicci_certificate(const SimplicialComplex& dc, const FieldSpec& field) {
    if (!dc.is_pure()) throw not_pure("build_glicci_certificate requires a pure complex");
    Builder b;
    b.field = field;
    if (!b.run(dc)) {
        throw not_weakly_vertex_decomposable(
            "no weak vertex decomposition over " + field.to_string(),
            wvd_failure_trace(dc, field));
    }
    GlicciCertificate cert;
    cert.field = field;
    cert.initial_vars = dc.ground_set_size();
    cert.steps = std::move(b.steps);
    cert.terminal = std::move(b.terminal);
    return cert;
}

namespace {

CertificateVerification fail(int step, const std::string& cond, const std::string& diag) {
    return {false, step, cond, diag};
}

}  // namespace

CertificateVerification verify_glicci_certificate(const GlicciCertificate& cert) {
    const SquarefreeMonomialIdeal* prev = nullptr;
    int prev_vars = cert.initial_vars;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CertificateStep& s = cert.steps[i];
        int idx = static_cast<int>(i);
        if (s.before.n != prev_vars)
            return fail(idx, "chain", "ambient variable count mismatch");
        if (prev && !(s.before == *prev))
            return fail(idx, "chain", "step does not continue the previous ideal");

        if (s.kind == CertificateStep::Kind::BasicDoubleLink) {
            if (!s.cm_ideal) return fail(idx, "chain", "basic double link without its c ideal");
            const SquarefreeMonomialIdeal& j = s.after;
            const SquarefreeMonomialIdeal& c = *s.cm_ideal;
            int k = s.vertex;
            if (j.n != s.before.n || c.n != s.before.n)
                return fail(idx, "chain", "ideal lives in the wrong ring");
            mask_t bit = vertex_bit(k);
            for (mask_t g : j.gens)
                if ((g & bit) != 0)
                    return fail(idx, "a", "x_" + std::to_string(k) + " divides a generator of J");
            for (mask_t g : c.gens)
                if ((g & bit) != 0)
                    return fail(idx, "a", "x_" + std::to_string(k) + " divides a generator of c");
            if (!j.contains(c)) return fail(idx, "b", "c is not contained in J");
            if (c.is_unit()) return fail(idx, "c", "c is the unit ideal");
            if (!cohen_macaulay_value(complex_of_ideal(c), s.field))
                return fail(idx, "c",
                            "S/c is not Cohen-Macaulay over " + s.field.to_string());
            if (j.is_unit()) return fail(idx, "d", "J is the unit ideal");
            IdealCodimReport rj = codim_report(j);
            if (!rj.unmixed) return fail(idx, "d", "J is not unmixed");
            IdealCodimReport rc = codim_report(c);
            if (rj.codim != rc.codim + 1)
                return fail(idx, "e",
                            "codim J = " + std::to_string(rj.codim) + " but codim c = " +
                                std::to_string(rc.codim));
            if (!(s.before == bdl_compose(j, c, k)))
                return fail(idx, "f", "before ideal is not x_k J + c");
        } else {
            int k = s.vertex;
            if (s.before.is_unit()) return fail(idx, "peel", "before ideal is the unit ideal");
            SimplicialComplex before_complex = complex_of_ideal(s.before);
            if (!before_complex.is_cone_with_apex(k))
                return fail(idx, "peel",
                            "vertex " + std::to_string(k) + " is not in every facet");
            if (!(s.after == drop_variable(s.before, k)))
                return fail(idx, "peel", "after ideal is not the relabelled before ideal");
        }
        prev = &s.after;
        prev_vars = s.after.n;
    }
    if (prev && !(cert.terminal == *prev))
        return fail(-1, "chain", "terminal does not match the last step");
    if (cert.terminal.is_unit() || !is_complete_intersection(cert.terminal))
        return fail(-1, "terminal", "terminal ideal is not a complete intersection");
    return {};
}

CertificateStats certificate_length_stats(const GlicciCertificate& cert) {
    CertificateStats st;
    for (const auto& s : cert.steps)
        (s.kind == CertificateStep::Kind::ConePeel ? st.peels : st.links)++;
    return st;
}

GlicciCertificate with_field(GlicciCertificate cert, const FieldSpec& field) {
    cert.field = field;
    for (auto& s : cert.steps) s.field = field;
    return cert;
}

namespace {

nlohmann::json gens_to_json(const SquarefreeMonomialIdeal& ideal) {
    nlohmann::json out = nlohmann::json::array();
    std::vector<std::vector<int>> lists;
    lists.reserve(ideal.gens.size());
    for (mask_t g : ideal.gens) lists.push_back(vertices_of_mask(g));
    std::sort(lists.begin(), lists.end());
    for (const auto& l : lists) out.push_back(l);
    return out;
}

SquarefreeMonomialIdeal gens_from_json(const nlohmann::json& j, int n) {
    std::vector<std::vector<int>> gens;
    for (const auto& g : j) gens.push_back(g.get<std::vector<int>>());
    return SquarefreeMonomialIdeal::from_generators(n, gens);
}

}  // namespace

nlohmann::json certificate_to_json(const GlicciCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : cert.steps) {
        nlohmann::json js;
        js["k"] = s.vertex;
        if (s.kind == CertificateStep::Kind::BasicDoubleLink) {
            js["kind"] = "bdl";
            js["J"] = gens_to_json(s.after);
            js["c"] = gens_to_json(*s.cm_ideal);
        } else {
            js["kind"] = "peel";
            js["J"] = gens_to_json(s.after);
        }
        steps.push_back(js);
    }
    return {{"field", cert.field.to_string()},
            {"n", cert.initial_vars},
            {"steps", steps},
            {"terminal", gens_to_json(cert.terminal)}};
}

GlicciCertificate certificate_from_json(const nlohmann::json& j) {
    GlicciCertificate cert;
    cert.field = FieldSpec::parse(j.at("field").get<std::string>());
    cert.initial_vars = j.at("n").get<int>();
    int vars = cert.initial_vars;
    for (const auto& js : j.at("steps")) {
        CertificateStep s;
        s.vertex = js.at("k").get<int>();
        s.field = cert.field;
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "bdl") {
            s.kind = CertificateStep::Kind::BasicDoubleLink;
            s.after = gens_from_json(js.at("J"), vars);
            s.cm_ideal = gens_from_json(js.at("c"), vars);
            // Recompose x_k J + c without precondition checks; verification
            // reports any violated hypothesis on the reconstructed step.
            std::vector<mask_t> gens;
            for (mask_t g : s.after.gens) gens.push_back(g | vertex_bit(s.vertex));
            for (mask_t g : s.cm_ideal->gens) gens.push_back(g);
            s.before = SquarefreeMonomialIdeal(vars, std::move(gens));
        } else if (kind == "peel") {
            s.kind = CertificateStep::Kind::ConePeel;
            s.after = gens_from_json(js.at("J"), vars - 1);
            s.before = insert_variable(s.after, s.vertex);
            --vars;
        } else {
            throw parse_error("unknown certificate step kind '" + kind + "'");
        }
        cert.steps.push_back(std::move(s));
    }
    int terminal_vars = cert.steps.empty() ? vars : cert.steps.back().after.n;
    cert.terminal = gens_from_json(j.at("terminal"), terminal_vars);
    return cert;
}

}  // namespace glicci
