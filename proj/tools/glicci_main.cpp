// glicci: exact decision procedures for simplicial complexes — property
// recognizers, graded Betti tables, liaison certificates, Stanley
// decompositions and a small-complex census.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "glicci/betti.hpp"
#include "glicci/census.hpp"
#include "glicci/corpus.hpp"
#include "glicci/homology.hpp"
#include "glicci/ideal.hpp"
#include "glicci/io.hpp"
#include "glicci/liaison.hpp"
#include "glicci/recognizers.hpp"
#include "glicci/stanley.hpp"

namespace {

using namespace glicci;

int env_or(int flag_value, int fallback) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GLICCI_GUARD_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

struct CommonArgs {
    std::string file;
    std::string field_name = "q";
    bool json = false;
    bool witness = false;
    bool any_labeling = false;
    int guard_n = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_field = true) {
    cmd->add_option("file", args.file, "complex file (text or .json)")->required();
    if (with_field)
        cmd->add_option("--field", args.field_name, "coefficient field: q or gf:p");
    cmd->add_flag("--json", args.json, "emit JSON");
    cmd->add_option("--guard-n", args.guard_n, "override size guards");
}

std::string fvector_string(const FVector& fv) {
    std::string s = "(";
    for (std::size_t i = 0; i < fv.counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(fv.counts[i]);
    return s + ")";
}

int cmd_info(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    auto nonfaces = dc.minimal_nonfaces();
    if (args.json) {
        nlohmann::json j = complex_to_json(dc);
        j["dim"] = dc.dim();
        j["pure"] = dc.is_pure();
        j["f_vector"] = dc.f_vector().counts;
        j["reduced_euler"] = dc.reduced_euler();
        j["minimal_nonfaces"] = sorted_vertex_lists(nonfaces);
        j["hilbert_series"] = hilbert_series(dc).to_string();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n " << dc.ground_set_size() << ", dim " << dc.dim() << ", "
              << (dc.is_pure() ? "pure" : "not pure") << ", f=" << fvector_string(dc.f_vector())
              << ", chi~=" << dc.reduced_euler() << ", " << nonfaces.size() << " nonfaces\n";
    std::cout << "hilbert series: " << hilbert_series(dc).to_string() << "\n";
    for (const auto& g : sorted_vertex_lists(nonfaces)) {
        std::cout << "nonface:";
        for (int v : g) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_betti(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    FieldSpec field = FieldSpec::parse(args.field_name);
    int guard = env_or(args.guard_n, kDefaultHochsterGuard);
    BettiTable t = hochster_betti(dc, field, guard);
    DepthReport d = depth_report(t, dc);
    if (args.json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r <= t.max_row(); ++r) {
            nlohmann::json cols;
            for (int i = 0; i <= t.projective_dimension(); ++i)
                if (t.at(i, i + r) != 0) cols[std::to_string(i)] = t.at(i, i + r);
            rows.push_back({{"regdeg", r}, {"cols", cols}});
        }
        nlohmann::json j = {{"field", field.to_string()},
                            {"pd", t.projective_dimension()},
                            {"rows", rows},
                            {"depth", d.depth},
                            {"dim", d.dim},
                            {"cohen_macaulay", d.cohen_macaulay}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << t.render();
    std::cout << "pd " << t.projective_dimension() << ", depth " << d.depth << ", dim " << d.dim
              << (d.cohen_macaulay ? ", Cohen-Macaulay" : ", not Cohen-Macaulay") << "\n";
    return 0;
}

int cmd_props(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    FieldSpec field = FieldSpec::parse(args.field_name);
    int guard = env_or(args.guard_n, kDefaultShellingGuard);

    nlohmann::json out = nlohmann::json::array();
    auto record = [&](const std::string& name, PropertyVerdict v) {
        if (!args.witness) v.witness = nlohmann::json();
        out.push_back(v.to_json(name));
    };
    record("cohen_macaulay", is_cohen_macaulay(dc, field));
    record("2cm", is_2cm(dc, field));
    record("gorenstein", is_gorenstein(dc, field));
    record("shifted", is_shifted(dc, args.any_labeling,
                                 env_or(args.guard_n, kDefaultLabelingGuard)));
    record("matroid", is_matroid(dc));
    if (dc.is_pure()) {
        record("shellable", is_shellable(dc, guard));
        record("extendably_shellable", is_extendably_shellable(dc, guard));
        record("vertex_decomposable", is_vertex_decomposable(dc, args.witness));
        record("weakly_vertex_decomposable",
               is_weakly_vertex_decomposable(dc, field, args.witness));
        record("partitionable", is_partitionable(dc, guard));
    }
    DepthReport d = depth_report(dc, field, env_or(args.guard_n, kDefaultHochsterGuard));
    if (d.cohen_macaulay) {
        PropertyVerdict lv;
        lv.value = is_level(dc, field);
        lv.field = field;
        record("level", lv);
    }

    if (args.json) {
        std::cout << nlohmann::json(out).dump(2) << "\n";
        return 0;
    }
    for (const auto& j : out) {
        std::cout << j.at("property").get<std::string>();
        if (j.contains("field")) std::cout << " [" << j.at("field").get<std::string>() << "]";
        std::cout << ": " << (j.at("value").get<bool>() ? "true" : "false");
        if (args.witness && j.contains("witness"))
            std::cout << "  witness " << j.at("witness").dump();
        std::cout << "\n";
    }
    return 0;
}

int cmd_glicci(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    FieldSpec field = FieldSpec::parse(args.field_name);
    try {
        GlicciCertificate cert = build_glicci_certificate(dc, field);
        nlohmann::json j = certificate_to_json(cert);
        if (args.json) {
            std::cout << j.dump(2) << "\n";
        } else {
            CertificateStats st = certificate_length_stats(cert);
            std::cout << "glicci certificate over " << field.to_string() << ": " << st.links
                      << " basic double links (" << 2 * st.links << " Gorenstein links), "
                      << st.peels << " cone peels\n";
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    } catch (const not_weakly_vertex_decomposable& e) {
        nlohmann::json j = {{"weakly_vertex_decomposable", false},
                            {"field", field.to_string()},
                            {"trace", wvd_trace_to_json(e.trace)}};
        if (args.json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "not weakly vertex-decomposable over " << field.to_string() << "\n";
            for (const auto& node : e.trace) {
                std::cout << "node:";
                for (const auto& f : node.facets) {
                    std::cout << " {";
                    for (std::size_t i = 0; i < f.size(); ++i)
                        std::cout << (i ? "," : "") << f[i];
                    std::cout << "}";
                }
                std::cout << "\n";
                for (const auto& entry : node.entries)
                    std::cout << "  k=" << entry.k << ": " << entry.reason << "\n";
            }
        }
        return 0;  // a mathematical negative, not an error
    }
}

int cmd_verify(const CommonArgs& args, const std::string& field_override,
               const std::string& complex_file) {
    std::ifstream in(args.file);
    if (!in) throw parse_error("cannot open '" + args.file + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("bad JSON in '" + args.file + "': " + e.what());
    }
    GlicciCertificate cert = certificate_from_json(j);
    if (!field_override.empty()) cert = with_field(cert, FieldSpec::parse(field_override));

    CertificateVerification v = verify_glicci_certificate(cert);
    if (v.valid && !complex_file.empty()) {
        SimplicialComplex dc = load_complex_file(complex_file);
        SquarefreeMonomialIdeal expected = stanley_reisner_ideal(dc);
        const SquarefreeMonomialIdeal& start =
            cert.steps.empty() ? cert.terminal : cert.steps.front().before;
        if (!(start == expected)) {
            v.valid = false;
            v.condition = "start";
            v.diagnostic = "certificate does not start at the complex's ideal";
        }
    }
    nlohmann::json out = {{"valid", v.valid}};
    if (!v.valid) {
        out["failed_step"] = v.failed_step;
        out["condition"] = v.condition;
        out["diagnostic"] = v.diagnostic;
    }
    if (args.json)
        std::cout << out.dump(2) << "\n";
    else if (v.valid)
        std::cout << "certificate valid\n";
    else
        std::cout << "certificate INVALID at step " << v.failed_step << " (condition "
                  << v.condition << "): " << v.diagnostic << "\n";
    return 0;
}

int cmd_stanley(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    FieldSpec field = FieldSpec::parse(args.field_name);
    DepthSdepthReport r =
        depth_vs_sdepth(dc, field, env_or(args.guard_n, kDefaultSdepthGuard));
    DecompositionCheck chk = verify_decomposition(dc, r.decomposition);
    nlohmann::json j = decomposition_to_json(r.decomposition);
    j["route"] = r.route;
    j["depth"] = r.depth;
    j["sdepth_lower_bound"] = r.sdepth_lower_bound;
    j["depth_le_sdepth"] = r.conjecture_holds;
    j["verified"] = chk.valid;
    if (args.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "route " << r.route << ", depth " << r.depth << ", sdepth >= "
              << r.sdepth_lower_bound << (r.conjecture_holds ? " (depth <= sdepth holds)" : "")
              << (chk.valid ? ", verified" : ", VERIFICATION FAILED: " + chk.diagnostic)
              << "\n";
    for (const auto& s : j.at("spaces"))
        std::cout << "space u=" << s.at("u").dump() << " Z=" << s.at("Z").dump() << "\n";
    return 0;
}

int cmd_partition(const CommonArgs& args) {
    SimplicialComplex dc = load_complex_file(args.file);
    PropertyVerdict v = is_partitionable(dc, env_or(args.guard_n, kDefaultShellingGuard));
    if (args.json) {
        std::cout << v.to_json("partitionable").dump(2) << "\n";
        return 0;
    }
    if (!v.value) {
        std::cout << "not partitionable\n";
        return 0;
    }
    // intervals sorted by (|G| descending, lexicographic)
    auto intervals = v.witness.at("intervals");
    std::vector<std::pair<std::vector<int>, std::vector<int>>> sorted;
    for (const auto& iv : intervals)
        sorted.emplace_back(iv.at("F").get<std::vector<int>>(),
                            iv.at("G").get<std::vector<int>>());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        return a.second < b.second || (a.second == b.second && a.first < b.first);
    });
    for (const auto& [f, g] : sorted) {
        std::cout << "[{";
        for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
        std::cout << "},{";
        for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
        std::cout << "}]\n";
    }
    return 0;
}

int cmd_census(int max_n, const std::string& fields_arg, bool json_out, int jobs,
               int guard_n) {
    CensusOptions opts;
    opts.max_n = max_n;
    opts.threads = jobs;
    opts.layer_guard = env_or(guard_n, opts.layer_guard);
    opts.fields.clear();
    std::string token;
    std::istringstream is(fields_arg);
    while (std::getline(is, token, ','))
        if (!token.empty()) opts.fields.push_back(FieldSpec::parse(token));
    if (opts.fields.empty()) throw invalid_field("census needs at least one field");

    CensusReport report = run_census(opts);
    if (json_out)
        std::cout << report.to_json().dump(2) << "\n";
    else {
        std::cout << "census max-n " << report.max_n << ": " << report.complexes
                  << " pure complexes, " << report.liaison_certificates << " certificates, "
                  << report.stanley_decompositions << " decompositions, "
                  << report.violations.size() << " violations (" << report.seconds << " s)\n";
        for (const auto& [k, v] : report.strictness)
            std::cout << "strictness " << k << ": " << v << "\n";
        for (const auto& v : report.violations) std::cout << "VIOLATION: " << v << "\n";
    }
    return report.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact liaison and Stanley decomposition toolkit for simplicial complexes"};
    app.require_subcommand(1);

    CommonArgs info_args, betti_args, props_args, glicci_args, verify_args, stanley_args,
        partition_args;
    std::string verify_field_override, verify_complex;
    int census_max_n = 6, census_jobs = 0, census_guard = 0;
    std::string census_fields = "q,gf:2,gf:3";
    bool census_json = false;

    add_common(app.add_subcommand("info", "basic invariants of a complex"), info_args, false);
    add_common(app.add_subcommand("betti", "graded Betti table via Hochster's formula"),
               betti_args);
    auto* props = app.add_subcommand("props", "all property recognizers");
    add_common(props, props_args);
    props->add_flag("--witness", props_args.witness, "include witnesses");
    props->add_flag("--any-labeling", props_args.any_labeling,
                    "try all labelings for shiftedness");
    add_common(app.add_subcommand("glicci", "build a glicci certificate"), glicci_args);
    auto* verify = app.add_subcommand("verify", "verify a certificate JSON file");
    verify->add_option("file", verify_args.file, "certificate JSON")->required();
    verify->add_option("--field", verify_field_override, "replay over this field");
    verify->add_option("--complex", verify_complex, "check the chain starts at this complex");
    verify->add_flag("--json", verify_args.json, "emit JSON");
    add_common(app.add_subcommand("stanley", "Stanley decomposition and depth report"),
               stanley_args);
    add_common(app.add_subcommand("partition", "facet-topped interval partition"),
               partition_args, false);
    auto* census = app.add_subcommand("census", "sweep all small pure complexes");
    census->add_option("--max-n", census_max_n, "largest vertex count (<= 7)");
    census->add_option("--fields", census_fields, "comma-separated field list");
    census->add_option("--jobs", census_jobs, "worker threads (0 = all)");
    census->add_option("--guard-n", census_guard, "override the layer guard");
    census->add_flag("--json", census_json, "emit JSON");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("info")) return cmd_info(info_args);
        if (app.got_subcommand("betti")) return cmd_betti(betti_args);
        if (app.got_subcommand("props")) return cmd_props(props_args);
        if (app.got_subcommand("glicci")) return cmd_glicci(glicci_args);
        if (app.got_subcommand("verify"))
            return cmd_verify(verify_args, verify_field_override, verify_complex);
        if (app.got_subcommand("stanley")) return cmd_stanley(stanley_args);
        if (app.got_subcommand("partition")) return cmd_partition(partition_args);
        if (app.got_subcommand("census"))
            return cmd_census(census_max_n, census_fields, census_json, census_jobs,
                              census_guard);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const glicci::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
