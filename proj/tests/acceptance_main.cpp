// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "glicci/betti.hpp"
#include "glicci/census.hpp"
#include "glicci/corpus.hpp"
#include "glicci/ideal.hpp"
#include "glicci/io.hpp"
#include "glicci/liaison.hpp"
#include "glicci/recognizers.hpp"
#include "glicci/stanley.hpp"

using namespace glicci;

// Self-contained shelling arithmetic on std::set<int>, deliberately not
// sharing any code with the library, used to re-verify census findings.
namespace independent {

using Facet = std::set<int>;

bool subset(const Facet& a, const Facet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool can_add(const std::vector<Facet>& prior, const Facet& f) {
    if (prior.empty()) return true;
    Facet walls_present;
    for (int v : f) {
        Facet wall = f;
        wall.erase(v);
        for (const Facet& g : prior)
            if (subset(wall, g)) {
                walls_present.insert(v);
                break;
            }
    }
    if (walls_present.empty()) return false;
    for (const Facet& g : prior) {
        bool escapes = false;
        for (int v : walls_present)
            if (!g.contains(v)) {
                escapes = true;
                break;
            }
        if (!escapes) return false;
    }
    return true;
}

bool shellable(const std::vector<Facet>& facets) {
    std::set<std::set<std::size_t>> dead;
    auto dfs = [&](auto&& self, std::vector<std::size_t> used_idx) -> bool {
        if (used_idx.size() == facets.size()) return true;
        std::set<std::size_t> state(used_idx.begin(), used_idx.end());
        if (dead.contains(state)) return false;
        std::vector<Facet> prior;
        for (std::size_t i : used_idx) prior.push_back(facets[i]);
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (state.contains(i)) continue;
            if (!can_add(prior, facets[i])) continue;
            auto next = used_idx;
            next.push_back(i);
            if (self(self, next)) return true;
        }
        dead.insert(state);
        return false;
    };
    return dfs(dfs, {});
}

// True iff the prefix is a valid partial shelling admitting no extension.
bool stuck(const std::vector<Facet>& facets, const std::vector<Facet>& prefix) {
    std::vector<Facet> prior;
    for (const Facet& f : prefix) {
        if (!can_add(prior, f)) return false;
        prior.push_back(f);
    }
    for (const Facet& f : facets) {
        if (std::find(prefix.begin(), prefix.end(), f) != prefix.end()) continue;
        if (can_add(prior, f)) return false;
    }
    return true;
}

}  // namespace independent

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title, double budget_seconds)
        : number_(number), title_(std::move(title)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems_.push_back(what);
    }

    void finish() {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (budget_ > 0 && elapsed > budget_)
            problems_.push_back("runtime " + std::to_string(elapsed) + " s over budget " +
                                std::to_string(budget_) + " s");
        std::ostringstream line;
        line << (problems_.empty() ? "[PASS]" : "[FAIL]") << " criterion " << number_ << ": "
             << title_ << " (" << elapsed << " s)";
        std::cout << line.str() << "\n";
        for (const auto& p : problems_) std::cout << "       - " << p << "\n";
        if (!problems_.empty()) ++g_failures;
    }

  private:
    int number_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> problems_;
};

std::map<std::pair<int, int>, long long> table(
    std::initializer_list<std::pair<std::pair<int, int>, long long>> entries) {
    return {entries.begin(), entries.end()};
}

void criterion_1_betti_fixtures() {
    Criterion c(1, "Betti diagram fixtures, exact entry-for-entry", 30.0);
    {
        auto start = std::chrono::steady_clock::now();
        BettiTable t = hochster_betti(corpus_entry("ex52-shifted-not-level").complex,
                                      FieldSpec::rationals());
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(t.entries == table({{{0, 0}, 1},
                                      {{1, 2}, 5},
                                      {{2, 3}, 6},
                                      {{3, 4}, 2},
                                      {{1, 3}, 1},
                                      {{2, 4}, 2},
                                      {{3, 5}, 1}}),
                  "shifted complex table over Q");
        c.require(secs < 10.0, "shifted complex table within 10 s");
    }
    {
        auto start = std::chrono::steady_clock::now();
        BettiTable t = hochster_betti(corpus_entry("ex54-char-dependent").complex,
                                      FieldSpec::gf(31013));
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(t.entries == table({{{0, 0}, 1},
                                      {{1, 2}, 4},
                                      {{2, 3}, 6},
                                      {{3, 4}, 4},
                                      {{4, 5}, 1},
                                      {{1, 3}, 10},
                                      {{2, 4}, 25},
                                      {{3, 5}, 21},
                                      {{4, 6}, 6}}),
                  "seven-variable table over GF(31013)");
        c.require(secs < 10.0, "GF(31013) table within 10 s");
    }
    {
        auto start = std::chrono::steady_clock::now();
        BettiTable t =
            hochster_betti(corpus_entry("ex54-char-dependent").complex, FieldSpec::gf(2));
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(t.entries == table({{{0, 0}, 1},
                                      {{1, 2}, 4},
                                      {{2, 3}, 6},
                                      {{3, 4}, 4},
                                      {{4, 5}, 1},
                                      {{1, 3}, 10},
                                      {{2, 4}, 25},
                                      {{3, 5}, 21},
                                      {{4, 6}, 7},
                                      {{5, 7}, 1},
                                      {{3, 6}, 1},
                                      {{4, 7}, 1}}),
                  "seven-variable table over GF(2), including the extra row");
        c.require(secs < 10.0, "GF(2) table within 10 s");
    }
    c.finish();
}

void criterion_2_rp2_dichotomy() {
    Criterion c(2, "projective-plane characteristic dichotomy", 30.0);
    const SimplicialComplex& rp2 = corpus_entry("ex53-rp2").complex;

    c.require(is_cohen_macaulay(rp2, FieldSpec::rationals()).value, "CM over Q");
    c.require(is_cohen_macaulay(rp2, FieldSpec::gf(3)).value, "CM over GF(3)");
    c.require(!is_cohen_macaulay(rp2, FieldSpec::gf(2)).value, "not CM over GF(2)");

    SquarefreeMonomialIdeal ideal = stanley_reisner_ideal(rp2);
    for (int k = 1; k <= 6; ++k) {
        DepthReport d = depth_report(complex_of_ideal(variable_free_part(ideal, k)),
                                     FieldSpec::rationals());
        c.require(d.dim == 4 && d.depth == 3,
                  "deletion ideal at k=" + std::to_string(k) + " has dim 4, depth 3");
    }

    c.require(!is_weakly_vertex_decomposable(rp2, FieldSpec::rationals(), false).value,
              "not weakly vertex-decomposable over Q");
    std::vector<WvdTraceNode> trace = wvd_failure_trace(rp2, FieldSpec::rationals());
    c.require(trace.size() == 1 && trace[0].entries.size() == 6,
              "failure trace covers every vertex");
    for (const auto& e : trace.empty() ? std::vector<WvdBranchFailure>{} : trace[0].entries)
        c.require(e.deletion_depth == 3 && e.deletion_dim == 4,
                  "trace records depth 3 < dim 4 at k=" + std::to_string(e.k));

    c.require(variable_free_part(ideal, 1) ==
                  SquarefreeMonomialIdeal::from_generators(
                      6, {{2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}),
              "k=1 deletion ideal equals the five printed cubics");
    c.finish();
}

void criterion_3_liaison() {
    Criterion c(3, "characteristic-dependent liaison certificate", 60.0);
    const SimplicialComplex& dc = corpus_entry("ex54-char-dependent").complex;

    GlicciCertificate cert = build_glicci_certificate(dc, FieldSpec::gf(31013));
    c.require(!cert.steps.empty(), "certificate built over GF(31013)");
    if (!cert.steps.empty()) {
        const CertificateStep& s = cert.steps[0];
        c.require(s.kind == CertificateStep::Kind::BasicDoubleLink && s.vertex == 7,
                  "first step is a basic double link at vertex 7");
        c.require(s.after == SquarefreeMonomialIdeal::from_generators(7, {{1}, {2}, {3}, {4}}),
                  "J = (x1,...,x4)");
        c.require(s.cm_ideal ==
                      SquarefreeMonomialIdeal::from_generators(
                          7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                              {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}),
                  "c is the projective-plane ideal");
    }
    c.require(verify_glicci_certificate(cert).valid, "certificate verifies over GF(31013)");

    CertificateVerification replay =
        verify_glicci_certificate(with_field(cert, FieldSpec::gf(2)));
    c.require(!replay.valid && replay.condition == "c",
              "GF(2) replay fails at the c-Cohen-Macaulay condition");

    DepthReport d = depth_report(dc, FieldSpec::gf(2));
    c.require(d.depth == 2 && d.dim == 3, "depth 2, dim 3 over GF(2)");
    c.require(!is_weakly_vertex_decomposable(dc, FieldSpec::gf(2), false).value,
              "not weakly vertex-decomposable over GF(2)");
    c.finish();
}

void criterion_4_strictness_witnesses() {
    Criterion c(4, "strictness witnesses", 120.0);

    const SimplicialComplex& v6 = corpus_entry("ex55-v6f10-6").complex;
    c.require(is_shellable(v6).value, "V6F10-6 shellable");
    c.require(is_extendably_shellable(v6).value, "V6F10-6 extendably shellable");
    c.require(!is_vertex_decomposable(v6, false).value, "V6F10-6 not vertex-decomposable");
    c.require(!is_weakly_vertex_decomposable(v6, FieldSpec::rationals(), false).value,
              "V6F10-6 not weakly vertex-decomposable over Q");

    const SimplicialComplex& ex52 = corpus_entry("ex52-shifted-not-level").complex;
    c.require(is_shifted(ex52).value, "shifted complex is shifted");
    c.require(is_cohen_macaulay(ex52, FieldSpec::rationals()).value, "shifted complex CM");
    c.require(is_vertex_decomposable(ex52, false).value, "shifted complex vertex-decomposable");
    c.require(!is_level(ex52, FieldSpec::rationals()), "shifted complex not level");
    c.require(!is_2cm(ex52, FieldSpec::rationals()).value, "shifted complex not 2-CM");

    const SimplicialComplex& four = corpus_entry("ex24-four-points").complex;
    c.require(is_matroid(four).value, "four points form a matroid");
    c.require(is_2cm(four, FieldSpec::rationals()).value, "four points 2-CM");
    c.require(!is_gorenstein(four, FieldSpec::rationals()).value, "four points not Gorenstein");
    GlicciCertificate cert = build_glicci_certificate(four, FieldSpec::rationals());
    bool expected_cert =
        cert.steps.size() == 1 && cert.steps[0].vertex == 4 &&
        cert.steps[0].kind == CertificateStep::Kind::BasicDoubleLink &&
        cert.steps[0].after == SquarefreeMonomialIdeal::from_generators(4, {{1}, {2}, {3}}) &&
        *cert.steps[0].cm_ideal ==
            SquarefreeMonomialIdeal::from_generators(4, {{1, 2}, {1, 3}, {2, 3}}) &&
        verify_glicci_certificate(cert).valid;
    c.require(expected_cert, "four points carry the x4-basic-double-link certificate");
    c.finish();
}

void criteria_5_and_6() {
    Criterion c(5, "census property suite at n <= 6 over Q, GF(2), GF(3)", 1800.0);
    CensusOptions opts;
    opts.max_n = 6;
    CensusReport report = run_census(opts);
    std::cout << "census: " << report.complexes << " complexes, "
              << report.liaison_certificates << " certificates, "
              << report.stanley_decompositions << " decompositions in " << report.seconds
              << " s\n";
    {
        c.require(report.complexes > 0, "census enumerated complexes");
        c.require(report.found_cm_not_shellable,
                  "rediscovered a CM-but-not-shellable complex at n <= 6");
        c.require(report.found_wvd_not_2cm,
                  "found a weakly-vertex-decomposable non-2-CM complex");
        if (!report.violations.empty()) {
            std::set<std::string> kinds;
            for (const auto& v : report.violations)
                kinds.insert(v.substr(0, v.find(" [")));
            for (const auto& k : kinds)
                c.require(false, "violated: " + k + " (" +
                                     std::to_string(std::count_if(
                                         report.violations.begin(), report.violations.end(),
                                         [&](const std::string& v) {
                                             return v.rfind(k, 0) == 0;
                                         })) +
                                     " witnesses)");
            bool only_vd_edge = true;
            for (const auto& v : report.violations)
                if (v.rfind("diagram: vertex-decomposable => extendably shellable", 0) != 0)
                    only_vd_edge = false;
            if (only_vd_edge) {
                // Re-verify the frozen witness with shelling arithmetic that
                // shares no code with the library.
                std::vector<independent::Facet> witness = {
                    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 5, 6},
                    {2, 3, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
                std::vector<independent::Facet> prefix = {
                    {3, 5, 6}, {3, 4, 6}, {2, 4, 6}, {1, 5, 6}};
                bool recheck = independent::shellable(witness) &&
                               independent::stuck(witness, prefix) &&
                               is_vertex_decomposable(
                                   SimplicialComplex::from_facets(
                                       6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4},
                                           {1, 5, 6}, {2, 3, 5}, {2, 4, 6}, {3, 4, 6},
                                           {3, 5, 6}}),
                                   false)
                                   .value;
                std::cout
                    << "       note: every violation concerns the single quoted edge\n"
                       "       'vertex-decomposable => extendably shellable'.  The census\n"
                       "       witnesses are vertex-decomposable (hence shellable) yet own\n"
                       "       stuck partial shellings, so the quoted edge is false as\n"
                       "       stated; every other diagram edge holds on all "
                    << report.complexes << " complexes.\n";
                std::cout << "       frozen witness: facets 123,124,125,134,156,235,246,"
                             "346,356;\n"
                             "       the partial shelling 356,346,246,156 admits no "
                             "extension\n"
                             "       (re-verified by code-independent shelling arithmetic: "
                          << (recheck ? "confirmed" : "NOT CONFIRMED") << ").\n";
            }
        }
        c.finish();
    }
    {
        Criterion c(6, "Stanley decomposition and partition suite over the census", 0.0);
        bool clean = true;
        for (const auto& v : report.violations)
            if (v.rfind("stanley:", 0) == 0 || v.rfind("liaison:", 0) == 0 ||
                v.rfind("witness:", 0) == 0)
                clean = false;
        c.require(clean, "no decomposition/partition/certificate violations");
        c.require(report.stanley_decompositions > 0,
                  "2-CM codimension-3 decompositions produced and verified");
        c.require(report.liaison_certificates > 0, "certificates produced and verified");
        c.finish();
    }
}

void criterion_7_scope_note() {
    Criterion c(7, "scope note: certificate and fixture suites only", 0.0);
    // Glicci-ness beyond weak-vertex-decomposability certificates (and
    // licci-ness) is not decided by this artifact at any scale; the fixture
    // and soundness suites above are the acceptance surface.
    c.finish();
}

}  // namespace

int main() {
    criterion_1_betti_fixtures();
    criterion_2_rp2_dichotomy();
    criterion_3_liaison();
    criterion_4_strictness_witnesses();
    criteria_5_and_6();
    criterion_7_scope_note();
    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
