#include "glicci/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "glicci/betti.hpp"
#include "glicci/homology.hpp"
#include "glicci/ideal.hpp"
#include "glicci/io.hpp"
#include "glicci/liaison.hpp"
#include "glicci/recognizers.hpp"
#include "glicci/stanley.hpp"

namespace glicci {

namespace {

std::string complex_id(const SimplicialComplex& dc) {
    std::ostringstream os;
    os << "n=" << dc.ground_set_size() << " facets=";
    bool first = true;
    for (const auto& f : sorted_vertex_lists(dc.facets())) {
        if (!first) os << ';';
        first = false;
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
        if (f.empty()) os << "{}";
    }
    return os.str();
}

mask_t swap_adjacent_labels(mask_t x, int i) {
    mask_t lo = vertex_bit(i), hi = vertex_bit(i + 1);
    bool a = (x & lo) != 0, b = (x & hi) != 0;
    if (a != b) x ^= lo | hi;
    return x;
}

// Cheap necessary condition for canonicity: no adjacent label transposition
// may lower the sorted facet list.
bool survives_transposition_filter(const std::vector<mask_t>& facets, int m) {
    std::vector<mask_t> mapped(facets.size());
    for (int i = 1; i < m; ++i) {
        for (std::size_t t = 0; t < facets.size(); ++t)
            mapped[t] = swap_adjacent_labels(facets[t], i);
        std::sort(mapped.begin(), mapped.end());
        if (mapped < facets) return false;
    }
    return true;
}

// All k-subsets of [m] in increasing mask order.
std::vector<mask_t> subsets_of_size(int m, int k) {
    std::vector<mask_t> out;
    for (mask_t s = 0; s <= full_mask(m); ++s)
        if (popcount(s) == k) out.push_back(s);
    return out;
}

}  // namespace

std::vector<SimplicialComplex> enumerate_pure_complexes(int m, int layer_guard) {
    std::vector<SimplicialComplex> out;
    if (m == 0) {
        out.emplace_back(0, std::vector<mask_t>{0});
        return out;
    }
    for (int d = 0; d < m; ++d) {
        std::vector<mask_t> cands = subsets_of_size(m, d + 1);
        int c = static_cast<int>(cands.size());
        if (c > layer_guard)
            throw size_guard_exceeded("census layer m=" + std::to_string(m) + " d=" +
                                      std::to_string(d) + " has 2^" + std::to_string(c) +
                                      " facet sets");
        std::vector<mask_t> facets;
        for (std::uint64_t sm = 1; sm < (1ull << c); ++sm) {
            facets.clear();
            mask_t covered = 0;
            for (int j = 0; j < c; ++j)
                if ((sm >> j) & 1) {
                    facets.push_back(cands[static_cast<std::size_t>(j)]);
                    covered |= cands[static_cast<std::size_t>(j)];
                }
            if (covered != full_mask(m)) continue;
            if (!survives_transposition_filter(facets, m)) continue;
            SimplicialComplex dc(m, facets);
            auto canon = dc.canonical_facets();
            if (canon && *canon != dc.facets()) continue;
            out.push_back(std::move(dc));
        }
    }
    return out;
}

namespace {

struct ComplexResult {
    std::vector<std::string> violations;
    std::map<std::string, long long> strictness;
    long long certificates = 0;
    long long decompositions = 0;
    bool cm_not_shellable = false;
    bool wvd_not_2cm = false;
};

void check(bool condition, const std::string& name, const SimplicialComplex& dc,
           ComplexResult& res) {
    if (!condition) res.violations.push_back(name + " [" + complex_id(dc) + "]");
}

void run_liaison_checks(const SimplicialComplex& dc, const FieldSpec& field,
                        ComplexResult& res) {
    GlicciCertificate cert = build_glicci_certificate(dc, field);
    res.certificates++;
    CertificateVerification vr = verify_glicci_certificate(cert);
    check(vr.valid, "liaison: soundness (" + field.to_string() + "): " + vr.diagnostic, dc, res);

    CertificateStats stats = certificate_length_stats(cert);
    check(stats.links <= dc.vertex_count(), "liaison: link count over f_0", dc, res);

    // Descent and Cohen-Macaulayness along the chain.
    long long prev_faces = complex_of_ideal(stanley_reisner_ideal(dc)).face_count();
    for (const auto& step : cert.steps) {
        SimplicialComplex before = complex_of_ideal(step.before);
        SimplicialComplex after = complex_of_ideal(step.after);
        check(before.face_count() == prev_faces, "liaison: chain gluing", dc, res);
        long long after_faces = after.face_count();
        check(after_faces < prev_faces, "liaison: descent (" + field.to_string() + ")", dc, res);
        check(cohen_macaulay_value(before, field) && cohen_macaulay_value(after, field),
              "liaison: CM preservation (" + field.to_string() + ")", dc, res);
        prev_faces = after_faces;
    }

    // Deterministic rebuild, byte for byte.
    GlicciCertificate again = build_glicci_certificate(dc, field);
    check(certificate_to_json(cert).dump() == certificate_to_json(again).dump(),
          "liaison: determinism (" + field.to_string() + ")", dc, res);
}

void run_stanley_checks(const SimplicialComplex& dc, const FieldSpec& field, int depth,
                        ComplexResult& res) {
    StanleyDecomposition d = stanley_decomposition_2cm_codim3(dc, field);
    res.decompositions++;
    DecompositionCheck chk = verify_decomposition(dc, d);
    check(chk.valid, "stanley: 2cm-codim3 verification (" + field.to_string() + "): " +
                         chk.diagnostic,
          dc, res);
    check(sdepth_of(d) >= depth, "stanley: sdepth below depth (" + field.to_string() + ")", dc,
          res);
    for (const auto& s : d.spaces)
        check(std::binary_search(dc.facets().begin(), dc.facets().end(), s.z),
              "stanley: interval not facet-topped (" + field.to_string() + ")", dc, res);
}

ComplexResult evaluate_complex(const SimplicialComplex& dc,
                               const std::vector<FieldSpec>& fields, int shelling_guard) {
    ComplexResult res;
    int m = dc.ground_set_size();

    bool shifted = is_shifted(dc).value;
    bool matroid = is_matroid(dc).value;
    bool vd = is_vertex_decomposable(dc, false).value;
    PropertyVerdict shelling = is_shellable(dc, shelling_guard);
    bool ext_shellable = is_extendably_shellable(dc, shelling_guard).value;

    check(!vd || ext_shellable, "diagram: vertex-decomposable => extendably shellable", dc, res);
    check(!ext_shellable || shelling.value, "diagram: extendably shellable => shellable", dc, res);
    check(!matroid || vd, "diagram: matroid => vertex-decomposable", dc, res);

    if (shelling.value) {
        std::vector<mask_t> order;
        for (const auto& l : shelling.witness.at("order"))
            order.push_back(mask_of_vertices(l.get<std::vector<int>>(), m));
        check(check_shelling_order(dc, order), "witness: shelling replay", dc, res);
        IntervalPartition p = partition_from_shelling(dc, order);
        check(verify_decomposition(dc, decomposition_of_partition(p)).valid,
              "stanley: partition_from_shelling verification", dc, res);
    }

    // The colon/compose identities for every ground vertex.
    SquarefreeMonomialIdeal ideal = stanley_reisner_ideal(dc);
    check(complex_of_ideal(ideal) == dc, "identity: Stanley-Reisner round trip", dc, res);
    for (int k = 1; k <= m; ++k) {
        SquarefreeMonomialIdeal j = colon_by_variable(ideal, k);
        SquarefreeMonomialIdeal c = variable_free_part(ideal, k);
        check(j.contains(c), "identity: c contained in J at vertex " + std::to_string(k), dc, res);
        check(bdl_compose(j, c, k) == ideal,
              "identity: I = x_k J + c at vertex " + std::to_string(k), dc, res);
        check(colon_by_variable(bdl_compose(j, c, k), k) == ideal_sum(j, c),
              "identity: colon of the composition at vertex " + std::to_string(k), dc, res);
    }
    if (m + 1 <= kMaxGroundSet)
        check(codim_report(stanley_reisner_ideal(dc.cone(m + 1))).codim ==
                  codim_report(ideal).codim,
              "identity: codim invariance under coning", dc, res);

    int codim = codim_report(ideal).codim;

    for (const FieldSpec& field : fields) {
        const std::string tag = " (" + field.to_string() + ")";
        bool cm = is_cohen_macaulay(dc, field).value;
        BettiTable betti = hochster_betti(dc, field);
        DepthReport depth = depth_report(betti, dc);
        check(cm == depth.cohen_macaulay, "depth: Reisner route vs depth route" + tag, dc, res);

        HomologyProfile h = reduced_homology(dc, field);
        long long alt = 0;
        for (int i = -1; i <= h.top_index(); ++i)
            alt += (i % 2 == 0 ? 1 : -1) * h.at(i);
        check(alt == dc.reduced_euler(), "homology: Euler-Poincare identity" + tag, dc, res);

        // β_{1,j} counts the minimal non-faces of cardinality j.
        std::map<int, long long> nonface_counts;
        for (mask_t f : dc.minimal_nonfaces()) nonface_counts[popcount(f)]++;
        for (int j = 0; j <= dc.ground_set_size(); ++j) {
            long long expected = nonface_counts.contains(j) ? nonface_counts[j] : 0;
            check(betti.at(1, j) == expected,
                  "betti: beta_{1," + std::to_string(j) + "} vs minimal non-faces" + tag, dc, res);
        }

        // Depth through the skeleton route: 1 + the largest i whose
        // i-skeleton is Cohen-Macaulay.
        int skeleton_depth = -1;
        for (int i = -1; i <= dc.dim(); ++i)
            if (cohen_macaulay_value(dc.skeleton(i), field)) skeleton_depth = i + 1;
        check(skeleton_depth == depth.depth, "depth: skeleton depth oracle" + tag, dc, res);

        bool two_cm = is_2cm(dc, field).value;
        bool gorenstein = is_gorenstein(dc, field).value;
        PropertyVerdict wvd_verdict = is_weakly_vertex_decomposable(dc, field, true);
        bool wvd = wvd_verdict.value;
        if (wvd) {
            std::vector<std::pair<int, std::string>> seq;
            for (const auto& step : wvd_verdict.witness.at("sequence"))
                seq.emplace_back(step.at("k").get<int>(),
                                 step.at("branch").get<std::string>());
            check(replay_wvd_sequence(dc, field, seq), "witness: WVD sequence replay" + tag,
                  dc, res);
        }

        // Cones never satisfy the deletion condition of 2-CM (removing the
        // apex drops the dimension), so the diagram edges into 2-CM carry
        // the usual cone-free proviso (coloop-free matroids, core = whole).
        bool is_cone = false;
        for (int k : vertices_of_mask(dc.existing_vertices()))
            if (dc.is_cone_with_apex(k)) is_cone = true;

        check(!(gorenstein && !is_cone) || two_cm, "diagram: Gorenstein non-cone => 2-CM" + tag, dc,
              res);
        check(!two_cm || wvd, "diagram: 2-CM => weakly vertex-decomposable" + tag, dc, res);
        check(!wvd || cm, "diagram: weakly vertex-decomposable => CM" + tag, dc, res);
        check(!shelling.value || cm, "diagram: shellable => CM" + tag, dc, res);
        check(!(matroid && !is_cone) || two_cm, "diagram: matroid non-cone => 2-CM" + tag, dc, res);
        check(!(shifted && cm) || vd, "diagram: CM shifted => vertex-decomposable" + tag, dc, res);
        if (dc.dim() == m - 1 || dc.dim() == m - 2)
            check(wvd && cm, "diagram: high-dimensional pure complexes are WVD and CM" + tag, dc, res);
        if (cm) {
            bool level = is_level(dc, field);
            check(!two_cm || level, "diagram: 2-CM => level" + tag, dc, res);
        }

        if (field.is_rationals()) {
            if (cm && !shelling.value) {
                res.cm_not_shellable = true;
                res.strictness["cm_not_shellable"]++;
            }
            if (wvd && !two_cm) {
                res.wvd_not_2cm = true;
                res.strictness["wvd_not_2cm"]++;
            }
            if (two_cm && !gorenstein) res.strictness["2cm_not_gorenstein"]++;
        }

        if (wvd) run_liaison_checks(dc, field, res);
        if (two_cm && codim == 3) run_stanley_checks(dc, field, depth.depth, res);
    }

    if (shelling.value && !ext_shellable) res.strictness["shellable_not_extendably"]++;
    if (ext_shellable && !vd) res.strictness["extendably_not_vd"]++;
    if (vd && !matroid) res.strictness["vd_not_matroid"]++;
    return res;
}

}  // namespace

nlohmann::json CensusReport::to_json() const {
    return {{"max_n", max_n},
            {"fields", field_names},
            {"complexes", complexes},
            {"violations", violations},
            {"strictness", strictness},
            {"liaison_certificates", liaison_certificates},
            {"stanley_decompositions", stanley_decompositions},
            {"found_cm_not_shellable", found_cm_not_shellable},
            {"found_wvd_not_2cm", found_wvd_not_2cm},
            {"seconds", seconds}};
}

CensusReport run_census(const CensusOptions& options) {
    auto start = std::chrono::steady_clock::now();
    if (options.max_n > 7)
        throw size_guard_exceeded("census supports max-n <= 7");
    for (int m = 1; m <= options.max_n; ++m)
        for (int d = 0; d < m; ++d) {
            long long c = 1;
            for (int i = 0; i < d + 1; ++i) c = c * (m - i) / (i + 1);
            if (c > options.layer_guard)
                throw size_guard_exceeded(
                    "census layer m=" + std::to_string(m) + " d=" + std::to_string(d) +
                    " needs 2^" + std::to_string(c) +
                    " facet sets; raise the guard to force it");
        }

    std::vector<SimplicialComplex> complexes;
    for (int m = 0; m <= options.max_n; ++m) {
        auto layer = enumerate_pure_complexes(m, options.layer_guard);
        complexes.insert(complexes.end(), layer.begin(), layer.end());
    }

    int shelling_guard = 31;
    std::vector<ComplexResult> results(complexes.size());
    unsigned hw = std::thread::hardware_concurrency();
    int threads = options.threads > 0 ? options.threads : static_cast<int>(hw ? hw : 1);
    threads = std::max(1, std::min<int>(threads, static_cast<int>(complexes.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= complexes.size()) break;
            results[i] = evaluate_complex(complexes[i], options.fields, shelling_guard);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    CensusReport report;
    report.max_n = options.max_n;
    for (const auto& f : options.fields) report.field_names.push_back(f.to_string());
    report.complexes = static_cast<long long>(complexes.size());
    for (const auto& r : results) {
        report.violations.insert(report.violations.end(), r.violations.begin(),
                                 r.violations.end());
        for (const auto& [k, v] : r.strictness) report.strictness[k] += v;
        report.liaison_certificates += r.certificates;
        report.stanley_decompositions += r.decompositions;
        report.found_cm_not_shellable |= r.cm_not_shellable;
        report.found_wvd_not_2cm |= r.wvd_not_2cm;
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace glicci
