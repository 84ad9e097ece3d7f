#include "glicci/corpus.hpp"

#include "glicci/betti.hpp"
#include "glicci/ideal.hpp"
#include "glicci/recognizers.hpp"

namespace glicci {

namespace {

const std::vector<std::vector<int>> kRp2Generators = {
    {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
    {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};

SimplicialComplex from_ideal_generators(int n, const std::vector<std::vector<int>>& gens) {
    return complex_of_ideal(SquarefreeMonomialIdeal::from_generators(n, gens));
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e;
        e.id = "ex24-four-points";
        e.complex = from_ideal_generators(
            4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
        e.provenance = "four isolated vertices; the uniform matroid U(1,4)";
        e.expected = {{{"matroid", ""}, true},       {{"vertex_decomposable", ""}, true},
                      {{"cohen_macaulay", "q"}, true}, {{"2cm", "q"}, true},
                      {{"2cm", "gf:2"}, true},       {{"2cm", "gf:3"}, true},
                      {{"gorenstein", "q"}, false},  {{"weakly_vertex_decomposable", "q"}, true},
                      {{"level", "q"}, true}};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex52-shifted-not-level";
        e.complex = from_ideal_generators(
            5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4, 5}});
        e.provenance = "shifted one-dimensional complex whose quotient is not level";
        e.expected = {{{"shifted", ""}, true},
                      {{"cohen_macaulay", "q"}, true},
                      {{"level", "q"}, false},
                      {{"2cm", "q"}, false},
                      {{"vertex_decomposable", ""}, true},
                      {{"weakly_vertex_decomposable", "q"}, true}};
        e.expected_betti["q"] = {{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 2},
                                 {{1, 3}, 1}, {{2, 4}, 2}, {{3, 5}, 1}};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex53-rp2";
        e.complex = from_ideal_generators(6, kRp2Generators);
        e.provenance =
            "the six-vertex triangulation of the real projective plane (Bruns-Herzog, p. 236)";
        e.expected = {{{"cohen_macaulay", "q"}, true},
                      {{"cohen_macaulay", "gf:3"}, true},
                      {{"cohen_macaulay", "gf:2"}, false},
                      {{"weakly_vertex_decomposable", "q"}, false},
                      {{"shellable", ""}, false},
                      {{"gorenstein", "q"}, false}};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex54-char-dependent";
        std::vector<std::vector<int>> gens = kRp2Generators;
        for (int i = 1; i <= 4; ++i) gens.push_back({i, 7});
        e.complex = from_ideal_generators(7, gens);
        e.provenance =
            "x7·(x1..x4) + the projective-plane ideal; weak decomposability flips with the "
            "characteristic";
        e.expected = {{{"weakly_vertex_decomposable", "gf:31013"}, true},
                      {{"weakly_vertex_decomposable", "gf:2"}, false},
                      {{"cohen_macaulay", "gf:31013"}, true},
                      {{"cohen_macaulay", "gf:2"}, false}};
        e.expected_betti["gf:31013"] = {{{0, 0}, 1},  {{1, 2}, 4},  {{2, 3}, 6},
                                        {{3, 4}, 4},  {{4, 5}, 1},  {{1, 3}, 10},
                                        {{2, 4}, 25}, {{3, 5}, 21}, {{4, 6}, 6}};
        e.expected_betti["gf:2"] = {{{0, 0}, 1},  {{1, 2}, 4},  {{2, 3}, 6},  {{3, 4}, 4},
                                    {{4, 5}, 1},  {{1, 3}, 10}, {{2, 4}, 25}, {{3, 5}, 21},
                                    {{4, 6}, 7},  {{5, 7}, 1},  {{3, 6}, 1},  {{4, 7}, 1}};
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "ex55-v6f10-6";
        e.complex = from_ideal_generators(
            6, {{1, 2, 6}, {1, 3, 5}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6},
                {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6}, {3, 4, 5}});
        e.provenance = "Moriyama-Takeuchi V6F10-6: extendably shellable, not "
                       "vertex-decomposable";
        e.expected = {{{"shellable", ""}, true},
                      {{"extendably_shellable", ""}, true},
                      {{"vertex_decomposable", ""}, false},
                      {{"weakly_vertex_decomposable", "q"}, false}};
        entries.push_back(std::move(e));
    }
    return entries;
}

bool evaluate_property(const CorpusEntry& entry, const std::string& property,
                       const std::string& field_name) {
    const SimplicialComplex& dc = entry.complex;
    if (property == "matroid") return is_matroid(dc).value;
    if (property == "shifted") return is_shifted(dc).value;
    if (property == "vertex_decomposable") return is_vertex_decomposable(dc, false).value;
    if (property == "shellable") return is_shellable(dc).value;
    if (property == "extendably_shellable") return is_extendably_shellable(dc).value;
    FieldSpec field = FieldSpec::parse(field_name);
    if (property == "cohen_macaulay") return is_cohen_macaulay(dc, field).value;
    if (property == "2cm") return is_2cm(dc, field).value;
    if (property == "gorenstein") return is_gorenstein(dc, field).value;
    if (property == "weakly_vertex_decomposable")
        return is_weakly_vertex_decomposable(dc, field, false).value;
    if (property == "level") return is_level(dc, field);
    throw error("unknown corpus property '" + property + "'");
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus())
        if (e.id == id) return e;
    throw error("no corpus entry '" + id + "'");
}

std::vector<std::string> corpus_selftest() {
    std::vector<std::string> mismatches;
    for (const auto& e : corpus()) {
        for (const auto& [key, expected] : e.expected) {
            bool actual = evaluate_property(e, key.first, key.second);
            if (actual != expected)
                mismatches.push_back(e.id + ": " + key.first +
                                     (key.second.empty() ? "" : " over " + key.second) +
                                     " = " + (actual ? "true" : "false") + ", expected " +
                                     (expected ? "true" : "false"));
        }
        for (const auto& [field_name, table] : e.expected_betti) {
            BettiTable actual = hochster_betti(e.complex, FieldSpec::parse(field_name));
            if (actual.entries != table)
                mismatches.push_back(e.id + ": Betti table over " + field_name + " differs");
        }
    }
    return mismatches;
}

}  // namespace glicci
