#include "glicci/recognizers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#include "glicci/betti.hpp"
#include "glicci/homology.hpp"

namespace glicci {

namespace {

std::vector<std::vector<int>> facet_vertex_lists(const SimplicialComplex& dc) {
    std::vector<std::vector<int>> out;
    out.reserve(dc.facets().size());
    for (mask_t f : dc.facets()) out.push_back(vertices_of_mask(f));
    std::sort(out.begin(), out.end());
    return out;
}

// Boolean memo keyed on (canonical facet list, field characteristic);
// concurrent-read / exclusive-insert.
class VerdictCache {
  public:
    std::optional<bool> get(const std::string& key) {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::string& key, bool value) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, value);
    }
    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

  private:
    std::shared_mutex mutex_;
    std::unordered_map<std::string, bool> map_;
};

VerdictCache g_cm_cache;
VerdictCache g_vd_cache;
VerdictCache g_wvd_cache;

std::string memo_key(const SimplicialComplex& dc, std::uint32_t characteristic) {
    auto canon = dc.canonical_facets();
    if (!canon) return {};
    std::string key;
    key.reserve(4 * canon->size() + 4);
    auto push32 = [&key](std::uint32_t v) {
        for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    };
    push32(characteristic);
    for (mask_t f : *canon) push32(f);
    return key;
}

bool reisner_cohen_macaulay(const SimplicialComplex& dc, const FieldSpec& field,
                            mask_t* bad_face = nullptr, int* bad_i = nullptr) {
    for (mask_t f : dc.faces()) {
        SimplicialComplex lk = dc.link(f);
        // Links of dimension ≤ 0 are nonvoid with a vertex or {∅}; nothing
        // below top dimension can be nonzero.
        if (lk.dim() <= 0) continue;
        HomologyProfile h = reduced_homology(lk, field);
        for (int i = -1; i < lk.dim(); ++i) {
            if (h.at(i) != 0) {
                if (bad_face) *bad_face = f;
                if (bad_i) *bad_i = i;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

void clear_recognizer_caches() {
    g_cm_cache.clear();
    g_vd_cache.clear();
    g_wvd_cache.clear();
}

nlohmann::json PropertyVerdict::to_json(const std::string& property) const {
    nlohmann::json j;
    j["property"] = property;
    if (field) j["field"] = field->to_string();
    j["value"] = value;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

bool cohen_macaulay_value(const SimplicialComplex& dc, const FieldSpec& field) {
    std::string key = memo_key(dc, field.characteristic());
    if (!key.empty()) {
        if (auto hit = g_cm_cache.get(key)) return *hit;
    }
    bool value = reisner_cohen_macaulay(dc, field);
    if (!key.empty()) g_cm_cache.put(key, value);
    return value;
}

PropertyVerdict is_cohen_macaulay(const SimplicialComplex& dc, const FieldSpec& field) {
    PropertyVerdict v;
    v.field = field;
    mask_t bad_face = 0;
    int bad_i = 0;
    v.value = reisner_cohen_macaulay(dc, field, &bad_face, &bad_i);
    if (!v.value) v.witness = {{"face", vertices_of_mask(bad_face)}, {"i", bad_i}};
    return v;
}

PropertyVerdict is_2cm(const SimplicialComplex& dc, const FieldSpec& field) {
    PropertyVerdict v;
    v.field = field;
    if (!cohen_macaulay_value(dc, field)) {
        v.value = false;
        v.witness = {{"reason", "not_cm"}};
        return v;
    }
    for (int k : vertices_of_mask(dc.existing_vertices())) {
        SimplicialComplex del = dc.deletion(vertex_bit(k));
        if (del.dim() != dc.dim() || !cohen_macaulay_value(del, field)) {
            v.value = false;
            v.witness = {{"k", k}};
            return v;
        }
    }
    v.value = true;
    return v;
}

PropertyVerdict is_gorenstein(const SimplicialComplex& dc, const FieldSpec& field) {
    PropertyVerdict v;
    v.field = field;
    mask_t apexes = full_mask(dc.ground_set_size());
    for (mask_t f : dc.facets()) apexes &= f;
    SimplicialComplex core = dc.restriction(dc.existing_vertices() & ~apexes);

    for (mask_t f : core.faces()) {
        SimplicialComplex lk = core.link(f);
        HomologyProfile h = reduced_homology(lk, field);
        for (int i = -1; i <= lk.dim(); ++i) {
            long long want = (i == lk.dim()) ? 1 : 0;
            if (h.at(i) != want) {
                v.value = false;
                v.witness = {{"face", vertices_of_mask(f)}, {"i", i}, {"dim_h", h.at(i)}};
                return v;
            }
        }
    }
    v.value = true;
    return v;
}

namespace {

bool shifted_for_labeling(const SimplicialComplex& dc, const std::vector<int>& relabel,
                          mask_t* bad_f, int* bad_j, int* bad_i) {
    int n = dc.ground_set_size();
    // image of a face under the relabeling
    auto map_face = [&](mask_t f) {
        mask_t img = 0;
        for (int v : vertices_of_mask(f)) img |= vertex_bit(relabel[static_cast<std::size_t>(v)]);
        return img;
    };
    std::vector<mask_t> mapped;
    mapped.reserve(dc.faces().size());
    for (mask_t f : dc.faces()) mapped.push_back(map_face(f));
    std::sort(mapped.begin(), mapped.end());
    auto is_mapped_face = [&](mask_t f) {
        return std::binary_search(mapped.begin(), mapped.end(), f);
    };
    for (mask_t f : mapped) {
        for (int j : vertices_of_mask(f)) {
            for (int i = j + 1; i <= n; ++i) {
                if (contains_vertex(f, i)) continue;
                mask_t g = (f & ~vertex_bit(j)) | vertex_bit(i);
                if (!is_mapped_face(g)) {
                    if (bad_f) *bad_f = f;
                    if (bad_j) *bad_j = j;
                    if (bad_i) *bad_i = i;
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

PropertyVerdict is_shifted(const SimplicialComplex& dc, bool any_labeling, int labeling_guard) {
    int n = dc.ground_set_size();
    std::vector<int> identity(static_cast<std::size_t>(n) + 1);
    std::iota(identity.begin(), identity.end(), 0);

    PropertyVerdict v;
    if (!any_labeling) {
        mask_t f = 0;
        int j = 0, i = 0;
        v.value = shifted_for_labeling(dc, identity, &f, &j, &i);
        if (!v.value) v.witness = {{"F", vertices_of_mask(f)}, {"j", j}, {"i", i}};
        return v;
    }
    if (n > labeling_guard)
        throw size_guard_exceeded("is_shifted any-labeling guard: n = " + std::to_string(n));
    std::vector<int> perm(identity.begin() + 1, identity.end());
    do {
        std::vector<int> relabel(static_cast<std::size_t>(n) + 1, 0);
        for (int v2 = 1; v2 <= n; ++v2)
            relabel[static_cast<std::size_t>(v2)] = perm[static_cast<std::size_t>(v2 - 1)];
        if (shifted_for_labeling(dc, relabel, nullptr, nullptr, nullptr)) {
            v.value = true;
            v.witness = {{"labeling", perm}};
            return v;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.value = false;
    return v;
}

PropertyVerdict is_matroid(const SimplicialComplex& dc) {
    PropertyVerdict v;
    auto scan_witness = [&]() {
        for (mask_t w = 0; w <= full_mask(dc.ground_set_size()); ++w)
            if (!dc.restriction(w).is_pure()) return w;
        throw error("matroid exchange failed but every restriction is pure");
    };
    if (!dc.is_pure()) {
        v.value = false;
        v.witness = {{"W", vertices_of_mask(scan_witness())}};
        return v;
    }
    const auto& bases = dc.facets();
    auto is_basis = [&](mask_t b) { return std::binary_search(bases.begin(), bases.end(), b); };
    for (mask_t b1 : bases) {
        for (mask_t b2 : bases) {
            mask_t only1 = b1 & ~b2;
            for (int x : vertices_of_mask(only1)) {
                bool exchanged = false;
                for (int y : vertices_of_mask(b2 & ~b1)) {
                    if (is_basis((b1 & ~vertex_bit(x)) | vertex_bit(y))) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged) {
                    v.value = false;
                    v.witness = {{"W", vertices_of_mask(scan_witness())}};
                    return v;
                }
            }
        }
    }
    v.value = true;
    return v;
}

namespace {

// Adding facet `idx` to the partial shelling `used` keeps it a shelling iff
// the intersection with the prior complex is pure of codimension one in the
// new facet.
struct ShellingContext {
    const std::vector<mask_t>& facets;

    bool can_add(std::uint32_t used, int idx) const {
        if (used == 0) return true;
        mask_t f = facets[static_cast<std::size_t>(idx)];
        mask_t m = 0;
        for (int v : vertices_of_mask(f)) {
            mask_t sub = f & ~vertex_bit(v);
            for (std::size_t j = 0; j < facets.size(); ++j)
                if ((used >> j) & 1) {
                    if ((sub & facets[j]) == sub) {
                        m |= vertex_bit(v);
                        break;
                    }
                }
        }
        if (m == 0) return false;
        for (std::size_t j = 0; j < facets.size(); ++j)
            if ((used >> j) & 1) {
                if ((m & ~facets[j]) == 0) return false;
            }
        return true;
    }
};

}  // namespace

bool check_shelling_order(const SimplicialComplex& dc, const std::vector<mask_t>& order) {
    const auto& facets = dc.facets();
    if (order.size() > facets.size()) return false;
    std::vector<bool> seen(facets.size(), false);
    ShellingContext ctx{facets};
    std::uint32_t used = 0;
    for (mask_t f : order) {
        auto it = std::lower_bound(facets.begin(), facets.end(), f);
        if (it == facets.end() || *it != f) return false;
        int idx = static_cast<int>(it - facets.begin());
        if (seen[static_cast<std::size_t>(idx)]) return false;
        if (!ctx.can_add(used, idx)) return false;
        seen[static_cast<std::size_t>(idx)] = true;
        used |= std::uint32_t{1} << idx;
    }
    return true;
}

PropertyVerdict is_shellable(const SimplicialComplex& dc, int facet_guard) {
    if (!dc.is_pure()) throw not_pure("is_shellable requires a pure complex");
    int t = static_cast<int>(dc.facets().size());
    if (t > facet_guard || t > 31)
        throw size_guard_exceeded("is_shellable guard: " + std::to_string(t) + " facets");

    ShellingContext ctx{dc.facets()};
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order;
    std::uint32_t all = (t == 31) ? 0x7fffffffu : ((std::uint32_t{1} << t) - 1);

    auto dfs = [&](auto&& self, std::uint32_t used) -> bool {
        if (used == all) return true;
        if (dead.contains(used)) return false;
        for (int idx = 0; idx < t; ++idx) {
            if ((used >> idx) & 1) continue;
            if (!ctx.can_add(used, idx)) continue;
            order.push_back(idx);
            if (self(self, used | (std::uint32_t{1} << idx))) return true;
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };

    PropertyVerdict v;
    v.value = dfs(dfs, 0);
    if (v.value) {
        nlohmann::json w = nlohmann::json::array();
        for (int idx : order) w.push_back(vertices_of_mask(dc.facets()[static_cast<std::size_t>(idx)]));
        v.witness = {{"order", w}};
    }
    return v;
}

PropertyVerdict is_extendably_shellable(const SimplicialComplex& dc, int facet_guard) {
    if (!dc.is_pure()) throw not_pure("is_extendably_shellable requires a pure complex");
    int t = static_cast<int>(dc.facets().size());
    if (t > facet_guard || t > 31)
        throw size_guard_exceeded("is_extendably_shellable guard: " + std::to_string(t) +
                                  " facets");

    ShellingContext ctx{dc.facets()};
    std::uint32_t all = (t == 31) ? 0x7fffffffu : ((std::uint32_t{1} << t) - 1);
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, int>> parent;
    std::vector<std::uint32_t> todo{0};
    parent[0] = {0, -1};

    PropertyVerdict v;
    while (!todo.empty()) {
        std::uint32_t s = todo.back();
        todo.pop_back();
        if (s == all) continue;
        bool any_move = false;
        for (int idx = 0; idx < t; ++idx) {
            if ((s >> idx) & 1) continue;
            if (!ctx.can_add(s, idx)) continue;
            any_move = true;
            std::uint32_t ns = s | (std::uint32_t{1} << idx);
            if (!parent.contains(ns)) {
                parent[ns] = {s, idx};
                todo.push_back(ns);
            }
        }
        if (!any_move) {
            // A partial shelling that admits no extension at all.
            std::vector<int> path;
            for (std::uint32_t cur = s; cur != 0; cur = parent[cur].first)
                path.push_back(parent[cur].second);
            std::reverse(path.begin(), path.end());
            nlohmann::json w = nlohmann::json::array();
            for (int idx : path)
                w.push_back(vertices_of_mask(dc.facets()[static_cast<std::size_t>(idx)]));
            v.value = false;
            v.witness = {{"stuck_prefix", w}};
            return v;
        }
    }
    v.value = true;
    return v;
}

namespace {

bool vd_value_inner(const SimplicialComplex& dc) {
    if (dc.facets().size() == 1) return true;
    std::string key = memo_key(dc, 0xffffffffu);
    if (!key.empty()) {
        if (auto hit = g_vd_cache.get(key)) return *hit;
    }
    bool value = false;
    for (int k : vertices_of_mask(dc.existing_vertices())) {
        SimplicialComplex del = dc.deletion(vertex_bit(k));
        if (del.dim() != dc.dim() || !del.is_pure()) continue;
        SimplicialComplex lk = dc.link(vertex_bit(k));
        if (lk.dim() != dc.dim() - 1 || !lk.is_pure()) continue;
        if (vd_value_inner(lk) && vd_value_inner(del)) {
            value = true;
            break;
        }
    }
    if (!key.empty()) g_vd_cache.put(key, value);
    return value;
}

nlohmann::json vd_witness(const SimplicialComplex& dc) {
    if (dc.facets().size() == 1) return {{"simplex", true}};
    for (int k : vertices_of_mask(dc.existing_vertices())) {
        SimplicialComplex del = dc.deletion(vertex_bit(k));
        if (del.dim() != dc.dim() || !del.is_pure()) continue;
        SimplicialComplex lk = dc.link(vertex_bit(k));
        if (lk.dim() != dc.dim() - 1 || !lk.is_pure()) continue;
        if (vd_value_inner(lk) && vd_value_inner(del))
            return {{"k", k}, {"link", vd_witness(lk)}, {"deletion", vd_witness(del)}};
    }
    throw error("witness requested for a complex that is not vertex-decomposable");
}

}  // namespace

PropertyVerdict is_vertex_decomposable(const SimplicialComplex& dc, bool want_witness) {
    if (!dc.is_pure()) throw not_pure("is_vertex_decomposable requires a pure complex");
    PropertyVerdict v;
    v.value = vd_value_inner(dc);
    if (v.value && want_witness) v.witness = vd_witness(dc);
    return v;
}

namespace {

bool wvd_value_inner(const SimplicialComplex& dc, const FieldSpec& field) {
    if (dc.facets().size() == 1) return true;
    std::string key = memo_key(dc, field.characteristic());
    if (!key.empty()) {
        if (auto hit = g_wvd_cache.get(key)) return *hit;
    }
    bool value = false;
    for (int k : vertices_of_mask(dc.existing_vertices())) {
        if (dc.is_cone_with_apex(k)) {
            if (wvd_value_inner(dc.deletion(vertex_bit(k)), field)) {
                value = true;
                break;
            }
        } else {
            SimplicialComplex del = dc.deletion(vertex_bit(k));
            if (del.dim() != dc.dim() || !cohen_macaulay_value(del, field)) continue;
            if (wvd_value_inner(dc.link(vertex_bit(k)), field)) {
                value = true;
                break;
            }
        }
    }
    if (!key.empty()) g_wvd_cache.put(key, value);
    return value;
}

void wvd_witness_sequence(const SimplicialComplex& dc, const FieldSpec& field,
                          std::vector<std::pair<int, std::string>>& seq) {
    if (dc.facets().size() == 1) return;
    for (int k : vertices_of_mask(dc.existing_vertices())) {
        if (dc.is_cone_with_apex(k)) {
            SimplicialComplex del = dc.deletion(vertex_bit(k));
            if (wvd_value_inner(del, field)) {
                seq.emplace_back(k, "cone");
                wvd_witness_sequence(del, field, seq);
                return;
            }
        } else {
            SimplicialComplex del = dc.deletion(vertex_bit(k));
            if (del.dim() != dc.dim() || !cohen_macaulay_value(del, field)) continue;
            SimplicialComplex lk = dc.link(vertex_bit(k));
            if (wvd_value_inner(lk, field)) {
                seq.emplace_back(k, "link");
                wvd_witness_sequence(lk, field, seq);
                return;
            }
        }
    }
    throw error("witness requested for a complex that is not weakly vertex-decomposable");
}

}  // namespace

bool wvd_value(const SimplicialComplex& dc, const FieldSpec& field) {
    return wvd_value_inner(dc, field);
}

PropertyVerdict is_weakly_vertex_decomposable(const SimplicialComplex& dc, const FieldSpec& field,
                                              bool want_witness) {
    if (!dc.is_pure()) throw not_pure("is_weakly_vertex_decomposable requires a pure complex");
    PropertyVerdict v;
    v.field = field;
    v.value = wvd_value_inner(dc, field);
    if (v.value && want_witness) {
        std::vector<std::pair<int, std::string>> seq;
        wvd_witness_sequence(dc, field, seq);
        nlohmann::json w = nlohmann::json::array();
        for (const auto& [k, branch] : seq) w.push_back({{"k", k}, {"branch", branch}});
        v.witness = {{"sequence", w}};
    }
    return v;
}

bool replay_wvd_sequence(const SimplicialComplex& dc, const FieldSpec& field,
                         const std::vector<std::pair<int, std::string>>& sequence) {
    SimplicialComplex cur = dc;
    for (const auto& [k, branch] : sequence) {
        if (branch == "cone") {
            if (!cur.is_cone_with_apex(k)) return false;
            cur = cur.deletion(vertex_bit(k));
        } else if (branch == "link") {
            if (!contains_vertex(cur.existing_vertices(), k)) return false;
            SimplicialComplex del = cur.deletion(vertex_bit(k));
            if (del.dim() != cur.dim() || !cohen_macaulay_value(del, field)) return false;
            cur = cur.link(vertex_bit(k));
        } else {
            return false;
        }
    }
    return cur.facets().size() == 1;
}

namespace {

struct TraceBuilder {
    const FieldSpec& field;
    std::vector<WvdTraceNode> nodes;
    std::unordered_map<std::string, int> seen;  // canonical key -> node index

    int build(const SimplicialComplex& dc) {
        std::string key = memo_key(dc, field.characteristic());
        if (!key.empty()) {
            auto it = seen.find(key);
            if (it != seen.end()) return it->second;
        }
        int index = static_cast<int>(nodes.size());
        nodes.emplace_back();
        if (!key.empty()) seen.emplace(key, index);
        nodes[static_cast<std::size_t>(index)].facets = facet_vertex_lists(dc);

        std::vector<WvdBranchFailure> entries;
        for (int k = 1; k <= dc.ground_set_size(); ++k) {
            WvdBranchFailure e;
            e.k = k;
            if (!contains_vertex(dc.existing_vertices(), k)) {
                e.reason = "not an existing vertex";
            } else if (dc.is_cone_with_apex(k)) {
                int child = build(dc.deletion(vertex_bit(k)));
                e.reason = "cone apex, but the base fails (node " + std::to_string(child) + ")";
            } else {
                SimplicialComplex del = dc.deletion(vertex_bit(k));
                if (!cohen_macaulay_value(del, field)) {
                    DepthReport dr = depth_report(del.cone(k), field);
                    e.deletion_depth = dr.depth;
                    e.deletion_dim = dr.dim;
                    e.reason = "deletion not Cohen-Macaulay (depth " + std::to_string(dr.depth) +
                               " < dim " + std::to_string(dr.dim) + " of the deletion ideal)";
                } else if (del.dim() != dc.dim()) {
                    e.reason = "deletion Cohen-Macaulay but of smaller dimension";
                } else {
                    int child = build(dc.link(vertex_bit(k)));
                    e.reason = "deletion Cohen-Macaulay of full dimension, but the link fails "
                               "(node " +
                               std::to_string(child) + ")";
                }
            }
            entries.push_back(std::move(e));
        }
        nodes[static_cast<std::size_t>(index)].entries = std::move(entries);
        return index;
    }
};

}  // namespace

std::vector<WvdTraceNode> wvd_failure_trace(const SimplicialComplex& dc, const FieldSpec& field) {
    if (!dc.is_pure()) throw not_pure("wvd_failure_trace requires a pure complex");
    if (wvd_value_inner(dc, field)) return {};
    TraceBuilder builder{field, {}, {}};
    builder.build(dc);
    return builder.nodes;
}

nlohmann::json wvd_trace_to_json(const std::vector<WvdTraceNode>& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& node : trace) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : node.entries) {
            nlohmann::json je = {{"k", e.k}, {"reason", e.reason}};
            if (e.deletion_depth >= 0) {
                je["deletion_depth"] = e.deletion_depth;
                je["deletion_dim"] = e.deletion_dim;
            }
            entries.push_back(je);
        }
        out.push_back({{"facets", node.facets}, {"entries", entries}});
    }
    return out;
}

}  // namespace glicci
