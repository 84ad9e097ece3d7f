#include "glicci/stanley.hpp"

#include <algorithm>
#include <optional>

#include "glicci/betti.hpp"
#include "glicci/ideal.hpp"

namespace glicci {

namespace {

std::vector<mask_t> faces_by_search_order(const SimplicialComplex& dc) {
    std::vector<mask_t> faces = dc.faces();
    std::sort(faces.begin(), faces.end(), [](mask_t a, mask_t b) {
        return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
    });
    return faces;
}

}  // namespace

DecompositionCheck verify_decomposition(const SimplicialComplex& dc,
                                        const StanleyDecomposition& d) {
    for (const auto& s : d.spaces) {
        if ((s.u & s.z) != s.u)
            return {false, "space has u ⊄ Z at " + mask_to_string(s.u)};
        if (!dc.is_face(s.z))
            return {false, "space top " + mask_to_string(s.z) + " is not a face"};
    }
    for (mask_t f : dc.faces()) {
        int covered = 0;
        for (const auto& s : d.spaces)
            if ((s.u & f) == s.u && (f & s.z) == f) ++covered;
        if (covered == 0) return {false, "face " + mask_to_string(f) + " is uncovered"};
        if (covered > 1)
            return {false, "face " + mask_to_string(f) + " is covered " +
                               std::to_string(covered) + " times"};
    }
    if (!decomposition_hilbert_matches(dc, d))
        return {false, "Hilbert series of the decomposition differs from K[Δ]"};
    return {};
}

bool decomposition_hilbert_matches(const SimplicialComplex& dc, const StanleyDecomposition& d) {
    int top = 0;
    for (const auto& s : d.spaces) top = std::max(top, popcount(s.z));
    std::vector<long long> numer(static_cast<std::size_t>(top + dc.ground_set_size() + 1), 0);
    for (const auto& s : d.spaces) {
        int cu = popcount(s.u);
        int e = top - popcount(s.z);
        long long binom = 1;
        for (int j = 0; j <= e; ++j) {
            numer[static_cast<std::size_t>(cu + j)] += (j % 2 == 0 ? binom : -binom);
            binom = binom * (e - j) / (j + 1);
        }
    }
    return reduce_series(std::move(numer), top) == hilbert_series(dc);
}

int sdepth_of(const StanleyDecomposition& d) {
    if (d.spaces.empty()) throw empty_input("sdepth_of needs at least one space");
    int m = popcount(d.spaces.front().z);
    for (const auto& s : d.spaces) m = std::min(m, popcount(s.z));
    return m;
}

namespace {

// Exact cover of the face poset by intervals [u, Z] with |Z| ≥ target.
struct CoverSearch {
    const SimplicialComplex& dc;
    int target;
    std::vector<mask_t> faces;  // decreasing cardinality, then mask
    std::vector<bool> covered;
    std::vector<StanleySpace> chosen;

    explicit CoverSearch(const SimplicialComplex& complex, int t)
        : dc(complex), target(t), faces(faces_by_search_order(complex)),
          covered(faces.size(), false) {}

    std::optional<std::size_t> index_of(mask_t f) const {
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i] == f) return i;
        return std::nullopt;
    }

    bool run() {
        std::size_t next = 0;
        while (next < faces.size() && covered[next]) ++next;
        if (next == faces.size()) return true;
        mask_t f = faces[next];
        for (mask_t z : dc.faces()) {
            if (popcount(z) < target) continue;
            if ((f & z) != f) continue;
            // subsets of f from small to large
            std::vector<mask_t> bottoms;
            mask_t sub = f;
            while (true) {
                bottoms.push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & f;
            }
            std::sort(bottoms.begin(), bottoms.end(), [](mask_t a, mask_t b) {
                return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
            });
            for (mask_t u : bottoms) {
                if (!try_interval(u, z)) continue;
                if (run()) return true;
                undo_interval(u, z);
            }
        }
        return false;
    }

    bool try_interval(mask_t u, mask_t z) {
        std::vector<std::size_t> marked;
        mask_t extra = z & ~u;
        mask_t sub = extra;
        bool ok = true;
        while (true) {
            mask_t face = u | sub;
            auto idx = index_of(face);
            if (!idx || covered[*idx]) {
                ok = false;
                break;
            }
            covered[*idx] = true;
            marked.push_back(*idx);
            if (sub == 0) break;
            sub = (sub - 1) & extra;
        }
        if (!ok) {
            for (std::size_t i : marked) covered[i] = false;
            return false;
        }
        chosen.push_back({u, z});
        return true;
    }

    void undo_interval(mask_t u, mask_t z) {
        chosen.pop_back();
        mask_t extra = z & ~u;
        mask_t sub = extra;
        while (true) {
            covered[*index_of(u | sub)] = false;
            if (sub == 0) break;
            sub = (sub - 1) & extra;
        }
    }
};

}  // namespace

std::pair<int, StanleyDecomposition> sdepth_with_decomposition(const SimplicialComplex& dc,
                                                               int guard_n) {
    if (dc.ground_set_size() > guard_n)
        throw size_guard_exceeded("sdepth guard: n = " + std::to_string(dc.ground_set_size()));
    for (int target = dc.dim() + 1; target >= 0; --target) {
        CoverSearch search(dc, target);
        if (search.run()) return {target, StanleyDecomposition{std::move(search.chosen)}};
    }
    throw error("no Stanley decomposition found at target 0");  // unreachable
}

int sdepth(const SimplicialComplex& dc, int guard_n) {
    return sdepth_with_decomposition(dc, guard_n).first;
}

namespace {

// Facet-topped interval partition by backtracking assignment of faces to
// facets: faces in decreasing cardinality, facets in lexicographic order.
struct FacetPartitionSearch {
    const SimplicialComplex& dc;
    std::vector<mask_t> faces;
    std::vector<mask_t> facet_order;  // sorted by vertex-list lexicographic order

    struct FacetState {
        mask_t bottom;
        long long assigned = 0;
    };
    std::vector<FacetState> state;
    std::vector<int> assignment;  // face index -> facet index

    explicit FacetPartitionSearch(const SimplicialComplex& complex)
        : dc(complex), faces(faces_by_search_order(complex)) {
        std::vector<std::vector<int>> lists;
        for (mask_t f : dc.facets()) lists.push_back(vertices_of_mask(f));
        std::sort(lists.begin(), lists.end());
        for (const auto& l : lists)
            facet_order.push_back(mask_of_vertices(l, dc.ground_set_size()));
        state.assign(facet_order.size(), FacetState{});
        for (std::size_t i = 0; i < facet_order.size(); ++i)
            state[i].bottom = facet_order[i];
        assignment.assign(faces.size(), -1);
    }

    bool face_assigned_to(mask_t w, std::size_t facet_idx) const {
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (faces[i] == w)
                return assignment[i] == static_cast<int>(facet_idx);
        return false;
    }

    // All faces of [bottom', G] strictly larger than f must already sit in
    // G's interval; they were processed earlier.
    bool consistent(std::size_t facet_idx, mask_t f, mask_t new_bottom) const {
        mask_t g = facet_order[facet_idx];
        mask_t extra = g & ~new_bottom;
        mask_t sub = extra;
        int cf = popcount(f);
        while (true) {
            mask_t w = new_bottom | sub;
            if (popcount(w) > cf && !face_assigned_to(w, facet_idx)) return false;
            if (sub == 0) break;
            sub = (sub - 1) & extra;
        }
        return true;
    }

    bool run(std::size_t pos) {
        if (pos == faces.size()) {
            for (std::size_t i = 0; i < facet_order.size(); ++i) {
                long long want = 1LL << popcount(facet_order[i] & ~state[i].bottom);
                if (state[i].assigned != want) return false;
            }
            return true;
        }
        mask_t f = faces[pos];
        for (std::size_t fi = 0; fi < facet_order.size(); ++fi) {
            if ((f & facet_order[fi]) != f) continue;
            mask_t old_bottom = state[fi].bottom;
            mask_t new_bottom = old_bottom & f;
            if (new_bottom != old_bottom && !consistent(fi, f, new_bottom)) continue;
            state[fi].bottom = new_bottom;
            state[fi].assigned++;
            assignment[pos] = static_cast<int>(fi);
            if (run(pos + 1)) return true;
            assignment[pos] = -1;
            state[fi].bottom = old_bottom;
            state[fi].assigned--;
        }
        return false;
    }

    std::optional<IntervalPartition> search() {
        if (!run(0)) return std::nullopt;
        IntervalPartition p;
        for (std::size_t i = 0; i < facet_order.size(); ++i)
            p.intervals.push_back({state[i].bottom, facet_order[i]});
        return p;
    }
};

}  // namespace

StanleyDecomposition decomposition_of_partition(const IntervalPartition& p) {
    StanleyDecomposition d;
    d.spaces.reserve(p.intervals.size());
    for (const auto& iv : p.intervals) d.spaces.push_back({iv.bottom, iv.top});
    return d;
}

StanleyDecomposition stanley_decomposition_codim2(const SimplicialComplex& dc,
                                                  const FieldSpec& field) {
    if (!cohen_macaulay_value(dc, field))
        throw not_cohen_macaulay("codim-2 decomposition requires a Cohen-Macaulay complex");
    if (codim_report(stanley_reisner_ideal(dc)).codim > 2)
        throw wrong_codim("expected codimension at most 2");
    FacetPartitionSearch search(dc);
    auto partition = search.search();
    if (!partition)
        throw search_exhausted("no facet-topped partition found for a CM codim-2 complex");
    return decomposition_of_partition(*partition);
}

namespace {

mask_t widen_mask(mask_t m, int k) {
    mask_t low = vertex_bit(k) - 1;
    return (m & low) | ((m & ~low) << 1);
}

StanleyDecomposition rec_2cm_codim3(const SimplicialComplex& dc, const FieldSpec& field) {
    // The two induction bases need no hypothesis: 1·K and 1·K[x_v] are
    // Stanley decompositions of the respective quotients outright.
    int vcount = dc.vertex_count();
    if (vcount == 0) return {{StanleySpace{0, 0}}};
    if (vcount == 1) {
        mask_t v = dc.existing_vertices();
        return {{StanleySpace{0, v}}};
    }

    if (!is_2cm(dc, field).value) throw not_2cm("complex is not 2-CM");
    if (codim_report(stanley_reisner_ideal(dc)).codim != 3)
        throw wrong_codim("expected codimension 3");

    int k = vertices_of_mask(dc.existing_vertices()).front();
    mask_t kbit = vertex_bit(k);

    SimplicialComplex lk_reduced = dc.link(kbit).drop_ground_vertex(k);
    StanleyDecomposition link_part = rec_2cm_codim3(lk_reduced, field);

    SimplicialComplex del_reduced = dc.deletion(kbit).drop_ground_vertex(k);
    StanleyDecomposition del_part = stanley_decomposition_codim2(del_reduced, field);

    // Depth bookkeeping along the splitting: the quotient, the link ideal
    // and the deletion ideal all share one depth.
    int depth_here = depth_report(dc, field).depth;
    int depth_link = depth_report(dc.link(kbit).cone(k), field).depth;
    int depth_del = depth_report(dc.deletion(kbit), field).depth;
    if (depth_here != depth_link || depth_here != depth_del)
        throw error("depth bookkeeping failed at vertex " + std::to_string(k));

    StanleyDecomposition out;
    out.spaces.reserve(link_part.spaces.size() + del_part.spaces.size());
    for (const auto& s : link_part.spaces)
        out.spaces.push_back({widen_mask(s.u, k) | kbit, widen_mask(s.z, k) | kbit});
    for (const auto& s : del_part.spaces)
        out.spaces.push_back({widen_mask(s.u, k), widen_mask(s.z, k)});

    for (const auto& s : out.spaces)
        if (popcount(s.z) < depth_here)
            throw error("space below depth at vertex " + std::to_string(k));
    return out;
}

}  // namespace

StanleyDecomposition stanley_decomposition_2cm_codim3(const SimplicialComplex& dc,
                                                      const FieldSpec& field) {
    return rec_2cm_codim3(dc, field);
}

IntervalPartition partition_from_shelling(const SimplicialComplex& dc,
                                          const std::vector<mask_t>& order) {
    if (order.size() != dc.facets().size() || !check_shelling_order(dc, order))
        throw not_a_shelling("the given facet order is not a shelling");
    IntervalPartition p;
    for (std::size_t i = 0; i < order.size(); ++i) {
        mask_t f = order[i];
        mask_t r = 0;
        for (int v : vertices_of_mask(f)) {
            mask_t wall = f & ~vertex_bit(v);
            for (std::size_t j = 0; j < i; ++j)
                if ((wall & order[j]) == wall) {
                    r |= vertex_bit(v);
                    break;
                }
        }
        p.intervals.push_back({r, f});
    }
    return p;
}

PropertyVerdict is_partitionable(const SimplicialComplex& dc, int facet_guard) {
    if (!dc.is_pure()) throw not_pure("is_partitionable requires a pure complex");
    std::optional<IntervalPartition> partition;
    if (static_cast<int>(dc.facets().size()) <= facet_guard) {
        PropertyVerdict shelling = is_shellable(dc, facet_guard);
        if (shelling.value) {
            std::vector<mask_t> order;
            for (const auto& l : shelling.witness.at("order"))
                order.push_back(mask_of_vertices(l.get<std::vector<int>>(),
                                                 dc.ground_set_size()));
            partition = partition_from_shelling(dc, order);
        }
    }
    if (!partition) {
        FacetPartitionSearch search(dc);
        partition = search.search();
    }
    PropertyVerdict v;
    v.value = partition.has_value();
    if (partition) v.witness = partition_to_json(*partition);
    return v;
}

DepthSdepthReport depth_vs_sdepth(const SimplicialComplex& dc, const FieldSpec& field,
                                  int sdepth_guard) {
    DepthSdepthReport r;
    r.depth = depth_report(dc, field).depth;
    int codim = codim_report(stanley_reisner_ideal(dc)).codim;

    PropertyVerdict shelling;
    bool shellable = false;
    if (dc.is_pure() && static_cast<int>(dc.facets().size()) <= kDefaultShellingGuard) {
        shelling = is_shellable(dc);
        shellable = shelling.value;
    }

    if (codim == 3 && is_2cm(dc, field).value) {
        r.decomposition = stanley_decomposition_2cm_codim3(dc, field);
        r.route = "2cm-codim3";
    } else if (codim == 2 && cohen_macaulay_value(dc, field)) {
        r.decomposition = stanley_decomposition_codim2(dc, field);
        r.route = "cm-codim2";
    } else if (shellable) {
        std::vector<mask_t> order;
        for (const auto& l : shelling.witness.at("order"))
            order.push_back(mask_of_vertices(l.get<std::vector<int>>(), dc.ground_set_size()));
        r.decomposition = decomposition_of_partition(partition_from_shelling(dc, order));
        r.route = "shelling";
    } else if (dc.ground_set_size() <= sdepth_guard) {
        auto [value, decomposition] = sdepth_with_decomposition(dc, sdepth_guard);
        r.decomposition = std::move(decomposition);
        r.route = "exhaustive";
        r.sdepth_lower_bound = value;
        r.conjecture_holds = r.depth <= value;
        return r;
    } else {
        throw no_route_available("no decomposition route applies within the guards");
    }
    r.sdepth_lower_bound = sdepth_of(r.decomposition);
    r.conjecture_holds = r.depth <= r.sdepth_lower_bound;
    return r;
}

namespace {

nlohmann::json mask_list_json(mask_t m) { return nlohmann::json(vertices_of_mask(m)); }

}  // namespace

nlohmann::json decomposition_to_json(const StanleyDecomposition& d) {
    nlohmann::json spaces = nlohmann::json::array();
    for (const auto& s : d.spaces)
        spaces.push_back({{"u", mask_list_json(s.u)}, {"Z", mask_list_json(s.z)}});
    return {{"spaces", spaces}};
}

nlohmann::json partition_to_json(const IntervalPartition& p) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : p.intervals)
        intervals.push_back({{"F", mask_list_json(iv.bottom)}, {"G", mask_list_json(iv.top)}});
    return {{"intervals", intervals}};
}

}  // namespace glicci
