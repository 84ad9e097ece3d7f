#include "glicci/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace glicci {

mask_t mask_of_vertices(const std::vector<int>& verts, int n) {
    mask_t m = 0;
    for (int v : verts) {
        if (v < 1 || v > n)
            throw vertex_out_of_range("vertex " + std::to_string(v) +
                                      " outside ground set [" + std::to_string(n) + "]");
        m |= vertex_bit(v);
    }
    return m;
}

std::vector<int> vertices_of_mask(mask_t m) {
    std::vector<int> out;
    for (int v = 1; m != 0; ++v, m >>= 1)
        if (m & 1) out.push_back(v);
    return out;
}

std::string mask_to_string(mask_t m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices_of_mask(m)) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<mask_t> maximal_antichain(std::vector<mask_t> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<mask_t> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && (sets[i] & sets[j]) == sets[i] && sets[i] != sets[j]) {
                maximal = false;
                break;
            }
            if (i != j && sets[i] == sets[j] && j < i) {  // unreachable after unique
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(sets[i]);
    }
    return out;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<mask_t> facet_masks) : n_(n) {
    if (n < 0 || n > kMaxGroundSet)
        throw vertex_out_of_range("ground set size " + std::to_string(n) + " unsupported");
    if (facet_masks.empty())
        throw empty_input("a complex needs at least one generating face");
    for (mask_t f : facet_masks)
        if ((f & ~full_mask(n)) != 0)
            throw vertex_out_of_range("facet outside ground set");
    facets_ = maximal_antichain(std::move(facet_masks));
    dim_ = -1;
    vertices_ = 0;
    long long size_estimate = 0;
    for (mask_t f : facets_) {
        dim_ = std::max(dim_, popcount(f) - 1);
        vertices_ |= f;
        size_estimate += 1LL << std::min(popcount(f), 30);
    }
    if (size_estimate <= (1LL << 22)) {
        enumerate_faces(faces_);
        faces_ready_ = true;
    }
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 const std::vector<std::vector<int>>& facets) {
    std::vector<mask_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) masks.push_back(mask_of_vertices(f, n));
    return SimplicialComplex(n, std::move(masks));
}

bool SimplicialComplex::is_pure() const {
    for (mask_t f : facets_)
        if (popcount(f) != dim_ + 1) return false;
    return true;
}

bool SimplicialComplex::is_face(mask_t f) const {
    if (faces_ready_)
        return std::binary_search(faces_.begin(), faces_.end(), f);
    for (mask_t g : facets_)
        if ((f & g) == f) return true;
    return false;
}

bool SimplicialComplex::is_cone_with_apex(int k) const {
    if (k < 1 || k > n_) return false;
    mask_t b = vertex_bit(k);
    for (mask_t f : facets_)
        if ((f & b) == 0) return false;
    return true;
}

void SimplicialComplex::enumerate_faces(std::vector<mask_t>& out) const {
    std::unordered_set<mask_t> seen;
    for (mask_t f : facets_) {
        mask_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
}

const std::vector<mask_t>& SimplicialComplex::faces() const {
    if (!faces_ready_) throw size_guard_exceeded("face enumeration above 2^22 faces");
    return faces_;
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(dim_ + 2), 0);
    for (mask_t f : faces()) fv.counts[static_cast<std::size_t>(popcount(f))]++;
    return fv;
}

long long SimplicialComplex::reduced_euler() const {
    FVector fv = f_vector();
    long long chi = 0;
    for (int i = -1; i <= dim_; ++i) chi += (i % 2 == 0 ? 1 : -1) * fv.at_dim(i);
    return chi;
}

SimplicialComplex SimplicialComplex::link(mask_t f) const {
    if (!is_face(f)) throw not_a_face("link of a non-face " + mask_to_string(f));
    std::vector<mask_t> gens;
    for (mask_t g : facets_)
        if ((g & f) == f) gens.push_back(g & ~f);
    return SimplicialComplex(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::deletion(mask_t f) const {
    std::vector<mask_t> gens;
    for (mask_t g : facets_) gens.push_back(g & ~f);
    return SimplicialComplex(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::restriction(mask_t w) const {
    std::vector<mask_t> gens;
    for (mask_t g : facets_) gens.push_back(g & w);
    return SimplicialComplex(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    if (i < -1 || i > dim_)
        throw dimension_out_of_range("skeleton index " + std::to_string(i));
    std::vector<mask_t> gens;
    for (mask_t f : faces())
        if (popcount(f) <= i + 1) gens.push_back(f);
    return SimplicialComplex(n_, std::move(gens));
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
    int n = n_;
    if (apex == n_ + 1) {
        n = n_ + 1;
    } else if (apex < 1 || apex > n_) {
        throw vertex_out_of_range("cone apex " + std::to_string(apex));
    } else if (contains_vertex(vertices_, apex)) {
        throw apex_exists("apex " + std::to_string(apex) + " already a vertex");
    }
    std::vector<mask_t> gens;
    gens.reserve(facets_.size());
    for (mask_t f : facets_) gens.push_back(f | vertex_bit(apex));
    return SimplicialComplex(n, std::move(gens));
}

std::vector<mask_t> SimplicialComplex::minimal_nonfaces() const {
    std::vector<mask_t> out;
    // A minimal non-face has cardinality at most dim+2: removing any vertex
    // must give a face.
    int max_card = std::min(dim_ + 2, n_);
    std::vector<int> idx;
    for (int c = 1; c <= max_card; ++c) {
        idx.assign(static_cast<std::size_t>(c), 0);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            mask_t s = 0;
            for (int v : idx) s |= vertex_bit(v);
            if (!is_face(s)) {
                bool minimal = true;
                for (int v : idx)
                    if (!is_face(s & ~vertex_bit(v))) {
                        minimal = false;
                        break;
                    }
                if (minimal) out.push_back(s);
            }
            // next c-combination of [n]
            int i = c - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n_ - (c - 1 - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < c; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](mask_t a, mask_t b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
}

SimplicialComplex SimplicialComplex::drop_ground_vertex(int k) const {
    if (k < 1 || k > n_) throw vertex_out_of_range("drop_ground_vertex " + std::to_string(k));
    if (contains_vertex(vertices_, k))
        throw apex_exists("vertex " + std::to_string(k) + " still exists in the complex");
    mask_t low = vertex_bit(k) - 1;
    std::vector<mask_t> gens;
    gens.reserve(facets_.size());
    for (mask_t f : facets_) gens.push_back((f & low) | ((f >> 1) & ~low));
    return SimplicialComplex(n_ - 1, std::move(gens));
}

std::optional<std::vector<mask_t>> SimplicialComplex::canonical_facets() const {
    std::vector<int> verts = vertices_of_mask(vertices_);
    int k = static_cast<int>(verts.size());
    if (k > 9) return std::nullopt;

    // Position of each existing vertex after compression to [k].
    std::vector<int> slot(static_cast<std::size_t>(n_) + 1, -1);
    for (int i = 0; i < k; ++i) slot[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<mask_t> best;
    std::vector<mask_t> cur(facets_.size());
    do {
        for (std::size_t t = 0; t < facets_.size(); ++t) {
            mask_t img = 0;
            mask_t f = facets_[t];
            while (f != 0) {
                int v = std::countr_zero(f) + 1;
                f &= f - 1;
                img |= mask_t{1} << perm[static_cast<std::size_t>(slot[static_cast<std::size_t>(v)])];
            }
            cur[t] = img;
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace glicci
