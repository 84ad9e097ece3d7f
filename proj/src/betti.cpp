#include "glicci/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "glicci/homology.hpp"

namespace glicci {

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) pd = std::max(pd, ij.first);
    return pd;
}

int BettiTable::max_row() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v != 0) r = std::max(r, ij.second - ij.first);
    return r;
}

std::string BettiTable::render() const {
    int pd = projective_dimension();
    int rows = max_row();
    std::vector<std::size_t> width(static_cast<std::size_t>(pd + 1), 1);
    auto cell = [&](int r, int i) -> std::string {
        long long v = at(i, i + r);
        return v == 0 ? "-" : std::to_string(v);
    };
    for (int r = 0; r <= rows; ++r)
        for (int i = 0; i <= pd; ++i)
            width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], cell(r, i).size());

    std::ostringstream os;
    std::size_t label = std::to_string(rows).size();
    os << std::setw(static_cast<int>(label)) << "" << " |";
    for (int i = 0; i <= pd; ++i)
        os << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)]))
           << i;
    os << '\n';
    os << std::string(label, '-') << "-+";
    for (int i = 0; i <= pd; ++i)
        os << std::string(width[static_cast<std::size_t>(i)] + 1, '-');
    os << '\n';
    for (int r = 0; r <= rows; ++r) {
        os << std::setw(static_cast<int>(label)) << r << " |";
        for (int i = 0; i <= pd; ++i)
            os << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(i)]))
               << cell(r, i);
        os << '\n';
    }
    return os.str();
}

BettiTable hochster_betti(const SimplicialComplex& dc, const FieldSpec& field, int guard_n) {
    int n = dc.ground_set_size();
    if (n > guard_n)
        throw size_guard_exceeded("hochster_betti guard: n = " + std::to_string(n) + " > " +
                                  std::to_string(guard_n));

    mask_t vertices = dc.existing_vertices();
    int outside = n - popcount(vertices);

    // Binomial weights for the ground-set vertices missing from the complex:
    // Δ_W depends only on U = W ∩ V, and |W| = |U| + s for C(outside, s)
    // choices of W.
    std::vector<long long> choose(static_cast<std::size_t>(outside + 1), 1);
    for (int s = 1; s <= outside; ++s)
        choose[static_cast<std::size_t>(s)] =
            choose[static_cast<std::size_t>(s - 1)] * (outside - s + 1) / s;

    BettiTable table;
    table.field = field;

    std::vector<int> vlist = vertices_of_mask(vertices);
    int k = static_cast<int>(vlist.size());
    for (mask_t bits = 0;; ++bits) {
        mask_t u = 0;
        for (int i = 0; i < k; ++i)
            if (bits & (mask_t{1} << i)) u |= vertex_bit(vlist[static_cast<std::size_t>(i)]);
        HomologyProfile h = reduced_homology(dc.restriction(u), field);
        int cu = popcount(u);
        for (int d = -1; d <= h.top_index(); ++d) {
            long long hd = h.at(d);
            if (hd == 0) continue;
            for (int s = 0; s <= outside; ++s) {
                int j = cu + s;
                int i = j - 1 - d;
                if (i < 0) continue;
                table.entries[{i, j}] += choose[static_cast<std::size_t>(s)] * hd;
            }
        }
        if (bits == full_mask(k)) break;
    }
    std::erase_if(table.entries, [](const auto& kv) { return kv.second == 0; });
    return table;
}

DepthReport depth_report(const BettiTable& table, const SimplicialComplex& dc) {
    DepthReport r;
    r.depth = dc.ground_set_size() - table.projective_dimension();
    r.dim = dc.dim() + 1;
    r.cohen_macaulay = (r.depth == r.dim);
    return r;
}

DepthReport depth_report(const SimplicialComplex& dc, const FieldSpec& field, int guard_n) {
    return depth_report(hochster_betti(dc, field, guard_n), dc);
}

namespace {

// Divides poly by (1-t) as often as poly(1) vanishes.  Synthetic division:
// p = (1-t) q  gives  q_0 = p_0 and q_i = p_i + q_{i-1}.
int strip_one_minus_t(std::vector<long long>& poly) {
    int stripped = 0;
    while (poly.size() > 1) {
        long long at_one = 0;
        for (long long c : poly) at_one += c;
        if (at_one != 0) break;
        std::vector<long long> q(poly.size() - 1, 0);
        q[0] = poly[0];
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) q[i] = poly[i] + q[i - 1];
        poly = std::move(q);
        ++stripped;
    }
    return stripped;
}

}  // namespace

HilbertSeries reduce_series(std::vector<long long> numer, int denom_pow) {
    if (numer.empty()) numer.push_back(0);
    HilbertSeries h;
    h.denom_pow = denom_pow - strip_one_minus_t(numer);
    while (numer.size() > 1 && numer.back() == 0) numer.pop_back();
    h.numer = std::move(numer);
    return h;
}

HilbertSeries hilbert_series(const SimplicialComplex& dc) {
    FVector fv = dc.f_vector();
    int d = dc.dim() + 1;

    // Numerator of Σ f_{i-1} t^i (1-t)^{d-i} over the common denominator
    // (1-t)^d.
    std::vector<long long> numer(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        long long fi = fv.at_dim(i - 1);
        if (fi == 0) continue;
        // (1-t)^{d-i} expanded with alternating binomials.
        long long binom = 1;
        for (int j = 0; j <= d - i; ++j) {
            numer[static_cast<std::size_t>(i + j)] += fi * (j % 2 == 0 ? binom : -binom);
            binom = binom * (d - i - j) / (j + 1);
        }
    }
    return reduce_series(std::move(numer), d);
}

std::string HilbertSeries::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (std::size_t k = 0; k < numer.size(); ++k) {
        long long c = numer[k];
        if (c == 0 && !(numer.size() == 1)) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        long long a = c < 0 ? -c : c;
        if (k == 0 || a != 1) os << a;
        if (k == 1) os << 't';
        if (k > 1) os << "t^" << k;
        first = false;
    }
    if (first) os << '0';
    os << ')';
    if (denom_pow == 1) os << "/(1-t)";
    if (denom_pow > 1) os << "/(1-t)^" << denom_pow;
    return os.str();
}

bool is_level(const SimplicialComplex& dc, const FieldSpec& field, int guard_n) {
    BettiTable t = hochster_betti(dc, field, guard_n);
    DepthReport d = depth_report(t, dc);
    if (!d.cohen_macaulay)
        throw not_cohen_macaulay("is_level requires a Cohen-Macaulay complex");
    int pd = t.projective_dimension();
    int rows_hit = 0;
    for (const auto& [ij, v] : t.entries)
        if (ij.first == pd && v != 0) ++rows_hit;
    return rows_hit == 1;
}

}  // namespace glicci
