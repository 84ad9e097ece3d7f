#include "glicci/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace glicci {

namespace {

using rational = boost::multiprecision::cpp_rational;

constexpr int kDenseColumnLimit = 5000;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

int rank_dense_fp(const SignMatrix& m, std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> a(
        static_cast<std::size_t>(m.rows),
        std::vector<std::uint64_t>(static_cast<std::size_t>(m.cols), 0));
    for (int r = 0; r < m.rows; ++r)
        for (auto [c, s] : m.row_entries[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] + (s >= 0 ? s : p + s)) % p;

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        std::uint64_t inv = mod_pow(prow[static_cast<std::size_t>(col)], p - 2, p);
        for (int r = rank + 1; r < m.rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            std::uint64_t x = row[static_cast<std::size_t>(col)];
            if (x == 0) continue;
            std::uint64_t factor = x * inv % p;
            for (int c = col; c < m.cols; ++c) {
                std::uint64_t sub = factor * prow[static_cast<std::size_t>(c)] % p;
                row[static_cast<std::size_t>(c)] = (row[static_cast<std::size_t>(c)] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

int rank_dense_q(const SignMatrix& m) {
    std::vector<std::vector<rational>> a(
        static_cast<std::size_t>(m.rows),
        std::vector<rational>(static_cast<std::size_t>(m.cols), rational(0)));
    for (int r = 0; r < m.rows; ++r)
        for (auto [c, s] : m.row_entries[static_cast<std::size_t>(r)])
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += s;

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const auto& prow = a[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < m.rows; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            rational factor = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int c = col; c < m.cols; ++c)
                row[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

// Sparse elimination over the column-indexed row maps; entries stay exact.
template <typename Elem, typename DivFn, typename NormFn>
int rank_sparse(const SignMatrix& m, Elem /*tag*/, DivFn divide, NormFn normalize) {
    std::vector<std::map<int, Elem>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) {
        std::map<int, Elem> row;
        for (auto [c, s] : m.row_entries[static_cast<std::size_t>(r)]) {
            Elem& e = row[c];
            e = normalize(e + Elem(s));
            if (e == Elem(0)) row.erase(c);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    int rank = 0;
    while (!rows.empty()) {
        // Shortest row pivots first to limit fill-in.
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size()) best = i;
        std::map<int, Elem> pivot_row = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        ++rank;
        int pc = pivot_row.begin()->first;
        Elem pv = pivot_row.begin()->second;
        std::vector<std::map<int, Elem>> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            auto it = row.find(pc);
            if (it != row.end()) {
                Elem factor = divide(it->second, pv);
                for (const auto& [c, v] : pivot_row) {
                    Elem& e = row[c];
                    e = normalize(e - factor * v);
                    if (e == Elem(0)) row.erase(c);
                }
            }
            if (!row.empty()) next.push_back(std::move(row));
        }
        rows = std::move(next);
    }
    return rank;
}

struct FpElem {
    std::int64_t v = 0;
    FpElem() = default;
    explicit FpElem(int x) : v(x) {}
    explicit FpElem(std::int64_t x) : v(x) {}
    friend FpElem operator+(FpElem a, FpElem b) { return FpElem(a.v + b.v); }
    friend FpElem operator-(FpElem a, FpElem b) { return FpElem(a.v - b.v); }
    friend FpElem operator*(FpElem a, FpElem b) { return FpElem(a.v * b.v); }
    friend bool operator==(FpElem a, FpElem b) { return a.v == b.v; }
};

int rank_sparse_fp(const SignMatrix& m, std::uint64_t p) {
    auto divide = [p](FpElem a, FpElem b) {
        std::uint64_t bu = static_cast<std::uint64_t>((b.v % static_cast<std::int64_t>(p) +
                                                       static_cast<std::int64_t>(p)) %
                                                      static_cast<std::int64_t>(p));
        std::uint64_t au = static_cast<std::uint64_t>((a.v % static_cast<std::int64_t>(p) +
                                                       static_cast<std::int64_t>(p)) %
                                                      static_cast<std::int64_t>(p));
        return FpElem(static_cast<std::int64_t>(au * mod_pow(bu, p - 2, p) % p));
    };
    auto normalize = [p](FpElem a) {
        return FpElem((a.v % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) %
                      static_cast<std::int64_t>(p));
    };
    return rank_sparse(m, FpElem{}, divide, normalize);
}

int rank_sparse_q(const SignMatrix& m) {
    auto divide = [](const rational& a, const rational& b) { return rational(a / b); };
    auto normalize = [](const rational& a) { return a; };
    return rank_sparse(m, rational(0), divide, normalize);
}

}  // namespace

int matrix_rank(const SignMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    bool dense = m.cols <= kDenseColumnLimit;
    if (field.is_rationals()) return dense ? rank_dense_q(m) : rank_sparse_q(m);
    std::uint64_t p = field.p;
    return dense ? rank_dense_fp(m, p) : rank_sparse_fp(m, p);
}

}  // namespace glicci
