#include "plmorse/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "plmorse/error.hpp"

namespace plmorse {

using Rational = boost::multiprecision::cpp_rational;

const char* field_name(Field F) {
    return F == Field::GF2 ? "gf2" : "rational";
}

namespace {

// Boundary matrix of one degree of the quotient complex C(K)/C(L),
// held column-sparse. Entry signs follow the sorted vertex order of
// each simplex, so column j of degree i lists the facets of the j-th
// retained i-simplex with signs (-1)^position.
struct BoundaryColumns {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<int, int>>> cols; // (row, sign), rows ascending
};

BoundaryColumns boundary_matrix(const SimplicialComplex& K, const SimplicialComplex* L, int i) {
    BoundaryColumns B;
    if (i < 1 || i > K.dimension()) return B;

    std::unordered_map<Simplex, int, SimplexHash> row_of;
    int r = 0;
    for (const Simplex& s : K.simplices(i - 1)) {
        if (L && L->contains(s)) continue;
        row_of.emplace(s, r++);
    }
    B.rows = static_cast<std::size_t>(r);

    for (const Simplex& s : K.simplices(i)) {
        if (L && L->contains(s)) continue;
        std::vector<std::pair<int, int>> col;
        auto facets = s.facets();
        for (std::size_t j = 0; j < facets.size(); ++j) {
            auto it = row_of.find(facets[j]);
            if (it == row_of.end()) continue; // face lies in L
            col.emplace_back(it->second, (j % 2 == 0) ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        B.cols.push_back(std::move(col));
    }
    return B;
}

std::int64_t rank_gf2_dense(const BoundaryColumns& B) {
    const std::size_t rows = B.rows, cols = B.cols.size();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> M(rows, std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, sign] : B.cols[j])
            M[r][j / 64] ^= (1ull << (j % 64));

    std::int64_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t w = c / 64;
        std::uint64_t bit = 1ull << (c % 64);
        std::size_t sel = pivot_row;
        while (sel < rows && !(M[sel][w] & bit)) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[pivot_row]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 != pivot_row && (M[r2][w] & bit))
                for (std::size_t k = 0; k < words; ++k) M[r2][k] ^= M[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Column elimination keyed on the lowest nonzero row of each column.
std::int64_t rank_gf2_sparse(const BoundaryColumns& B) {
    std::vector<std::vector<int>> cols;
    cols.reserve(B.cols.size());
    for (const auto& c : B.cols) {
        std::vector<int> col;
        col.reserve(c.size());
        for (const auto& [r, sign] : c) col.push_back(r);
        cols.push_back(std::move(col));
    }

    std::unordered_map<int, int> pivot_with_low; // low row -> column index
    std::int64_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int low = col.back();
            auto it = pivot_with_low.find(low);
            if (it == pivot_with_low.end()) break;
            const auto& piv = cols[it->second];
            std::vector<int> merged;
            std::set_symmetric_difference(col.begin(), col.end(), piv.begin(), piv.end(),
                                          std::back_inserter(merged));
            col = std::move(merged);
        }
        if (!col.empty()) {
            pivot_with_low.emplace(col.back(), static_cast<int>(j));
            ++rank;
        }
    }
    return rank;
}

std::int64_t rank_rational_dense(const BoundaryColumns& B) {
    const std::size_t rows = B.rows, cols = B.cols.size();
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, sign] : B.cols[j]) M[r][j] = sign;

    std::int64_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && M[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[pivot_row]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == pivot_row || M[r2][c] == 0) continue;
            Rational factor = M[r2][c] / M[pivot_row][c];
            for (std::size_t k = c; k < cols; ++k) M[r2][k] -= factor * M[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

std::int64_t rank_rational_sparse(const BoundaryColumns& B) {
    using Col = std::vector<std::pair<int, Rational>>; // rows ascending
    std::vector<Col> cols;
    cols.reserve(B.cols.size());
    for (const auto& c : B.cols) {
        Col col;
        col.reserve(c.size());
        for (const auto& [r, sign] : c) col.emplace_back(r, Rational(sign));
        cols.push_back(std::move(col));
    }

    auto axpy = [](Col& target, const Rational& factor, const Col& source) {
        Col merged;
        merged.reserve(target.size() + source.size());
        std::size_t a = 0, b = 0;
        while (a < target.size() || b < source.size()) {
            if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
                merged.push_back(target[a++]);
            } else if (a == target.size() || source[b].first < target[a].first) {
                merged.emplace_back(source[b].first, factor * source[b].second);
                ++b;
            } else {
                Rational val = target[a].second + factor * source[b].second;
                if (val != 0) merged.emplace_back(target[a].first, std::move(val));
                ++a;
                ++b;
            }
        }
        target = std::move(merged);
    };

    std::unordered_map<int, int> pivot_with_low;
    std::int64_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            int low = col.back().first;
            auto it = pivot_with_low.find(low);
            if (it == pivot_with_low.end()) break;
            const Col& piv = cols[it->second];
            Rational factor = -col.back().second / piv.back().second;
            axpy(col, factor, piv);
        }
        if (!col.empty()) {
            pivot_with_low.emplace(col.back().first, static_cast<int>(j));
            ++rank;
        }
    }
    return rank;
}

std::int64_t boundary_rank(const BoundaryColumns& B, Field F) {
    if (B.cols.empty() || B.rows == 0) return 0;
    const std::size_t cells = B.rows * B.cols.size();
    if (F == Field::GF2)
        return cells <= (1u << 22) ? rank_gf2_dense(B) : rank_gf2_sparse(B);
    return cells <= (1u << 14) ? rank_rational_dense(B) : rank_rational_sparse(B);
}

BettiVector quotient_betti(const SimplicialComplex& K, const SimplicialComplex* L, Field F) {
    BettiVector out;
    int d = K.dimension();
    if (d < 0) return out;
    out.ranks.assign(d + 1, 0);

    std::vector<std::int64_t> chain_rank(d + 2, 0);
    for (int i = 0; i <= d; ++i) {
        std::int64_t n = static_cast<std::int64_t>(K.count(i));
        if (L) n -= static_cast<std::int64_t>(L->count(i));
        chain_rank[i] = n;
    }
    std::vector<std::int64_t> boundary(d + 2, 0);
    for (int i = 1; i <= d; ++i)
        boundary[i] = boundary_rank(boundary_matrix(K, L, i), F);

    for (int i = 0; i <= d; ++i)
        out.ranks[i] = chain_rank[i] - boundary[i] - boundary[i + 1];
    while (!out.ranks.empty() && out.ranks.back() == 0) out.ranks.pop_back();
    return out;
}

} // namespace

BettiVector betti(const SimplicialComplex& K, Field F) {
    return quotient_betti(K, nullptr, F);
}

BettiVector reduced_betti(const SimplicialComplex& K, Field F) {
    BettiVector out = betti(K, F);
    out.reduced = true;
    if (K.empty()) {
        out.minus_one = 1;
    } else {
        out.ranks[0] -= 1;
        while (!out.ranks.empty() && out.ranks.back() == 0) out.ranks.pop_back();
    }
    return out;
}

BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& L, Field F) {
    for (const Simplex& s : L.all_simplices())
        if (!K.contains(s))
            fail(Errc::SubcomplexViolation, "relative pair: " + s.str() + " not in the ambient complex");
    if (L.empty()) return betti(K, F);
    return quotient_betti(K, &L, F);
}

} // namespace plmorse
