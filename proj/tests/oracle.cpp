#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using plmorse::GradientPair;
using plmorse::Vertex;

// Dense boundary matrix of degree i for the pair (K, L), entries as
// small signed integers.
std::vector<std::vector<int>> dense_boundary(const SimplicialComplex& K,
                                             const SimplicialComplex& L, int i) {
    std::map<Simplex, int> row_of;
    std::vector<Simplex> cols;
    for (const Simplex& s : K.simplices(i - 1))
        if (!L.contains(s)) row_of.emplace(s, static_cast<int>(row_of.size()));
    for (const Simplex& s : K.simplices(i))
        if (!L.contains(s)) cols.push_back(s);

    std::vector<std::vector<int>> M(row_of.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& verts = cols[j].vertices();
        int sign = 1;
        for (std::size_t skip = 0; skip < verts.size(); ++skip) {
            std::vector<Vertex> face;
            for (std::size_t a = 0; a < verts.size(); ++a)
                if (a != skip) face.push_back(verts[a]);
            auto it = row_of.find(Simplex(face));
            if (it != row_of.end()) M[it->second][j] = sign;
            sign = -sign;
        }
    }
    return M;
}

std::int64_t rank_mod2(std::vector<std::vector<int>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::int64_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && (M[sel][c] & 1) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        for (std::size_t r2 = 0; r2 < rows; ++r2)
            if (r2 != r && (M[r2][c] & 1))
                for (std::size_t k = 0; k < cols; ++k) M[r2][k] = (M[r2][k] + M[r][k]) & 1;
        ++r;
        ++rank;
    }
    return rank;
}

std::int64_t rank_exact(const std::vector<std::vector<int>>& Mi) {
    if (Mi.empty() || Mi[0].empty()) return 0;
    const std::size_t rows = Mi.size(), cols = Mi[0].size();
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M[r][c] = Mi[r][c];

    std::int64_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && M[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[sel], M[r]);
        for (std::size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == r || M[r2][c] == 0) continue;
            Rational factor = M[r2][c] / M[r][c];
            for (std::size_t k = 0; k < cols; ++k) M[r2][k] -= factor * M[r][k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::int64_t boundary_rank(const SimplicialComplex& K, const SimplicialComplex& L, int i,
                           Field F) {
    auto M = dense_boundary(K, L, i);
    return F == Field::GF2 ? rank_mod2(std::move(M)) : rank_exact(M);
}

std::int64_t chain_rank(const SimplicialComplex& K, const SimplicialComplex& L, int i) {
    std::int64_t n = 0;
    for (const Simplex& s : K.simplices(i))
        if (!L.contains(s)) ++n;
    return n;
}

} // namespace

std::vector<std::int64_t> relative_betti(const SimplicialComplex& K, const SimplicialComplex& L,
                                         Field F) {
    const int d = K.dimension();
    std::vector<std::int64_t> out(std::max(d + 1, 0), 0);
    for (int i = 0; i <= d; ++i) {
        out[i] = chain_rank(K, L, i) - boundary_rank(K, L, i, F) -
                 boundary_rank(K, L, i + 1, F);
    }
    return out;
}

std::vector<std::int64_t> betti(const SimplicialComplex& K, Field F) {
    return oracle::relative_betti(K, SimplicialComplex(), F);
}

std::vector<std::int64_t> reduced_betti(const SimplicialComplex& K, Field F) {
    std::vector<std::int64_t> plain = oracle::betti(K, F);
    std::vector<std::int64_t> out(plain.size() + 1, 0);
    if (K.empty()) {
        out.assign(1, 1);
        return out;
    }
    for (std::size_t i = 0; i < plain.size(); ++i) out[i + 1] = plain[i];
    out[1] -= 1;
    return out;
}

bool has_closed_path(const GradientField& V) {
    const auto& pairs = V.pairs();
    const int n = static_cast<int>(pairs.size());

    // step[i][j]: the path can continue from pair i to pair j. A
    // closed V-path is a pair sequence returning to its start, so it
    // exists exactly when some diagonal entry of the transitive
    // closure is set.
    std::vector<std::vector<bool>> step(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && pairs[j].tail.is_face_of(pairs[i].head) &&
                pairs[j].tail != pairs[i].tail)
                step[i][j] = true;

    std::vector<std::vector<bool>> reach = step;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;

    for (int i = 0; i < n; ++i)
        if (reach[i][i]) return true;
    return false;
}

std::vector<Simplex> star_by_scan(const SimplicialComplex& K, const Simplex& s) {
    std::vector<Simplex> out;
    for (const Simplex& t : K.all_simplices())
        if (s.is_face_of(t)) out.push_back(t);
    return out;
}

GradientField random_matching(const SimplicialComplex& K, std::mt19937& rng) {
    std::vector<Simplex> order = K.all_simplices();
    std::shuffle(order.begin(), order.end(), rng);

    std::set<Simplex> used;
    std::vector<GradientPair> pairs;
    for (const Simplex& head : order) {
        if (head.dim() == 0 || used.count(head)) continue;
        std::vector<Simplex> candidates;
        for (const Simplex& tail : head.facets())
            if (!used.count(tail)) candidates.push_back(tail);
        if (candidates.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size());
        std::size_t c = pick(rng);
        if (c == candidates.size()) continue; // leave head unpaired sometimes
        used.insert(head);
        used.insert(candidates[c]);
        pairs.push_back({candidates[c], head});
    }
    return GradientField(std::move(pairs));
}

} // namespace oracle
