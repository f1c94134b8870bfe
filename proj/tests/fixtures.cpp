#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace fixtures {

using plmorse::GradientPair;
using plmorse::Simplex;

TestSpace make(std::vector<std::vector<Vertex>> maximal, std::vector<double> values) {
    TestSpace s;
    s.maximal = std::move(maximal);
    s.values = std::move(values);
    s.K = SimplicialComplex::from_maximal(s.maximal);
    s.f = VertexScalarField::from_dense(s.values);
    return s;
}

TestSpace lone_triangle() {
    return make({{0, 1, 2}}, {1, 2, 3});
}

TestSpace tetra_boundary() {
    return make({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {1, 2, 3, 4});
}

TestSpace pentachoron_boundary() {
    std::vector<std::vector<Vertex>> maximal;
    for (Vertex skip = 0; skip < 5; ++skip) {
        std::vector<Vertex> tet;
        for (Vertex v = 0; v < 5; ++v)
            if (v != skip) tet.push_back(v);
        maximal.push_back(tet);
    }
    return make(std::move(maximal), {1, 2, 3, 4, 5});
}

TestSpace saddle_fan() {
    // Center vertex 3 (value 5); ring cycle 0-5-2-6-4-1 carries values
    // 1,7,3,8,6,2.
    return make({{0, 3, 5}, {2, 3, 5}, {2, 3, 6}, {3, 4, 6}, {1, 3, 4}, {0, 1, 3}},
                {1, 2, 3, 5, 6, 7, 8});
}

TestSpace monotone_fan() {
    // Ring cycle 0-1-2-3-4-5 with values 1..3, 5..7; center 6 value 4.
    return make({{0, 1, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {0, 5, 6}},
                {1, 2, 3, 5, 6, 7, 4});
}

TestSpace projective_plane() {
    return make({{1, 4, 5}, {2, 3, 5}, {1, 3, 4}, {1, 2, 3}, {0, 1, 2},
                 {0, 2, 4}, {2, 4, 5}, {0, 1, 5}, {0, 3, 5}, {0, 3, 4}},
                {1, 2, 3, 4, 5, 6});
}

TestSpace torus_grid(int k) {
    auto id = [k](int i, int j) { return static_cast<Vertex>(((i % k + k) % k) * k + (j % k + k) % k); };
    std::vector<std::vector<Vertex>> maximal;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            maximal.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            maximal.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    }
    std::vector<double> values(static_cast<std::size_t>(k) * k);
    std::iota(values.begin(), values.end(), 1.0);
    return make(std::move(maximal), std::move(values));
}

TestSpace torus_cube(int k) {
    auto id = [k](int x, int y, int z) {
        auto w = [k](int a) { return (a % k + k) % k; };
        return static_cast<Vertex>((w(x) * k + w(y)) * k + w(z));
    };
    const int axes[6][3][3] = {
        // Orders in which the three unit steps are taken.
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
        {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
        {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
    };
    std::vector<std::vector<Vertex>> maximal;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                for (const auto& order : axes) {
                    int p[3] = {x, y, z};
                    std::vector<Vertex> tet{id(p[0], p[1], p[2])};
                    for (const auto& step : order) {
                        p[0] += step[0];
                        p[1] += step[1];
                        p[2] += step[2];
                        tet.push_back(id(p[0], p[1], p[2]));
                    }
                    maximal.push_back(tet);
                }
    std::vector<double> values(static_cast<std::size_t>(k) * k * k);
    std::iota(values.begin(), values.end(), 1.0);
    return make(std::move(maximal), std::move(values));
}

TestSpace monkey_bipyramid() {
    std::vector<std::vector<Vertex>> maximal;
    for (Vertex i = 0; i < 6; ++i) {
        Vertex j = (i + 1) % 6;
        maximal.push_back({i, j, 6});
        maximal.push_back({i, j, 7});
    }
    // Ring alternates low and high around the apex value 10.
    return make(std::move(maximal), {1, 20, 2, 21, 3, 22, 10, 30});
}

TestSpace annulus() {
    return make({{0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5}},
                {1, 2, 3, 4, 5, 6});
}

TestSpace grid_ramp(int k) {
    auto id = [k](int i, int j) { return static_cast<Vertex>(i * k + j); };
    std::vector<std::vector<Vertex>> maximal;
    for (int i = 0; i + 1 < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) {
            maximal.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            maximal.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    }
    std::vector<double> values(static_cast<std::size_t>(k) * k);
    std::iota(values.begin(), values.end(), 1.0);
    return make(std::move(maximal), std::move(values));
}

GradientField fan_pictured_field() {
    return GradientField({
        {Simplex{1}, Simplex{0, 1}},
        {Simplex{1, 3}, Simplex{0, 1, 3}},
        {Simplex{3}, Simplex{0, 3}},
        {Simplex{3, 5}, Simplex{0, 3, 5}},
        {Simplex{2, 5}, Simplex{2, 3, 5}},
        {Simplex{2, 6}, Simplex{2, 3, 6}},
        {Simplex{3, 6}, Simplex{3, 4, 6}},
        {Simplex{6}, Simplex{4, 6}},
        {Simplex{4}, Simplex{1, 4}},
        {Simplex{3, 4}, Simplex{1, 3, 4}},
        {Simplex{0}, Simplex{0, 5}},
    });
}

GradientField fan_skew_field() {
    return GradientField({
        {Simplex{1}, Simplex{0, 1}},
        {Simplex{0}, Simplex{0, 3}},
        {Simplex{2}, Simplex{2, 3}},
        {Simplex{1, 3}, Simplex{0, 1, 3}},
        {Simplex{4}, Simplex{1, 4}},
        {Simplex{3, 4}, Simplex{1, 3, 4}},
        {Simplex{5}, Simplex{0, 5}},
        {Simplex{3, 5}, Simplex{0, 3, 5}},
        {Simplex{2, 5}, Simplex{2, 3, 5}},
        {Simplex{6}, Simplex{2, 6}},
        {Simplex{3, 6}, Simplex{2, 3, 6}},
        {Simplex{4, 6}, Simplex{3, 4, 6}},
    });
}

GradientField rp2_expected_field() {
    return GradientField({
        {Simplex{1}, Simplex{0, 1}},
        {Simplex{2}, Simplex{0, 2}},
        {Simplex{3}, Simplex{0, 3}},
        {Simplex{4}, Simplex{0, 4}},
        {Simplex{5}, Simplex{0, 5}},
        {Simplex{1, 2}, Simplex{0, 1, 2}},
        {Simplex{1, 4}, Simplex{1, 3, 4}},
        {Simplex{1, 5}, Simplex{0, 1, 5}},
        {Simplex{2, 3}, Simplex{1, 2, 3}},
        {Simplex{2, 4}, Simplex{0, 2, 4}},
        {Simplex{2, 5}, Simplex{2, 3, 5}},
        {Simplex{3, 4}, Simplex{0, 3, 4}},
        {Simplex{3, 5}, Simplex{0, 3, 5}},
        {Simplex{4, 5}, Simplex{1, 4, 5}},
    });
}

std::vector<double> random_injective_values(std::size_t n, std::mt19937& rng) {
    std::vector<double> values(n);
    std::iota(values.begin(), values.end(), 1.0);
    std::shuffle(values.begin(), values.end(), rng);
    return values;
}

} // namespace fixtures
