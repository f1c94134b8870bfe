#include "plmorse/rpbuild.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "plmorse/error.hpp"

namespace plmorse {

namespace {

void require_dim_at_most(const SimplicialComplex& K, int d, const char* who) {
    if (K.dimension() > d)
        fail(Errc::UnsupportedDimension, std::string(who) + " needs dimension at most " +
                                             std::to_string(d) + ", got " +
                                             std::to_string(K.dimension()));
}

} // namespace

std::optional<GradientPair> find_free_face(const SimplicialComplex& two_complex) {
    require_dim_at_most(two_complex, 2, "free face search");
    std::map<Simplex, std::vector<Simplex>> tris_of_edge;
    for (const Simplex& t : two_complex.simplices(2))
        for (const Simplex& e : t.facets())
            tris_of_edge[e].push_back(t);
    for (const Simplex& e : two_complex.simplices(1)) {
        auto it = tris_of_edge.find(e);
        if (it != tris_of_edge.end() && it->second.size() == 1)
            return GradientPair{e, it->second.front()};
    }
    return std::nullopt;
}

CollapseTrace collapse_free_faces(const SimplicialComplex& two_complex) {
    require_dim_at_most(two_complex, 2, "collapse");

    std::set<Simplex> edges(two_complex.simplices(1).begin(), two_complex.simplices(1).end());
    std::set<Simplex> triangles(two_complex.simplices(2).begin(), two_complex.simplices(2).end());
    std::map<Simplex, std::vector<Simplex>> tris_of_edge;
    for (const Simplex& t : triangles)
        for (const Simplex& e : t.facets())
            tris_of_edge[e].push_back(t);

    CollapseTrace trace;
    while (true) {
        const Simplex* free_edge = nullptr;
        const Simplex* its_triangle = nullptr;
        for (const Simplex& e : edges) {
            const auto& ts = tris_of_edge[e];
            int alive = 0;
            const Simplex* last = nullptr;
            for (const Simplex& t : ts)
                if (triangles.count(t)) { ++alive; last = &t; }
            if (alive == 1) { free_edge = &e; its_triangle = last; break; }
        }
        if (!free_edge) break;
        trace.removed.push_back({*free_edge, *its_triangle});
        triangles.erase(trace.removed.back().head);
        edges.erase(trace.removed.back().tail);
    }

    std::vector<Simplex> rest;
    for (const Simplex& v : two_complex.simplices(0)) rest.push_back(v);
    rest.insert(rest.end(), edges.begin(), edges.end());
    rest.insert(rest.end(), triangles.begin(), triangles.end());
    trace.residual = SimplicialComplex::closure_of(rest);
    return trace;
}

GradientField spanning_forest_gradient(const SimplicialComplex& one_complex) {
    require_dim_at_most(one_complex, 1, "spanning forest");

    std::map<Vertex, std::vector<Vertex>> adj;
    for (const Simplex& e : one_complex.simplices(1)) {
        adj[e.vertices()[0]].push_back(e.vertices()[1]);
        adj[e.vertices()[1]].push_back(e.vertices()[0]);
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());

    std::vector<GradientPair> pairs;
    std::set<Vertex> visited;
    for (Vertex root : one_complex.vertices()) {
        if (visited.count(root)) continue;
        visited.insert(root);
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u]) {
                if (visited.count(w)) continue;
                visited.insert(w);
                pairs.push_back({Simplex{w}, Simplex{u, w}});
                q.push(w);
            }
        }
    }
    return GradientField(std::move(pairs));
}

namespace {

// One connected piece, dimension 2, every edge in exactly two member
// triangles.
bool is_closed_surface(const SimplicialComplex& C) {
    if (C.dimension() != 2) return false;
    std::map<Simplex, int> tri_count;
    for (const Simplex& t : C.simplices(2))
        for (const Simplex& e : t.facets())
            ++tri_count[e];
    for (const Simplex& e : C.simplices(1)) {
        auto it = tri_count.find(e);
        if (it == tri_count.end() || it->second != 2) return false;
    }
    return true;
}

SimplicialComplex drop_simplex(const SimplicialComplex& K, const Simplex& gone) {
    std::vector<Simplex> rest;
    for (const Simplex& s : K.all_simplices())
        if (s != gone) rest.push_back(s);
    return SimplicialComplex::closure_of(rest);
}

} // namespace

GradientField perfect_gradient_s2_subcomplex(const SimplicialComplex& K) {
    require_dim_at_most(K, 2, "sphere subcomplex gradient");

    std::vector<GradientField> parts;
    for (const SimplicialComplex& C : connected_components(K)) {
        if (C.dimension() <= 1) {
            parts.push_back(spanning_forest_gradient(C));
            continue;
        }
        std::vector<GradientPair> pairs;
        SimplicialComplex to_collapse = C;
        if (is_closed_surface(C)) {
            // A closed surface in the sphere is the sphere. Designate
            // one critical triangle; the rest collapses to a point.
            if (euler_characteristic(C) != 2)
                fail(Errc::NotSphereSubcomplex,
                     "closed surface component with Euler characteristic " +
                         std::to_string(euler_characteristic(C)));
            to_collapse = drop_simplex(C, C.simplices(2).front());
        }
        CollapseTrace trace = collapse_free_faces(to_collapse);
        if (trace.residual.dimension() > 1)
            fail(Errc::NotSphereSubcomplex, "component does not collapse, " +
                                                std::to_string(trace.residual.count(2)) +
                                                " triangles stuck");
        pairs = trace.removed;
        GradientField forest = spanning_forest_gradient(trace.residual);
        pairs.insert(pairs.end(), forest.pairs().begin(), forest.pairs().end());
        parts.push_back(GradientField(std::move(pairs)));
    }
    return GradientField::merge(parts);
}

GradientField cone_gradient(Vertex apex, const VertexScalarField& f,
                            const SimplicialComplex& lower_link_of_apex,
                            const GradientField& link_field) {
    if (lower_link_of_apex.empty())
        fail(Errc::Precondition, "cone over an empty lower link at vertex " +
                                     std::to_string(apex));
    for (const GradientPair& p : link_field.pairs())
        if (!lower_link_of_apex.contains(p.tail) || !lower_link_of_apex.contains(p.head))
            fail(Errc::Precondition, "link field reaches outside the lower link of vertex " +
                                         std::to_string(apex));

    std::vector<GradientPair> pairs;
    for (const GradientPair& p : link_field.pairs())
        pairs.push_back({cone(apex, p.tail), cone(apex, p.head)});

    std::vector<Vertex> critical_vertices;
    for (const Simplex& s : critical_simplices(lower_link_of_apex, link_field))
        if (s.dim() == 0) critical_vertices.push_back(s.vertices()[0]);
    // The forest below leaves at least one critical vertex per
    // component, so a nonempty lower link yields at least one.
    std::sort(critical_vertices.begin(), critical_vertices.end(),
              [&](Vertex a, Vertex b) { return f.key(a) < f.key(b); });
    pairs.push_back({Simplex{apex}, cone(apex, Simplex{critical_vertices.front()})});

    return GradientField(std::move(pairs));
}

GradientField lower_star_gradient(const SimplicialComplex& K, const VertexScalarField& f,
                                  Vertex v) {
    SimplicialComplex low = lower_link(K, f, v);
    if (low.empty()) return {};
    return cone_gradient(v, f, low, perfect_gradient_s2_subcomplex(low));
}

GradientField build_rp_gradient(const SimplicialComplex& K, const VertexScalarField& f) {
    require_dim_at_most(K, 3, "gradient construction");
    std::vector<GradientField> parts;
    for (Vertex v : vertices_by_level(K, f))
        parts.push_back(lower_star_gradient(K, f, v));
    return GradientField::merge(parts);
}

} // namespace plmorse
