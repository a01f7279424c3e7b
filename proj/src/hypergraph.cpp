#include "hyperiso/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hyperiso/combinatorics.hpp"

namespace hyperiso {

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    validate_and_finish(false);
}

Hypergraph::Hypergraph(int n, int r, const std::vector<std::vector<int>>& edge_lists) : n_(n), r_(r) {
    edges_.reserve(edge_lists.size());
    for (const auto& e : edge_lists) {
        VertexSet s = VertexSet::of(e);
        if (static_cast<int>(e.size()) != s.size())
            throw std::invalid_argument("edge has a repeated vertex");
        edges_.push_back(s);
    }
    validate_and_finish(false);
}

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges) : n_(n), r_(r), edges_(std::move(edges)) {
    validate_and_finish(false);
}

Hypergraph Hypergraph::mixed(int n, int r, std::vector<VertexSet> edges) {
    Hypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.edges_ = std::move(edges);
    h.validate_and_finish(true);
    return h;
}

void Hypergraph::validate_and_finish(bool allow_short_edges) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
    if (r_ < 1) throw std::invalid_argument("uniformity must be >= 1");
    const VertexSet all = VertexSet::full(n_);
    uniform_ = true;
    for (VertexSet e : edges_) {
        if (!e.is_subset_of(all)) throw std::invalid_argument("edge vertex out of range 1..n");
        const int sz = e.size();
        if (sz != r_) {
            if (!allow_short_edges || sz < 1 || sz > r_)
                throw std::invalid_argument("edge has " + std::to_string(sz) + " vertices, expected " +
                                            std::to_string(r_));
            uniform_ = false;
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

int Hypergraph::degree(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range");
    int d = 0;
    for (VertexSet e : edges_)
        if (e.contains(v)) ++d;
    return d;
}

std::vector<int> Hypergraph::degree_sequence() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (VertexSet e : edges_)
        e.for_each([&](int v) { ++deg[static_cast<std::size_t>(v - 1)]; });
    std::sort(deg.begin(), deg.end());
    return deg;
}

bool Hypergraph::has_edge(VertexSet e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexSet closed_neighborhood(const Hypergraph& h, VertexSet d) {
    if (!d.is_subset_of(h.vertices())) throw std::invalid_argument("set contains a vertex outside 1..n");
    if (d.empty()) return d;
    VertexSet out = d;
    for (VertexSet e : h.edges())
        if (e.intersects(d)) out = out | e;
    return out;
}

Induced induced(const Hypergraph& h, VertexSet x) {
    if (!x.is_subset_of(h.vertices())) throw std::invalid_argument("set contains a vertex outside 1..n");
    std::vector<int> original = x.to_vector();
    std::vector<int> new_label(static_cast<std::size_t>(h.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < original.size(); ++i)
        new_label[static_cast<std::size_t>(original[i])] = static_cast<int>(i) + 1;

    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if (!e.is_subset_of(x)) continue;
        VertexSet mapped;
        e.for_each([&](int v) { mapped = mapped.with(new_label[static_cast<std::size_t>(v)]); });
        edges.push_back(mapped);
    }
    Hypergraph g = h.uniform() ? Hypergraph(static_cast<int>(original.size()), h.uniformity(), std::move(edges))
                               : Hypergraph::mixed(static_cast<int>(original.size()), h.uniformity(), std::move(edges));
    return Induced{std::move(g), std::move(original)};
}

Induced deleted(const Hypergraph& h, VertexSet x) {
    if (!x.is_subset_of(h.vertices())) throw std::invalid_argument("set contains a vertex outside 1..n");
    return induced(h, h.vertices() - x);
}

bool is_connected(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n <= 1) return true;  // the empty hypergraph counts as vacuously connected
    VertexSet reach = VertexSet::of({1});
    bool grew = true;
    while (grew) {
        grew = false;
        for (VertexSet e : h.edges()) {
            if (e.intersects(reach) && !e.is_subset_of(reach)) {
                reach = reach | e;
                grew = true;
            }
        }
    }
    return reach == h.vertices();
}

Hypergraph shadow(const Hypergraph& h, int s) {
    if (s < 1 || s > h.uniformity())
        throw std::invalid_argument("shadow order must be in [1, r]");
    std::vector<VertexSet> out;
    for (VertexSet e : h.edges()) {
        std::vector<int> verts = e.to_vector();
        if (static_cast<int>(verts.size()) < s) continue;
        for_each_combination(static_cast<int>(verts.size()), s, [&](const std::vector<int>& idx) {
            VertexSet sub;
            for (int i : idx) sub = sub.with(verts[static_cast<std::size_t>(i - 1)]);
            out.push_back(sub);
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(h.vertex_count(), s, std::move(out));
}

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
    const int n = h.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    VertexSet seen;
    for (int v : perm) {
        if (v < 1 || v > n || seen.contains(v)) throw std::invalid_argument("not a permutation of 1..n");
        seen = seen.with(v);
    }
    std::vector<VertexSet> edges;
    edges.reserve(h.edges().size());
    for (VertexSet e : h.edges()) {
        VertexSet mapped;
        e.for_each([&](int v) { mapped = mapped.with(perm[static_cast<std::size_t>(v - 1)]); });
        edges.push_back(mapped);
    }
    return h.uniform() ? Hypergraph(n, h.uniformity(), std::move(edges))
                       : Hypergraph::mixed(n, h.uniformity(), std::move(edges));
}

}  // namespace hyperiso
