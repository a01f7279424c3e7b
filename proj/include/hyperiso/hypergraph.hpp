#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hyperiso {

inline constexpr int kMaxVertices = 64;

/// Subset of a hypergraph's 1-based vertex range {1..n}, one bit per vertex.
/// Bit v-1 set means vertex v is a member.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }
    /// The full set {1..n}.
    static VertexSet full(int n) {
        return from_bits(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }

    std::uint64_t bits() const { return bits_; }
    bool contains(int v) const { return v >= 1 && v <= 64 && (bits_ >> (v - 1)) & 1; }
    VertexSet with(int v) const { return from_bits(bits_ | (1ULL << (v - 1))); }
    VertexSet without(int v) const { return from_bits(bits_ & ~(1ULL << (v - 1))); }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; set must be non-empty.
    int min_vertex() const { return __builtin_ctzll(bits_) + 1; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
        return out;
    }

    template <typename F>
    void for_each(F fn) const {
        for (std::uint64_t b = bits_; b; b &= b - 1) fn(__builtin_ctzll(b) + 1);
    }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    /// Set difference a \ b.
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Names the clique pattern K_k^r: k vertices, every r-subset an edge.
/// k >= r gives a clique with edges; k < r gives the edgeless pattern of
/// the small-clique regime; k = 1 recovers domination.
struct CliqueTarget {
    int k = 1;
    int r = 1;
};

/// Immutable r-uniform hypergraph on vertices {1..n}. Edges are stored
/// deduplicated and sorted. The mixed() constructor admits edges smaller
/// than r (used only by quotient-degenerate constructions); uniform()
/// reports whether every edge has exactly r vertices.
class Hypergraph {
public:
    Hypergraph() = default;  // (0 vertices, r = 1, no edges)
    Hypergraph(int n, int r);
    Hypergraph(int n, int r, const std::vector<std::vector<int>>& edge_lists);
    Hypergraph(int n, int r, std::vector<VertexSet> edges);
    static Hypergraph mixed(int n, int r, std::vector<VertexSet> edges);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    bool uniform() const { return uniform_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexSet vertices() const { return VertexSet::full(n_); }
    int degree(int v) const;
    /// Ascending degree sequence.
    std::vector<int> degree_sequence() const;
    bool has_edge(VertexSet e) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
    }

private:
    void validate_and_finish(bool allow_short_edges);

    int n_ = 0;
    int r_ = 1;
    bool uniform_ = true;
    std::vector<VertexSet> edges_;  // ascending by bit pattern
};

/// N_H[D]: D together with every vertex sharing an edge with a member of D.
VertexSet closed_neighborhood(const Hypergraph& h, VertexSet d);

/// Result of induced/deleted: vertices relabeled to 1..|X| preserving order;
/// original[i] is the original label of new vertex i+1.
struct Induced {
    Hypergraph graph;
    std::vector<int> original;
};

/// Subhypergraph induced by X, relabeled contiguously.
Induced induced(const Hypergraph& h, VertexSet x);

/// H - X: the subhypergraph induced by V(H) \ X.
Induced deleted(const Hypergraph& h, VertexSet x);

/// Edge-path connectivity. Single-vertex and empty hypergraphs count as
/// connected; a vertex lying in no edge disconnects any larger hypergraph.
bool is_connected(const Hypergraph& h);

/// H^(s): same vertices, edge set = all s-subsets of edges of H.
/// Edges smaller than s (mixed hypergraphs only) contribute nothing.
Hypergraph shadow(const Hypergraph& h, int s);

/// Relabels vertices; perm[old-1] = new label, perm a bijection on {1..n}.
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm);

}  // namespace hyperiso
