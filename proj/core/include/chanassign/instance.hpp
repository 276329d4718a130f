#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chanassign {

using Color = std::uint32_t;
using Weight = std::uint32_t;

/// Undirected weighted edge, 0-based endpoints with u < v, weight >= 1.
struct Edge {
    int u = 0;
    int v = 0;
    Weight w = 0;
};

/// A symmetric edge-weighted graph on vertices 0..n-1. A pair without a
/// stored edge has weight 0. `ell()` is always recomputed as the maximum
/// stored weight (0 for an edgeless graph). Immutable after construction.
class ChannelInstance {
public:
    ChannelInstance() = default;
    ChannelInstance(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    Weight ell() const { return ell_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Weight of the pair {u, v}; 0 when no edge is stored.
    Weight weight(int u, int v) const { return wmat_[static_cast<std::size_t>(u) * n_ + v]; }

    /// Edges sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    /// Neighbors of u with weights, sorted by vertex index.
    const std::vector<std::pair<int, Weight>>& neighbors(int u) const { return adj_[u]; }

    /// Copy with one extra isolated vertex appended (index n()).
    ChannelInstance with_isolated_vertex() const;

private:
    int n_ = 0;
    Weight ell_ = 0;
    std::vector<Edge> edges_;
    std::vector<Weight> wmat_;
    std::vector<std::vector<std::pair<int, Weight>>> adj_;
};

/// Colors, one per vertex, all >= 1.
struct Assignment {
    std::vector<Color> colors;

    /// Maximum color; 1 for the empty assignment by convention.
    Color span() const;
};

struct Violation {
    int u = 0;
    int v = 0;
    Weight w = 0;
    Color dist = 0;
};

struct AssignmentReport {
    bool proper = true;
    Color span = 1;
    std::vector<Violation> violations;
};

/// Checks |c(u)-c(v)| >= w(u,v) for every stored edge and reports the span.
/// Throws std::invalid_argument when the color count does not match n.
AssignmentReport evaluate_assignment(const ChannelInstance& inst, const Assignment& a);

/// Deterministic random instance. Every unordered pair {u,v}, enumerated with
/// u ascending and v ascending within u, becomes an edge independently with
/// probability `density`; edge weights are uniform in [1, wmax]. The generator
/// is splitmix64 seeded with `seed`; one draw per pair decides presence and,
/// only for present edges, a second draw picks the weight. This makes results
/// reproducible across platforms and runs.
ChannelInstance random_instance(int n, double density, Weight wmax, std::uint64_t seed);

/// Parses the `p ca <n> <m>` format (see README). Lines starting with '#' or
/// 'c' are comments. In strict mode (default) a zero-weight edge line is an
/// error; otherwise such lines are skipped.
ChannelInstance parse_instance(std::istream& in, bool strict = true);
ChannelInstance parse_instance(const std::string& text, bool strict = true);

/// Canonical text form: header plus edge lines sorted by (u, v), 1-based ids.
std::string serialize_instance(const ChannelInstance& inst);

/// Parses the `p assign <n>` format.
Assignment parse_assignment(std::istream& in);
Assignment parse_assignment(const std::string& text);

std::string serialize_assignment(const Assignment& a);

/// FNV-1a hash of the canonical serialization.
std::uint64_t instance_digest(const ChannelInstance& inst);

/// splitmix64; the documented generator behind random_instance.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace chanassign
