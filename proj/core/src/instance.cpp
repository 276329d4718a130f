#include "chanassign/instance.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "chanassign/errors.hpp"

namespace chanassign {

namespace {

// Keeps the dense weight matrix affordable; every solver in this project
// gives up far below this anyway.
constexpr int kMaxVertices = 4096;

}  // namespace

ChannelInstance::ChannelInstance(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loop edge");
        if (e.w == 0) throw std::invalid_argument("zero edge weight");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    wmat_.assign(static_cast<std::size_t>(n_) * n_, 0);
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        wmat_[static_cast<std::size_t>(e.u) * n_ + e.v] = e.w;
        wmat_[static_cast<std::size_t>(e.v) * n_ + e.u] = e.w;
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
        ell_ = std::max(ell_, e.w);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

ChannelInstance ChannelInstance::with_isolated_vertex() const {
    return ChannelInstance(n_ + 1, edges_);
}

Color Assignment::span() const {
    Color s = 1;
    for (Color c : colors) s = std::max(s, c);
    return s;
}

AssignmentReport evaluate_assignment(const ChannelInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.colors.size()) != inst.n())
        throw std::invalid_argument("assignment has wrong number of colors");
    for (Color c : a.colors)
        if (c == 0) throw std::invalid_argument("colors must be positive");

    AssignmentReport rep;
    rep.span = a.span();
    for (const Edge& e : inst.edges()) {
        Color cu = a.colors[e.u], cv = a.colors[e.v];
        Color dist = cu > cv ? cu - cv : cv - cu;
        if (dist < e.w) rep.violations.push_back({e.u, e.v, e.w, dist});
    }
    rep.proper = rep.violations.empty();
    return rep;
}

ChannelInstance random_instance(int n, double density, Weight wmax, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must be in [0,1]");
    if (wmax == 0) throw std::invalid_argument("wmax must be >= 1");

    // Presence test on the raw 64-bit stream keeps generation platform-exact.
    bool all = density >= 1.0;
    bool none = density <= 0.0;
    std::uint64_t threshold = 0;
    if (!all && !none)
        threshold = static_cast<std::uint64_t>(std::ldexp(density, 64));

    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (none) continue;
            bool present = all || rng.next() < threshold;
            if (!present) continue;
            Weight w = static_cast<Weight>(1 + rng.next() % wmax);
            edges.push_back({u, v, w});
        }
    }
    return ChannelInstance(n, std::move(edges));
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) return true;
    return line[i] == '#' || line[i] == 'c';
}

// Parses all tokens of a line; returns false on any trailing garbage.
template <typename... Ts>
bool scan_line(const std::string& line, const char* tag, Ts&... vals) {
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head) || head != tag) return false;
    bool ok = ((ss >> vals) && ...);
    if (!ok) return false;
    std::string extra;
    return !(ss >> extra);
}

}  // namespace

ChannelInstance parse_instance(std::istream& in, bool strict) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    long long seen = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (n < 0) {
            std::string kind;
            std::istringstream ss(line);
            std::string head;
            if (!(ss >> head) || head != "p" || !(ss >> kind) || kind != "ca" || !(ss >> n >> m))
                throw ParseError(lineno, "expected header 'p ca <n> <m>'");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            if (n < 0 || n > kMaxVertices) throw ParseError(lineno, "vertex count out of range");
            if (m < 0) throw ParseError(lineno, "negative edge count");
            continue;
        }
        long long u, v, w;
        if (!scan_line(line, "e", u, v, w))
            throw ParseError(lineno, "expected edge line 'e <u> <v> <w>'");
        if (seen == m) throw ParseError(lineno, "more edge lines than declared");
        ++seen;
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "loop edge");
        if (w <= 0) {
            if (w == 0 && !strict) continue;
            throw ParseError(lineno, "edge weight must be >= 1");
        }
        int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
        if (a > b) std::swap(a, b);
        for (const Edge& e : edges)
            if (e.u == a && e.v == b) throw ParseError(lineno, "duplicate edge");
        edges.push_back({a, b, static_cast<Weight>(w)});
    }
    if (n < 0) throw ParseError(lineno, "missing header 'p ca <n> <m>'");
    if (seen != m) throw ParseError(lineno, "fewer edge lines than declared");
    return ChannelInstance(static_cast<int>(n), std::move(edges));
}

ChannelInstance parse_instance(const std::string& text, bool strict) {
    std::istringstream ss(text);
    return parse_instance(ss, strict);
}

std::string serialize_instance(const ChannelInstance& inst) {
    std::ostringstream out;
    out << "p ca " << inst.n() << ' ' << inst.edge_count() << '\n';
    for (const Edge& e : inst.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return out.str();
}

Assignment parse_assignment(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1;
    Assignment a;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (n < 0) {
            std::istringstream ss(line);
            std::string head, kind;
            if (!(ss >> head) || head != "p" || !(ss >> kind) || kind != "assign" || !(ss >> n) || n < 0)
                throw ParseError(lineno, "expected header 'p assign <n>'");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        std::istringstream ss(line);
        long long c;
        while (ss >> c) {
            if (c < 1) throw ParseError(lineno, "colors must be >= 1");
            a.colors.push_back(static_cast<Color>(c));
        }
        if (!ss.eof()) throw ParseError(lineno, "invalid color token");
    }
    if (n < 0) throw ParseError(lineno, "missing header 'p assign <n>'");
    if (static_cast<long long>(a.colors.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " colors, got " +
                                     std::to_string(a.colors.size()));
    return a;
}

Assignment parse_assignment(const std::string& text) {
    std::istringstream ss(text);
    return parse_assignment(ss);
}

std::string serialize_assignment(const Assignment& a) {
    std::ostringstream out;
    out << "p assign " << a.colors.size() << '\n';
    for (std::size_t i = 0; i < a.colors.size(); ++i)
        out << a.colors[i] << (i + 1 == a.colors.size() ? "" : " ");
    if (!a.colors.empty()) out << '\n';
    return out.str();
}

std::uint64_t instance_digest(const ChannelInstance& inst) {
    std::string text = serialize_instance(inst);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace chanassign
