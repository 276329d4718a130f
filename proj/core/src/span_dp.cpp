#include "chanassign/span_dp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <thread>

#include "chanassign/errors.hpp"

namespace chanassign {

namespace {

constexpr SpanValue kUnset = std::numeric_limits<SpanValue>::max();

std::vector<int> mask_vertices(Mask m) {
    std::vector<int> vs;
    while (m) {
        vs.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return vs;
}

// One dense block of T[X, .] from the already-built blocks of layer |X|-1.
//
// For every v in X and every a = f(v), the candidate a + T[X\{v}, f_v] - 1 is
// folded into the block minimum. Functions g = f restricted to X\{v} are
// swept in mixed-radix order while both the offset of f within block X and
// the offset of f_v within block X\{v} are updated incrementally, so a sweep
// step costs O(1) amortized.
std::vector<SpanValue> compute_block(const ChannelInstance& inst, const FunctionCodec& codec,
                                     Mask X, const std::vector<std::vector<SpanValue>>& blocks) {
    const std::uint32_t radix = codec.radix();
    const int k = std::popcount(X);
    if (k == 0) return {1};  // the empty assignment has span 1

    std::vector<SpanValue> out(codec.block_size(X), kUnset);
    const std::vector<int> verts = mask_vertices(X);

    std::vector<std::uint64_t> pow_in_x(k);
    for (int r = 0; r < k; ++r) pow_in_x[r] = codec.power(r);

    std::vector<std::uint16_t> digits(k > 0 ? k - 1 : 0);
    std::vector<std::uint64_t> pow_in_y(k > 0 ? k - 1 : 0);
    std::vector<Weight> wv(k > 0 ? k - 1 : 0);
    std::vector<std::uint32_t> step_at(k > 0 ? k - 1 : 0);

    for (int t = 0; t < k; ++t) {
        const int v = verts[t];
        const Mask Y = X & ~(Mask{1} << v);
        const std::vector<SpanValue>& prev = blocks[Y];
        assert(!prev.empty() || Y == 0);

        // X-ranks and weights of the remaining vertices, in Y order.
        for (int j = 0, r = 0; j < k; ++j) {
            if (j == t) continue;
            pow_in_y[r] = codec.power(r) /* rank in Y == r */;
            wv[r] = inst.weight(v, verts[j]);
            ++r;
        }

        for (std::uint32_t a = 1; a <= radix; ++a) {
            // digit map for coordinate r: d -> 1 + max(wv[r], d - a); the
            // increment d -> d+1 bumps the mapped digit iff d >= a + wv[r]
            std::uint64_t f_off = (a - 1) * pow_in_x[t];
            std::uint64_t fv_off = 0;
            for (int r = 0; r < k - 1; ++r) {
                digits[r] = 1;
                fv_off += wv[r] * pow_in_y[r];  // mapped digit of d=1 is 1 + wv[r]
                step_at[r] = a + wv[r];
            }
            // offset step of a digit r in block X: skip over v's position
            // when r >= t
            for (;;) {
                const SpanValue cand = a + prev[fv_off] - 1;
                if (cand < out[f_off]) out[f_off] = cand;

                int r = 0;
                while (r < k - 1) {
                    const int xrank = r < t ? r : r + 1;
                    if (digits[r] < radix) {
                        if (digits[r] >= step_at[r]) fv_off += pow_in_y[r];
                        ++digits[r];
                        f_off += pow_in_x[xrank];
                        break;
                    }
                    // reset radix -> 1
                    f_off -= static_cast<std::uint64_t>(radix - 1) * pow_in_x[xrank];
                    if (radix > step_at[r])
                        fv_off -= static_cast<std::uint64_t>(radix - step_at[r]) * pow_in_y[r];
                    digits[r] = 1;
                    ++r;
                }
                if (r == k - 1) break;
            }
        }
    }
    return out;
}

void build_layer(const ChannelInstance& inst, const FunctionCodec& codec,
                 const std::vector<Mask>& layer, std::vector<std::vector<SpanValue>>& blocks,
                 int threads) {
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            blocks[layer[i]] = compute_block(inst, codec, layer[i], blocks);
    };
    if (threads <= 1 || layer.size() < 64) {
        work(0, layer.size());
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (layer.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t b = std::min(layer.size(), t * chunk);
        std::size_t e = std::min(layer.size(), b + chunk);
        if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
}

SpanTable build_table(const ChannelInstance& inst, int max_popcount, const DpOptions& opts) {
    const int n = inst.n();
    if (n > kMaxTableVertices) throw SizingError("instance too large for subset tables");
    FunctionCodec codec(n, inst.ell());

    std::uint64_t total = table_entry_bound(n, codec.radix(), max_popcount);
    if (total > opts.max_entries)
        throw SizingError("table would need " + std::to_string(total) +
                          " entries, budget is " + std::to_string(opts.max_entries));

    SpanTable table(codec, max_popcount);
    table.blocks.resize(std::size_t{1} << n);
    auto layers = masks_by_popcount(n, max_popcount);
    for (int pc = 0; pc <= max_popcount; ++pc)
        build_layer(inst, table.codec, layers[pc], table.blocks, opts.threads);
    table.entry_count = total;
    return table;
}

}  // namespace

BoundFunction reduced_bound(const ChannelInstance& inst, const BoundFunction& f, int v) {
    if (!(f.subset >> v & 1)) throw std::invalid_argument("vertex not in subset");
    const std::vector<int> verts = mask_vertices(f.subset);
    int fv = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v) fv = f.digits[i];

    BoundFunction g;
    g.subset = f.subset & ~(Mask{1} << v);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] == v) continue;
        int lift = static_cast<int>(f.digits[i]) - fv;
        int w = static_cast<int>(inst.weight(v, verts[i]));
        g.digits.push_back(static_cast<std::uint16_t>(1 + std::max(w, std::max(lift, 0))));
    }
    return g;
}

SpanTable build_full_table(const ChannelInstance& inst, const DpOptions& opts) {
    return build_table(inst, inst.n(), opts);
}

SpanTable build_half_table(const ChannelInstance& inst, const DpOptions& opts) {
    return build_table(inst, inst.n() / 2, opts);
}

Color dp_span(const ChannelInstance& inst, const DpOptions& opts) {
    const int n = inst.n();
    if (n > kMaxTableVertices) throw SizingError("instance too large for subset tables");
    FunctionCodec codec(n, inst.ell());

    // only two popcount layers are alive at any time
    std::uint64_t peak = 0;
    {
        std::uint64_t prev = 0;
        for (int i = 0; i <= n; ++i) {
            std::uint64_t cur = layer_entry_count(n, codec.radix(), i);
            peak = std::max(peak, prev + cur);
            prev = cur;
        }
    }
    if (peak > opts.max_entries)
        throw SizingError("peak layer size " + std::to_string(peak) + " entries, budget is " +
                          std::to_string(opts.max_entries));

    std::vector<std::vector<SpanValue>> blocks(std::size_t{1} << n);
    auto layers = masks_by_popcount(n, n);
    for (int pc = 0; pc <= n; ++pc) {
        build_layer(inst, codec, layers[pc], blocks, opts.threads);
        if (pc >= 1)
            for (Mask m : layers[pc - 1]) {
                blocks[m].clear();
                blocks[m].shrink_to_fit();
            }
    }
    const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
    return blocks[full][0];  // the all-ones function has offset 0
}

std::vector<Color> reconstruct_on_subset(const ChannelInstance& inst, const SpanTable& table,
                                         const BoundFunction& start) {
    std::vector<Color> colors(inst.n(), 0);
    BoundFunction f = start;
    Color base = 1;

    while (f.subset != 0) {
        const SpanValue target = table.at(f);
        const std::vector<int> verts = mask_vertices(f.subset);

        int best = -1;
        BoundFunction best_g;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            BoundFunction g = reduced_bound(inst, f, verts[i]);
            SpanValue cand = f.digits[i] + table.at(g) - 1;
            if (cand == target) {
                best = static_cast<int>(i);
                best_g = std::move(g);
                break;  // vertices ascend, so the first hit is the smallest
            }
        }
        if (best < 0)
            throw std::logic_error("no vertex attains the table minimum; table is inconsistent");

        colors[verts[best]] = base + f.digits[best] - 1;
        base = colors[verts[best]];
        f = std::move(best_g);
    }
    return colors;
}

Assignment reconstruct_assignment(const ChannelInstance& inst, const SpanTable& table) {
    const Mask full = inst.n() == 0 ? 0 : (Mask{1} << inst.n()) - 1;
    std::vector<Color> colors =
        reconstruct_on_subset(inst, table, table.codec.all_ones(full));
    return Assignment{std::move(colors)};
}

DpSolveResult dp_solve(const ChannelInstance& inst, const DpOptions& opts) {
    SpanTable table = build_full_table(inst, opts);
    const Mask full = inst.n() == 0 ? 0 : (Mask{1} << inst.n()) - 1;
    DpSolveResult res;
    res.span = table.at(full, 0);
    res.assignment = reconstruct_assignment(inst, table);
    res.table_entries = table.entry_count;

    AssignmentReport rep = evaluate_assignment(inst, res.assignment);
    if (!rep.proper || rep.span != res.span)
        throw std::logic_error("reconstructed assignment failed verification");
    return res;
}

}  // namespace chanassign
