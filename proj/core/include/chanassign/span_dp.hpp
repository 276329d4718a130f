#pragma once

#include <cstdint>

#include "chanassign/instance.hpp"
#include "chanassign/subset_table.hpp"

namespace chanassign {

struct DpOptions {
    std::uint64_t max_entries = kDefaultTableEntryBudget;
    int threads = 1;
};

/// Lower bound induced on X \ {v} when v is placed at its own bound as the
/// minimum color: x -> 1 + max(w(v,x), f(x) - f(v)). Throws when v is not in
/// f's subset.
BoundFunction reduced_bound(const ChannelInstance& inst, const BoundFunction& f, int v);

/// T[X, f] for every subset X; entry count (ell+2)^n. Refuses with a
/// SizingError when that exceeds opts.max_entries.
SpanTable build_full_table(const ChannelInstance& inst, const DpOptions& opts = {});

/// T[X, f] restricted to |X| <= floor(n/2); the table behind mim_span.
SpanTable build_half_table(const ChannelInstance& inst, const DpOptions& opts = {});

/// Minimum span, computed with the same recurrence but keeping only two
/// popcount layers alive, so it runs in O((ell+2)^n) time and far less space
/// than a full table.
Color dp_span(const ChannelInstance& inst, const DpOptions& opts = {});

/// Proper minimum-span assignment recovered by re-walking the recurrence from
/// (V, all-ones) on a full table; at every step the smallest vertex attaining
/// the minimum is removed and receives color base + f(v) - 1.
Assignment reconstruct_assignment(const ChannelInstance& inst, const SpanTable& table);

/// Same walk from an arbitrary (X, f); returns n colors with 0 outside X.
/// Every popcount below |X| must be present in the table.
std::vector<Color> reconstruct_on_subset(const ChannelInstance& inst, const SpanTable& table,
                                         const BoundFunction& start);

struct DpSolveResult {
    Color span = 1;
    Assignment assignment;
    std::uint64_t table_entries = 0;
};

/// Full table + reconstruction; the assignment is re-verified before return.
DpSolveResult dp_solve(const ChannelInstance& inst, const DpOptions& opts = {});

}  // namespace chanassign
