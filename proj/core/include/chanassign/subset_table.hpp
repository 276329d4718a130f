#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "chanassign/instance.hpp"

namespace chanassign {

using Mask = std::uint32_t;
using SpanValue = std::uint32_t;

/// Default cap on dense table entries (one SpanValue each).
inline constexpr std::uint64_t kDefaultTableEntryBudget = 1ull << 27;

/// Hard cap on n for any mask-indexed table.
inline constexpr int kMaxTableVertices = 24;

/// A pair (X, f) with X a vertex subset and f : X -> [radix] a per-vertex
/// lower bound. Digits are stored for the set bits of `subset` in ascending
/// vertex order.
struct BoundFunction {
    Mask subset = 0;
    std::vector<std::uint16_t> digits;
};

/// Mixed-radix codec for bound functions at a fixed (n, ell). The digit of
/// the lowest set bit is least significant; a digit d contributes (d-1) in
/// radix ell+1.
class FunctionCodec {
public:
    FunctionCodec(int n, Weight ell);

    int n() const { return n_; }
    Weight ell() const { return ell_; }
    std::uint32_t radix() const { return radix_; }

    /// radix^i, saturated at 2^63 to keep budget arithmetic safe.
    std::uint64_t power(int i) const { return pow_[i]; }

    std::uint64_t block_size(Mask subset) const { return pow_[std::popcount(subset)]; }

    /// Offset of f within the block of f.subset. Throws on out-of-range digits.
    std::uint64_t encode(const BoundFunction& f) const;

    BoundFunction decode(Mask subset, std::uint64_t offset) const;

    BoundFunction all_ones(Mask subset) const;

private:
    int n_;
    Weight ell_;
    std::uint32_t radix_;
    std::vector<std::uint64_t> pow_;
};

/// Yields all radix^{|X|} bound functions on X exactly once, in ascending
/// offset order.
class FunctionEnumerator {
public:
    FunctionEnumerator(const FunctionCodec& codec, Mask subset);

    bool done() const { return done_; }
    const BoundFunction& current() const { return f_; }
    std::uint64_t offset() const { return offset_; }
    void advance();

private:
    const FunctionCodec* codec_;
    BoundFunction f_;
    std::uint64_t offset_ = 0;
    bool done_ = false;
};

/// Dense per-subset storage of span values T[X, f] for all X with
/// |X| <= max_popcount. Blocks are write-once during construction (see
/// span_dp builders) and read-only afterwards; reads outside the stored
/// popcount range are a contract violation.
struct SpanTable {
    FunctionCodec codec;
    int max_popcount = 0;
    std::uint64_t entry_count = 0;
    std::vector<std::vector<SpanValue>> blocks;  // indexed by subset mask

    SpanTable(FunctionCodec c, int maxpc) : codec(std::move(c)), max_popcount(maxpc) {}

    bool has_block(Mask subset) const {
        return std::popcount(subset) <= max_popcount && !blocks[subset].empty();
    }

    SpanValue at(Mask subset, std::uint64_t offset) const;
    SpanValue at(const BoundFunction& f) const { return at(f.subset, codec.encode(f)); }
};

/// Masks over [0, 2^n) grouped by popcount, ascending mask value within a
/// group; groups above max_popcount are empty.
std::vector<std::vector<Mask>> masks_by_popcount(int n, int max_popcount);

/// C(n, k); exact for the n this project admits (n <= kMaxTableVertices).
std::uint64_t binomial(int n, int k);

/// C(n, i) * radix^i, saturated at 2^63: the entry count of one popcount layer.
std::uint64_t layer_entry_count(int n, std::uint32_t radix, int i);

/// Sum over i <= max_popcount of C(n, i) * radix^i, saturated at 2^63; this
/// is the exact entry count of a table truncated at max_popcount, and equals
/// (radix+1)^n when max_popcount = n.
std::uint64_t table_entry_bound(int n, std::uint32_t radix, int max_popcount);

}  // namespace chanassign
