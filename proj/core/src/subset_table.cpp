#include "chanassign/subset_table.hpp"

#include <stdexcept>

namespace chanassign {

namespace {

constexpr std::uint64_t kSaturate = 1ull << 63;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturate || b >= kSaturate || a > kSaturate / b) return kSaturate;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a || s >= kSaturate) return kSaturate;
    return s;
}

}  // namespace

FunctionCodec::FunctionCodec(int n, Weight ell) : n_(n), ell_(ell), radix_(ell + 1) {
    if (n < 0 || n > kMaxTableVertices)
        throw std::invalid_argument("vertex count out of range for subset tables");
    pow_.resize(n + 1);
    pow_[0] = 1;
    for (int i = 1; i <= n; ++i) pow_[i] = sat_mul(pow_[i - 1], radix_);
}

std::uint64_t FunctionCodec::encode(const BoundFunction& f) const {
    if (static_cast<int>(f.digits.size()) != std::popcount(f.subset))
        throw std::invalid_argument("digit count does not match subset size");
    std::uint64_t off = 0;
    for (std::size_t i = f.digits.size(); i-- > 0;) {
        std::uint16_t d = f.digits[i];
        if (d < 1 || d > radix_) throw std::invalid_argument("bound digit out of range");
        off = off * radix_ + (d - 1);
    }
    return off;
}

BoundFunction FunctionCodec::decode(Mask subset, std::uint64_t offset) const {
    int k = std::popcount(subset);
    if (offset >= block_size(subset)) throw std::invalid_argument("offset out of range");
    BoundFunction f;
    f.subset = subset;
    f.digits.resize(k);
    for (int i = 0; i < k; ++i) {
        f.digits[i] = static_cast<std::uint16_t>(offset % radix_ + 1);
        offset /= radix_;
    }
    return f;
}

BoundFunction FunctionCodec::all_ones(Mask subset) const {
    BoundFunction f;
    f.subset = subset;
    f.digits.assign(std::popcount(subset), 1);
    return f;
}

FunctionEnumerator::FunctionEnumerator(const FunctionCodec& codec, Mask subset)
    : codec_(&codec) {
    f_ = codec.all_ones(subset);
}

void FunctionEnumerator::advance() {
    ++offset_;
    for (std::size_t i = 0; i < f_.digits.size(); ++i) {
        if (f_.digits[i] < codec_->radix()) {
            ++f_.digits[i];
            return;
        }
        f_.digits[i] = 1;
    }
    done_ = true;
}

SpanValue SpanTable::at(Mask subset, std::uint64_t offset) const {
    if (std::popcount(subset) > max_popcount)
        throw std::logic_error("lookup outside the stored popcount range");
    return blocks[subset][offset];
}

std::vector<std::vector<Mask>> masks_by_popcount(int n, int max_popcount) {
    std::vector<std::vector<Mask>> layers(n + 1);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        int pc = std::popcount(m);
        if (pc <= max_popcount) layers[pc].push_back(m);
    }
    return layers;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    // n is capped at kMaxTableVertices, so this never overflows
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= static_cast<std::uint64_t>(n - k + i);
        r /= i;
    }
    return r;
}

std::uint64_t layer_entry_count(int n, std::uint32_t radix, int i) {
    std::uint64_t rp = 1;
    for (int j = 0; j < i; ++j) rp = sat_mul(rp, radix);
    return sat_mul(binomial(n, i), rp);
}

std::uint64_t table_entry_bound(int n, std::uint32_t radix, int max_popcount) {
    std::uint64_t total = 0, rp = 1;
    for (int i = 0; i <= max_popcount; ++i) {
        total = sat_add(total, sat_mul(binomial(n, i), rp));
        rp = sat_mul(rp, radix);
    }
    return total;
}

}  // namespace chanassign
