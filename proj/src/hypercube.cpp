#include "symbern/hypercube.hpp"

#include "symbern/error.hpp"

#include <algorithm>
#include <bit>

namespace symbern {

void require_dimension(std::size_t d, std::size_t lo, std::size_t hi) {
    if (d < lo || d > hi) {
        throw Error(ErrorCode::DimensionOutOfRange,
                    "dimension " + std::to_string(d) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw Error(ErrorCode::InputOutOfRange, "bit vector entries must be 0 or 1");
    }
}

BitVector BitVector::from_index(std::uint32_t index, std::size_t d) {
    require_dimension(d, 0, kMaxDimension);
    if (index >= hypercube_size(d)) throw Error(ErrorCode::IndexOutOfRange, "hypercube index out of range");
    std::vector<std::uint8_t> bits(d);
    for (std::size_t h = 0; h < d; ++h) bits[h] = static_cast<std::uint8_t>(bit(index, h));
    return BitVector(std::move(bits));
}

BitVector BitVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::ParseError, "malformed bitstring '" + std::string(text) + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitVector(std::move(bits));
}

std::size_t BitVector::sum() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitVector BitVector::complement() const {
    std::vector<std::uint8_t> out(bits_.size());
    std::transform(bits_.begin(), bits_.end(), out.begin(), [](std::uint8_t b) { return std::uint8_t(1 - b); });
    return BitVector(std::move(out));
}

std::uint32_t BitVector::index() const {
    if (bits_.size() > kMaxDimension) {
        throw Error(ErrorCode::DimensionTooLarge, "revlex index requires d <= 20");
    }
    std::uint32_t idx = 0;
    for (std::size_t h = 0; h < bits_.size(); ++h) idx |= std::uint32_t{bits_[h]} << h;
    return idx;
}

BitVector BitVector::append_zero() const {
    auto out = bits_;
    out.push_back(0);
    return BitVector(std::move(out));
}

std::string BitVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t h = 0; h < bits_.size(); ++h) s[h] = static_cast<char>('0' + bits_[h]);
    return s;
}

std::vector<BitVector> enumerate(std::size_t d) {
    require_dimension(d, 1, kMaxDimension);
    std::vector<BitVector> out;
    out.reserve(hypercube_size(d));
    for (std::uint32_t i = 0; i < hypercube_size(d); ++i) out.push_back(BitVector::from_index(i, d));
    return out;
}

std::size_t popcount(std::uint32_t index) { return static_cast<std::size_t>(std::popcount(index)); }

bool StarSets::contains_x(const BitVector& x) const {
    if (x.size() != d) return false;
    auto s = x.sum();
    return s == M || s == m;
}

StarSets star_sets(std::size_t d) {
    require_dimension(d, 2, kMaxDimension);
    StarSets s;
    s.d = d;
    s.M = lower_half(d);
    s.m = upper_half(d);
    for (std::uint32_t i = 0; i < hypercube_size(d); ++i) {
        auto c = popcount(i);
        if (c == s.M || c == s.m) s.x_star.push_back(BitVector::from_index(i, d));
    }
    for (std::uint32_t i = 0; i < hypercube_size(d - 1); ++i) {
        auto c = popcount(i);
        if (c == s.M || c == s.m) s.i_star.push_back(BitVector::from_index(i, d - 1));
    }
    s.n_star = s.i_star.size();
    return s;
}

}  // namespace symbern
