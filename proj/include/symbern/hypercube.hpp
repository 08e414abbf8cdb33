#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symbern {

/// Largest dimension for which the full hypercube is materialized.
inline constexpr std::size_t kMaxDimension = 20;

/**
 * A binary vector x in {0,1}^d. Coordinate 1 is the fastest-varying bit of
 * the reverse-lexicographic order, so the 0-based position of x in that
 * order is sum_h x_h 2^(h-1).
 *
 * Vectors of any length are representable (copula examples go to d = 103);
 * only index()/from_index() are limited to kMaxDimension.
 */
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::vector<std::uint8_t> bits);

    static BitVector zeros(std::size_t d) { return BitVector(std::vector<std::uint8_t>(d, 0)); }
    static BitVector from_index(std::uint32_t index, std::size_t d);
    /// Parses a bitstring, coordinate 1 leftmost ("10100").
    static BitVector parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t h) const { return bits_[h]; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::size_t sum() const noexcept;
    BitVector complement() const;
    /// 0-based revlex position; requires size() <= kMaxDimension.
    std::uint32_t index() const;
    /// s_i = (i // 0).
    BitVector append_zero() const;
    std::string to_string() const;

    auto operator<=>(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// All 2^d vectors in revlex order.
std::vector<BitVector> enumerate(std::size_t d);

inline std::uint32_t hypercube_size(std::size_t d) { return std::uint32_t{1} << d; }
inline std::uint32_t complement_index(std::uint32_t index, std::size_t d) { return (hypercube_size(d) - 1) ^ index; }
inline unsigned bit(std::uint32_t index, std::size_t h) { return (index >> h) & 1u; }
std::size_t popcount(std::uint32_t index);

/**
 * The star sets for dimension d: X_d^* (vectors of length d whose component
 * sum is M_d or m_d) and I_{d-1}^* (length d-1 vectors with the same sums).
 */
struct StarSets {
    std::size_t d = 0;
    std::size_t M = 0;  ///< floor(d/2)
    std::size_t m = 0;  ///< ceil(d/2)
    std::vector<BitVector> x_star;  ///< revlex order
    std::vector<BitVector> i_star;  ///< revlex order
    std::size_t n_star = 0;

    bool contains_x(const BitVector& x) const;
};

/// Requires 2 <= d <= kMaxDimension.
StarSets star_sets(std::size_t d);

/// The pair (M_d, m_d) without materializing the sets; valid for any d >= 1.
inline std::size_t lower_half(std::size_t d) { return d / 2; }
inline std::size_t upper_half(std::size_t d) { return (d + 1) / 2; }

void require_dimension(std::size_t d, std::size_t lo, std::size_t hi);

}  // namespace symbern
