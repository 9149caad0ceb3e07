#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinlab {

using Mask = std::uint32_t;

inline constexpr int kDefaultMaxDimension = 16;
inline constexpr int kHardMaxDimension = 30;

/// Quadratic form Q_{r,s}. Generators 0..r-1 square to -1, generators r..n-1
/// square to +1 (the convention v*v = -Q(v), with Q positive on the first r).
class Signature {
  public:
    Signature() = default;

    /// Throws std::invalid_argument when r or s is negative or r+s exceeds the cap.
    Signature(int r, int s, int max_dimension = kDefaultMaxDimension) : r_(r), s_(s) {
        if (r < 0 || s < 0)
            throw std::invalid_argument("signature counts must be non-negative");
        if (max_dimension > kHardMaxDimension)
            max_dimension = kHardMaxDimension;
        if (r + s > max_dimension)
            throw std::invalid_argument("signature dimension " + std::to_string(r + s) +
                                        " exceeds cap " + std::to_string(max_dimension));
    }

    static Signature euclidean(int n, int max_dimension = kDefaultMaxDimension) {
        return Signature(n, 0, max_dimension);
    }

    int r() const { return r_; }
    int s() const { return s_; }
    int n() const { return r_ + s_; }

    /// Number of basis blades, 2^n.
    std::size_t blade_count() const { return std::size_t{1} << n(); }
    Mask full_mask() const { return n() == 0 ? 0u : static_cast<Mask>((std::uint64_t{1} << n()) - 1); }
    /// Bits of generators squaring to -1.
    Mask negative_mask() const { return static_cast<Mask>((std::uint64_t{1} << r_) - 1); }

    /// e_i * e_i, as +1 or -1.
    int square(int i) const { return i < r_ ? -1 : +1; }
    bool fits(Mask m) const { return (m & ~full_mask()) == 0; }

    friend bool operator==(const Signature&, const Signature&) = default;

  private:
    int r_ = 0;
    int s_ = 0;
};

inline int grade(Mask m) { return std::popcount(m); }

/// Sign picked up by moving the generators of `b` past those of `a` into
/// ascending order, not counting the squares of shared generators.
inline int reordering_sign(Mask a, Mask b) {
    a >>= 1;
    int swaps = 0;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

struct BladeProduct {
    int sign;
    Mask mask;
    friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// e_a * e_b = sign * e_{a xor b}.
inline BladeProduct blade_product(Mask a, Mask b, const Signature& sig) {
    int sign = reordering_sign(a, b);
    if (std::popcount(a & b & sig.negative_mask()) & 1)
        sign = -sign;
    return {sign, a ^ b};
}

using BladeProductFn = BladeProduct (*)(Mask, Mask, const Signature&);

}  // namespace spinlab
