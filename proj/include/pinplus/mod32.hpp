#pragma once

// Exact eta values modulo 2Z on the fixed denominator 16.
//
// An element k in {0..31} stands for k/16 mod 2Z.  Every value produced
// from the generator table is even, i.e. lies in the copy of Z/16 spanned
// by 1/8 = 2/16, which is what makes bordism classes well defined.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace pinplus {

class Mod32 {
public:
    static constexpr int kModulus = 32;

    constexpr Mod32() = default;
    constexpr explicit Mod32(long long k) : num_(normalize(k)) {}

    constexpr int num() const { return num_; }
    constexpr bool is_even() const { return num_ % 2 == 0; }

    constexpr Mod32 operator+(Mod32 rhs) const { return Mod32(num_ + rhs.num_); }
    constexpr Mod32 operator-(Mod32 rhs) const { return Mod32(num_ - rhs.num_); }
    constexpr Mod32 operator-() const { return Mod32(-num_); }
    constexpr Mod32& operator+=(Mod32 rhs) { return *this = *this + rhs; }
    constexpr Mod32& operator-=(Mod32 rhs) { return *this = *this - rhs; }

    constexpr bool operator==(const Mod32&) const = default;
    constexpr auto operator<=>(const Mod32&) const = default;

    // Class in Omega_4^{Pin+} = Z/16; only meaningful for even values.
    constexpr int bordism_class() const { return (num_ / 2) % 16; }

    // Reduced fraction of the signed representative in (-1, 1], e.g. 30 -> "-1/8".
    std::string fraction() const {
        int signed_num = num_ <= 16 ? num_ : num_ - kModulus;
        if (signed_num == 0) return "0";
        int den = 16;
        int g = std::gcd(signed_num < 0 ? -signed_num : signed_num, den);
        signed_num /= g;
        den /= g;
        if (den == 1) return std::to_string(signed_num);
        return std::to_string(signed_num) + "/" + std::to_string(den);
    }

private:
    static constexpr int normalize(long long k) {
        long long r = k % kModulus;
        return static_cast<int>(r < 0 ? r + kModulus : r);
    }

    int num_ = 0;
};

inline constexpr Mod32 kOneEighth{2};
// +1 mod 2Z: the shift contributed by circle-summing with the mapping torus.
inline constexpr Mod32 kUnitShift{16};

inline std::ostream& operator<<(std::ostream& os, Mod32 m) { return os << m.num(); }

} // namespace pinplus
