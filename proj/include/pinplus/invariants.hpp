#pragma once

// Eta-invariant profiles over all Pin+ structures.
//
// A structure on an expression with h1dim = n is labelled by a bit-vector
// of length n, stored as an integer with coordinate 0 least significant.
// Profiles are computed compositionally: connected sums concatenate labels
// and add values; circle sums keep exactly the pairs whose restrictions to
// the glued loop agree and fuse the shared coordinate.

#include "pinplus/expr.hpp"
#include "pinplus/mod32.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pinplus {

// Profiles larger than 2^kMaxProfileWidth entries are refused.
inline constexpr int kMaxProfileWidth = 24;

class PinProfile {
public:
    struct Entry {
        std::uint64_t label;
        int restr;
        Mod32 value;
    };

    PinProfile(int width, std::optional<int> loop_bit, std::vector<Mod32> values);

    int width() const { return width_; }
    std::size_t size() const { return values_.size(); }
    // Label coordinate of the designated orientation-reversing loop.
    std::optional<int> loop_bit() const { return loop_bit_; }

    Mod32 value(std::uint64_t label) const { return values_.at(label); }
    int restr(std::uint64_t label) const;
    std::span<const Mod32> values() const { return values_; }
    std::vector<Entry> entries() const;

    // Coordinates written left to right, coordinate 0 first.
    std::string label_string(std::uint64_t label) const;

private:
    int width_;
    std::optional<int> loop_bit_;
    std::vector<Mod32> values_;
};

class EtaSet {
public:
    EtaSet() = default;
    explicit EtaSet(std::vector<Mod32> values);

    std::span<const Mod32> values() const { return values_; }
    std::vector<int> nums() const;
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(Mod32 v) const;

    EtaSet shifted(Mod32 by) const;
    EtaSet negated() const;
    bool disjoint_from(const EtaSet& other) const;
    // {v, -v} shape (a singleton {v} with v = -v also qualifies).
    bool closed_under_negation() const;

    std::string str() const;           // "{2, 30}"
    std::string fraction_str() const;  // "{1/8, -1/8}" in numerator order

    bool operator==(const EtaSet&) const = default;
    bool operator<(const EtaSet& rhs) const { return values_ < rhs.values_; }

private:
    std::vector<Mod32> values_;
};

// Sumset {a + b : a in x, b in y}.
EtaSet sumset(const EtaSet& x, const EtaSet& y);

// Throws NoPinStructureError for expressions without a Pin+ structure.
PinProfile eta_profile(const Expr& x);
EtaSet eta_set(const Expr& x);

// Class in Omega_4^{Pin+} = Z/16 of the structure with the given label
// bits.  Throws PreconditionError on a malformed label.
int bordism_class(const Expr& x, std::span<const int> label);
std::vector<int> bordism_classes(const Expr& x);

// (sum of fixed-point indices) / 8 mod 2Z; every index must be +1 or -1.
Mod32 eta_from_fixed_points(std::span<const int> indices);

// sigma / 16 mod 2Z for orientable spin expressions; cross-checked
// against the profile, whose entries must all agree with it.
Mod32 spin_eta(const Expr& x);

} // namespace pinplus
