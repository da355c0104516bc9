#pragma once

// Symbolic tags for the fundamental groups that occur in the generator
// families.  Tags are compared structurally; no group theory is attempted
// beyond the free-product normal form and the circle-sum rule table.

#include <string>
#include <vector>

namespace pinplus {

class GroupTag {
public:
    enum class Kind {
        Trivial,
        Z,
        Z2,
        Z2FreeZ2,    // Z/2 * Z/2
        ZsemiZ,      // Z x| Z, the Klein bottle group
        Z3semiZ,     // (Z x Z x Z) x| Z
        ZxZ,         // Z^2, cover group of the Klein-bottle families
        ZxZxZxZ,     // Z^4
        FreeProduct, // two or more non-trivial factors, sorted
        Unknown,
    };

    GroupTag() = default;
    GroupTag(Kind kind); // NOLINT: implicit from simple kinds

    static GroupTag free_product(const std::vector<GroupTag>& factors);

    Kind kind() const { return kind_; }
    const std::vector<GroupTag>& factors() const { return factors_; }

    bool is_trivial() const { return kind_ == Kind::Trivial; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }

    std::string name() const;

    bool operator==(const GroupTag&) const = default;
    bool operator<(const GroupTag& rhs) const;

private:
    Kind kind_ = Kind::Trivial;
    std::vector<GroupTag> factors_;
};

// pi_1 of a circle sum: (Z2, Z2) -> Z2, (Z, H) -> H, (H, Z) -> H, else Unknown.
GroupTag circle_sum_group(const GroupTag& left, const GroupTag& right);

// pi_1 of the orientation double cover, keyed by the base group.
// Returns Unknown when the base group is outside the table.
GroupTag orientation_kernel(const GroupTag& base);

} // namespace pinplus
