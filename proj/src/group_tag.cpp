#include "pinplus/group_tag.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinplus {

GroupTag::GroupTag(Kind kind) : kind_(kind) {
    if (kind == Kind::FreeProduct)
        throw std::invalid_argument("GroupTag: use free_product() for free products");
}

GroupTag GroupTag::free_product(const std::vector<GroupTag>& factors) {
    std::vector<GroupTag> flat;
    for (const auto& f : factors) {
        switch (f.kind_) {
        case Kind::Trivial:
            break;
        case Kind::Unknown:
            return GroupTag(Kind::Unknown);
        case Kind::FreeProduct:
            flat.insert(flat.end(), f.factors_.begin(), f.factors_.end());
            break;
        case Kind::Z2FreeZ2:
            flat.emplace_back(Kind::Z2);
            flat.emplace_back(Kind::Z2);
            break;
        default:
            flat.push_back(f);
        }
    }
    std::sort(flat.begin(), flat.end());

    if (flat.empty()) return GroupTag(Kind::Trivial);
    if (flat.size() == 1) return flat.front();
    if (flat.size() == 2 && flat[0].kind_ == Kind::Z2 && flat[1].kind_ == Kind::Z2)
        return GroupTag(Kind::Z2FreeZ2);

    GroupTag out;
    out.kind_ = Kind::FreeProduct;
    out.factors_ = std::move(flat);
    return out;
}

std::string GroupTag::name() const {
    switch (kind_) {
    case Kind::Trivial: return "Trivial";
    case Kind::Z: return "Z";
    case Kind::Z2: return "Z2";
    case Kind::Z2FreeZ2: return "Z2FreeZ2";
    case Kind::ZsemiZ: return "ZsemiZ";
    case Kind::Z3semiZ: return "Z3semiZ";
    case Kind::ZxZ: return "ZxZ";
    case Kind::ZxZxZxZ: return "ZxZxZxZ";
    case Kind::Unknown: return "Unknown";
    case Kind::FreeProduct: {
        std::string s = "FreeProduct(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ",";
            s += factors_[i].name();
        }
        return s + ")";
    }
    }
    return "Unknown";
}

bool GroupTag::operator<(const GroupTag& rhs) const {
    if (kind_ != rhs.kind_) return kind_ < rhs.kind_;
    return std::lexicographical_compare(factors_.begin(), factors_.end(),
                                        rhs.factors_.begin(), rhs.factors_.end());
}

GroupTag circle_sum_group(const GroupTag& left, const GroupTag& right) {
    using K = GroupTag::Kind;
    if (left.kind() == K::Z2 && right.kind() == K::Z2) return K::Z2;
    if (left.is_unknown() || right.is_unknown()) return K::Unknown;
    if (left.kind() == K::Z) return right;
    if (right.kind() == K::Z) return left;
    return K::Unknown;
}

GroupTag orientation_kernel(const GroupTag& base) {
    using K = GroupTag::Kind;
    switch (base.kind()) {
    case K::Z2: return K::Trivial;
    case K::Z: return K::Z;
    case K::ZsemiZ: return K::ZxZ;
    case K::Z3semiZ: return K::ZxZxZxZ;
    case K::Z2FreeZ2: return K::Z;
    default: return K::Unknown;
    }
}

} // namespace pinplus
