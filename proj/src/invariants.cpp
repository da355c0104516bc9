#include "pinplus/invariants.hpp"

#include "pinplus/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pinplus {

PinProfile::PinProfile(int width, std::optional<int> loop_bit, std::vector<Mod32> values)
    : width_(width), loop_bit_(loop_bit), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << width_))
        throw std::logic_error("profile size does not match 2^width");
    if (loop_bit_ && (*loop_bit_ < 0 || *loop_bit_ >= width_))
        throw std::logic_error("profile loop coordinate out of range");
}

int PinProfile::restr(std::uint64_t label) const {
    if (!loop_bit_) return 0;
    return static_cast<int>((label >> *loop_bit_) & 1U);
}

std::vector<PinProfile::Entry> PinProfile::entries() const {
    std::vector<Entry> out;
    out.reserve(values_.size());
    for (std::uint64_t l = 0; l < values_.size(); ++l) out.push_back({l, restr(l), values_[l]});
    return out;
}

std::string PinProfile::label_string(std::uint64_t label) const {
    std::string s;
    for (int i = 0; i < width_; ++i) s += ((label >> i) & 1U) ? '1' : '0';
    return s;
}

EtaSet::EtaSet(std::vector<Mod32> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

std::vector<int> EtaSet::nums() const {
    std::vector<int> out;
    for (auto v : values_) out.push_back(v.num());
    return out;
}

bool EtaSet::contains(Mod32 v) const { return std::binary_search(values_.begin(), values_.end(), v); }

EtaSet EtaSet::shifted(Mod32 by) const {
    std::vector<Mod32> out;
    for (auto v : values_) out.push_back(v + by);
    return EtaSet(std::move(out));
}

EtaSet EtaSet::negated() const {
    std::vector<Mod32> out;
    for (auto v : values_) out.push_back(-v);
    return EtaSet(std::move(out));
}

bool EtaSet::disjoint_from(const EtaSet& other) const {
    return std::none_of(values_.begin(), values_.end(),
                        [&](Mod32 v) { return other.contains(v); });
}

bool EtaSet::closed_under_negation() const {
    return values_.size() <= 2 && negated() == *this;
}

std::string EtaSet::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i].num();
    os << "}";
    return os.str();
}

std::string EtaSet::fraction_str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? ", " : "") + values_[i].fraction();
    return s + "}";
}

EtaSet sumset(const EtaSet& x, const EtaSet& y) {
    std::vector<Mod32> out;
    for (auto a : x.values())
        for (auto b : y.values()) out.push_back(a + b);
    return EtaSet(std::move(out));
}

namespace {

void require_width(int width) {
    if (width > kMaxProfileWidth)
        throw Error("profile with 2^" + std::to_string(width) + " structures is too large");
}

// Insert `bit` at coordinate `pos`, shifting higher coordinates up.
std::uint64_t insert_bit(std::uint64_t v, int pos, std::uint64_t bit) {
    const std::uint64_t low = v & ((std::uint64_t{1} << pos) - 1);
    const std::uint64_t high = v >> pos;
    return low | (bit << pos) | (high << (pos + 1));
}

PinProfile conn_sum_profile(const PinProfile& a, const PinProfile& b) {
    const int width = a.width() + b.width();
    require_width(width);
    std::vector<Mod32> values(std::size_t{1} << width);
    for (std::uint64_t j = 0; j < b.size(); ++j)
        for (std::uint64_t i = 0; i < a.size(); ++i)
            values[i | (j << a.width())] = a.value(i) + b.value(j);
    std::optional<int> loop = a.loop_bit();
    if (!loop && b.loop_bit()) loop = *b.loop_bit() + a.width();
    return PinProfile(width, loop, std::move(values));
}

PinProfile circle_sum_profile(const PinProfile& a, const PinProfile& b) {
    if (!a.loop_bit() || !b.loop_bit())
        throw std::logic_error("circle sum operand without an orientation-reversing loop");
    const int width = a.width() + b.width() - 1;
    require_width(width);
    const int la = *a.loop_bit();
    const int lb = *b.loop_bit();
    std::vector<Mod32> values(std::size_t{1} << width);
    const std::uint64_t rest = std::uint64_t{1} << (b.width() - 1);
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const std::uint64_t shared = (i >> la) & 1U;
        for (std::uint64_t j = 0; j < rest; ++j) {
            const std::uint64_t jb = insert_bit(j, lb, shared);
            values[i | (j << a.width())] = a.value(i) + b.value(jb);
        }
    }
    return PinProfile(width, la, std::move(values));
}

PinProfile map_values(const PinProfile& p, Mod32 (*f)(Mod32)) {
    std::vector<Mod32> values(p.values().begin(), p.values().end());
    for (auto& v : values) v = f(v);
    return PinProfile(p.width(), p.loop_bit(), std::move(values));
}

PinProfile profile_of(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Atom: {
        const auto& r = atom_record(e.atom_id());
        return PinProfile(r.h1dim, r.loop_bit, r.profile);
    }
    case Expr::Kind::Bar:
        return map_values(profile_of(e.child(0)), [](Mod32 v) { return -v; });
    case Expr::Kind::CircleSum:
        if (e.is_twist())
            return map_values(profile_of(e.child(0)), [](Mod32 v) { return v + kUnitShift; });
        return circle_sum_profile(profile_of(e.child(0)), profile_of(e.child(1)));
    case Expr::Kind::ConnSum: {
        PinProfile acc = profile_of(e.child(0));
        for (std::size_t i = 1; i < e.children().size(); ++i)
            acc = conn_sum_profile(acc, profile_of(e.child(i)));
        return acc;
    }
    case Expr::Kind::TwistToken:
        break;
    }
    throw std::logic_error("profile of the bare twist token");
}

} // namespace

PinProfile eta_profile(const Expr& x) {
    if (!pin_plus(x))
        throw NoPinStructureError("no Pin+ structure on '" + x.str() + "' (w2 != 0)");
    require_width(h1_dim(x));
    PinProfile p = profile_of(x);
    if (p.width() != h1_dim(x))
        throw std::logic_error("profile width disagrees with h1dim for '" + x.str() + "'");
    for (auto v : p.values())
        if (!v.is_even()) throw std::logic_error("odd eta numerator in '" + x.str() + "'");
    return p;
}

EtaSet eta_set(const Expr& x) {
    auto p = eta_profile(x);
    return EtaSet(std::vector<Mod32>(p.values().begin(), p.values().end()));
}

int bordism_class(const Expr& x, std::span<const int> label) {
    auto p = eta_profile(x);
    if (static_cast<int>(label.size()) != p.width())
        throw PreconditionError("label has " + std::to_string(label.size()) + " bits, expected " +
                                std::to_string(p.width()));
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label[i] != 0 && label[i] != 1) throw PreconditionError("label bits must be 0 or 1");
        index |= static_cast<std::uint64_t>(label[i]) << i;
    }
    return p.value(index).bordism_class();
}

std::vector<int> bordism_classes(const Expr& x) {
    auto p = eta_profile(x);
    std::vector<int> out;
    for (auto v : p.values()) out.push_back(v.bordism_class());
    return out;
}

Mod32 eta_from_fixed_points(std::span<const int> indices) {
    long long sum = 0;
    for (int i : indices) {
        if (i != 1 && i != -1) throw PreconditionError("fixed-point index must be +1 or -1");
        sum += i;
    }
    return Mod32(2 * sum);
}

Mod32 spin_eta(const Expr& x) {
    const auto& t = x.topology();
    if (!t.orientable)
        throw PreconditionError("spin_eta needs an orientable expression; '" + x.str() +
                                "' is non-orientable");
    if (!t.w2zero) throw PreconditionError("spin_eta needs a spin expression; '" + x.str() + "'");
    const Mod32 eta(t.sigma);
    const PinProfile profile = eta_profile(x);
    for (auto v : profile.values())
        if (v != eta) throw std::logic_error("signature formula disagrees with the profile");
    return eta;
}

} // namespace pinplus
