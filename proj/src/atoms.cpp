#include "pinplus/atoms.hpp"

#include "pinplus/errors.hpp"

#include <string>

namespace pinplus {

namespace {

using K = GroupTag::Kind;

std::vector<Mod32> zeros(int h1dim) { return std::vector<Mod32>(std::size_t{1} << h1dim); }

std::vector<AtomRecord> build_table() {
    using A = AtomId;
    std::vector<AtomRecord> t;
    // name          orient pi1          chi sig h1 w2zero profile                  loop  cover
    t.push_back({A::S4, "S4", true, K::Trivial, 2, 0, 0, true, zeros(0), {}, {}});
    t.push_back({A::S2xS2, "S2xS2", true, K::Trivial, 4, 0, 0, true, zeros(0), {}, {}});
    t.push_back({A::CP2, "CP2", true, K::Trivial, 3, 1, 0, false, {}, {}, {}});
    // Label 0 carries +1/8; the opposite structure carries -1/8.
    t.push_back({A::RP4, "RP4", false, K::Z2, 1, 0, 1, true, {Mod32(2), Mod32(30)}, 0, {A::S4}});
    // Q = RP4 circle-summed with the mapping torus, so each label is shifted by 1.
    t.push_back({A::Q, "Q", false, K::Z2, 1, 0, 1, true, {Mod32(18), Mod32(14)}, 0, {A::S4}});
    t.push_back({A::S3tS1, "S3tS1", false, K::Z, 0, 0, 1, true, zeros(1), 0, {A::S3xS1}});
    t.push_back({A::S3xS1, "S3xS1", true, K::Z, 0, 0, 1, true, zeros(1), {}, {}});
    t.push_back({A::A, "A", false, K::Z, 2, 0, 1, true, {Mod32(16), Mod32(16)}, 0,
                 {A::S3xS1, A::S2xS2, A::S2xS2}});
    t.push_back({A::KbxS2, "KbxS2", false, K::ZsemiZ, 0, 0, 2, true, zeros(2), 0, {A::T2xS2}});
    t.push_back({A::Xi3, "Xi3", false, K::ZsemiZ, 0, 0, 2, true, zeros(2), 0, {A::T2xS2}});
    t.push_back({A::KbxT2, "KbxT2", false, K::Z3semiZ, 0, 0, 4, true, zeros(4), 0, {A::T2xT2}});
    t.push_back({A::T2xS2, "T2xS2", true, K::ZxZ, 0, 0, 2, true, zeros(2), {}, {}});
    t.push_back({A::T2xT2, "T2xT2", true, K::ZxZxZxZ, 0, 0, 4, true, zeros(4), {}, {}});
    t.push_back({A::S2gR, "S2gR", false, K::Z2, 2, 0, 1, true, zeros(1), 0, {A::S2xS2}});
    return t;
}

const std::vector<AtomRecord>& table() {
    static const std::vector<AtomRecord> t = build_table();
    return t;
}

constexpr std::array<AtomId, 11> kGenerators = {
    AtomId::S4,    AtomId::S2xS2, AtomId::CP2, AtomId::RP4,   AtomId::Q,    AtomId::S3tS1,
    AtomId::A,     AtomId::KbxS2, AtomId::Xi3, AtomId::KbxT2, AtomId::S2gR,
};

} // namespace

const AtomRecord& atom_record(AtomId id) { return table().at(static_cast<std::size_t>(id)); }

std::span<const AtomRecord> atom_table() { return table(); }

AtomId atom_id_from_name(std::string_view name) {
    for (const auto& r : table())
        if (r.name == name) return r.id;
    throw LookupError("unknown atom '" + std::string(name) + "'");
}

std::string_view atom_name(AtomId id) { return atom_record(id).name; }

std::span<const AtomId> generator_atoms() { return kGenerators; }

} // namespace pinplus
