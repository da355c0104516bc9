#pragma once

// The closed generator table.  Every invariant the engine reports is
// assembled from these rows by the combinator rules.

#include "pinplus/group_tag.hpp"
#include "pinplus/mod32.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pinplus {

enum class AtomId {
    S4,
    S2xS2,
    CP2,
    RP4,
    Q,     // exotic RP4, homeomorphic to RP4
    S3tS1, // non-orientable S3-bundle over S1
    S3xS1,
    A,     // exotic S3tS1 # S2xS2
    KbxS2,
    Xi3,   // non-orientable S2-bundle over the Klein bottle with w2 = 0
    KbxT2,
    T2xS2,
    T2xT2,
    S2gR,  // S(2 gamma + R), the sphere bundle over RP2
};

inline constexpr std::size_t kAtomCount = 14;

struct AtomRecord {
    AtomId id;
    std::string_view name;
    bool orientable;
    GroupTag::Kind pi1;
    int chi;
    int sigma;
    int h1dim;
    bool w2zero;
    // Eta value of the Pin+ structure whose H^1 label, read as a binary
    // number with coordinate 0 least significant, is the index.
    std::vector<Mod32> profile;
    // Label coordinate carrying the restriction to the designated
    // orientation-reversing loop; empty for orientable atoms.
    std::optional<int> loop_bit;
    // Summands of the orientation double cover; empty if orientable.
    std::vector<AtomId> cover;
};

const AtomRecord& atom_record(AtomId id);
std::span<const AtomRecord> atom_table();

// Throws LookupError for names outside the table.
AtomId atom_id_from_name(std::string_view name);
std::string_view atom_name(AtomId id);

// The eleven generators that carry the engine's combinator calculus; the
// remaining orientable atoms only appear as cover outputs.
std::span<const AtomId> generator_atoms();

} // namespace pinplus
