#include "goldsieve/hiccup.hpp"

#include <stdexcept>

namespace goldsieve {

void MembershipIndex::insert(Int v) {
    if (v < 1) throw std::invalid_argument("MembershipIndex: values must be positive");
    if (v >= static_cast<Int>(bits_.size()))
        bits_.resize(static_cast<std::size_t>(v) + 1, false);
    bits_[static_cast<std::size_t>(v)] = true;
}

bool MembershipIndex::contains(Int v) const {
    if (v < 1 || v >= static_cast<Int>(bits_.size())) return false;
    return bits_[static_cast<std::size_t>(v)];
}

std::vector<Int> hiccup_generate(const HiccupParams& p, Int count) {
    if (p.x < 1 || p.y < 1 || p.z < 1 || p.j < 0)
        throw std::invalid_argument("hiccup_generate: needs x,y,z >= 1 and j >= 0");
    if (count < 0) throw std::invalid_argument("hiccup_generate: negative count");
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    MembershipIndex seen;
    Int current = p.x;
    for (Int n = 1; n <= count; ++n) {
        if (n > 1) current += seen.contains(n - p.j) ? p.y : p.z;
        out.push_back(current);
        seen.insert(current);
    }
    return out;
}

std::vector<Int> run_extraction(const ExtractionParams& p, const GroundSequence& ground,
                                Int count) {
    if (p.y < 1 || p.z < 1 || p.y == p.z || p.j < 0)
        throw std::invalid_argument("run_extraction: needs y,z >= 1, y != z, j >= 0");
    if (count < 0) throw std::invalid_argument("run_extraction: negative count");
    Int always = std::min(p.y, p.z) - 1;
    Int extra = p.y > p.z ? p.y - p.z : p.z - p.y;
    bool fire_on_member = (p.y > p.z);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(count));
    MembershipIndex seen;
    // Only minima are ever removed, so the working set is always the tail of
    // the ground sequence starting at this cursor.
    Int cursor = 1;
    for (Int n = 1; n <= count; ++n) {
        Int s = ground.term(cursor);
        out.push_back(s);
        seen.insert(s);
        Int t = n + 1 - p.j;
        bool fires = (seen.contains(t) == fire_on_member);
        cursor += 1 + always + (fires ? extra : 0);
    }
    return out;
}

HiccupParams affine_transform(const HiccupParams& p, Int a, Int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("affine_transform: needs a >= 1, b >= 0");
    return {p.j, a * p.x + b, a * p.y, a * p.z};
}

HiccupParams extraction_as_hiccup(const ExtractionParams& p, Int a, Int b) {
    return affine_transform({p.j, 1, p.y, p.z}, a, b);
}

std::optional<Int> check_extraction_equiv(const ExtractionParams& p, Int a, Int b, Int count) {
    auto ground = GroundSequence::arith(a, b);
    auto sieved = run_extraction(p, ground, count);
    auto direct = hiccup_generate(extraction_as_hiccup(p, a, b), count);
    for (Int i = 0; i < count; ++i) {
        if (sieved[static_cast<std::size_t>(i)] != direct[static_cast<std::size_t>(i)])
            return i + 1;
    }
    return std::nullopt;
}

}
