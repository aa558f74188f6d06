#include "goldsieve/ground.hpp"

#include <stdexcept>

#include "goldsieve/errors.hpp"

namespace goldsieve {

GroundSequence::GroundSequence(GroundKind kind, Int a, Int b, std::vector<Int> terms)
    : kind_(kind), a_(a), b_(b), terms_(std::move(terms)) {}

GroundSequence GroundSequence::naturals() {
    return GroundSequence(GroundKind::naturals, 1, 0, {});
}

GroundSequence GroundSequence::arith(Int a, Int b) {
    if (a < 1) throw std::invalid_argument("arith ground needs a >= 1");
    if (b < 0 || b > a) throw std::invalid_argument("arith ground needs 0 <= b <= a");
    if (a == 1 && b == 0) return naturals();
    return GroundSequence(GroundKind::arith, a, b, {});
}

GroundSequence GroundSequence::squares() {
    return GroundSequence(GroundKind::squares, 0, 0, {});
}

GroundSequence GroundSequence::explicit_list(std::vector<Int> terms) {
    if (terms.empty()) throw std::invalid_argument("explicit ground must be nonempty");
    Int prev = 0;
    for (Int t : terms) {
        if (t <= prev)
            throw std::invalid_argument("explicit ground must be strictly increasing and positive");
        prev = t;
    }
    return GroundSequence(GroundKind::explicit_list, 0, 0, std::move(terms));
}

Int GroundSequence::term(Int n) const {
    if (n < 1) throw std::invalid_argument("ground term index must be >= 1");
    switch (kind_) {
        case GroundKind::naturals:
            return n;
        case GroundKind::arith:
            return a_ * n + b_;
        case GroundKind::squares:
            return n * n;
        case GroundKind::explicit_list:
            if (n > static_cast<Int>(terms_.size()))
                throw bounded_prefix_error("explicit ground exhausted: term " + std::to_string(n) +
                                           " requested, " + std::to_string(terms_.size()) +
                                           " stored");
            return terms_[static_cast<std::size_t>(n - 1)];
    }
    throw std::logic_error("unknown ground kind");
}

std::optional<Int> GroundSequence::prefix_size() const {
    if (kind_ == GroundKind::explicit_list) return static_cast<Int>(terms_.size());
    return std::nullopt;
}

std::string GroundSequence::describe() const {
    switch (kind_) {
        case GroundKind::naturals:
            return "naturals";
        case GroundKind::arith:
            return "arith(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
        case GroundKind::squares:
            return "squares";
        case GroundKind::explicit_list:
            return "explicit[" + std::to_string(terms_.size()) + "]";
    }
    return "unknown";
}

}
