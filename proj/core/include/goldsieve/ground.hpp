#ifndef GOLDSIEVE_GROUND_HPP
#define GOLDSIEVE_GROUND_HPP

#include <optional>
#include <string>
#include <vector>

#include "goldsieve/types.hpp"

namespace goldsieve {

enum class GroundKind { naturals, arith, squares, explicit_list };

// A strictly increasing sequence of positive integers used as sieve input.
// Terms are 1-based: naturals().term(n) == n, arith(a, b).term(n) == a*n + b,
// squares().term(n) == n*n. Explicit grounds hold a finite prefix and throw
// bounded_prefix_error when a term beyond it is requested.
class GroundSequence {
public:
    static GroundSequence naturals();
    // a >= 1, 0 <= b <= a. b == a gives the shifted progression a(N+1).
    static GroundSequence arith(Int a, Int b);
    static GroundSequence squares();
    static GroundSequence explicit_list(std::vector<Int> terms);

    Int term(Int n) const;
    GroundKind kind() const { return kind_; }

    // naturals and arith grounds expose progression parameters; naturals
    // reports (1, 0).
    bool is_arith_like() const {
        return kind_ == GroundKind::naturals || kind_ == GroundKind::arith;
    }
    Int a() const { return a_; }
    Int b() const { return b_; }

    std::optional<Int> prefix_size() const;

    std::string describe() const;

private:
    GroundSequence(GroundKind kind, Int a, Int b, std::vector<Int> terms);

    GroundKind kind_;
    Int a_;
    Int b_;
    std::vector<Int> terms_;
};

}

#endif
