#ifndef GOLDSIEVE_WORKING_SET_HPP
#define GOLDSIEVE_WORKING_SET_HPP

#include <cstdint>
#include <vector>

#include "goldsieve/types.hpp"

namespace goldsieve {

// Order-statistic view of {1, 2, 3, ...} under deletions. A Fenwick tree
// covers a lazily grown capacity window; indices beyond the window are
// implicitly present. select, rank and erase are O(log capacity); growing
// doubles the window and rebuilds in O(capacity), amortized O(1) per index.
class WorkingSet {
public:
    explicit WorkingSet(Int max_capacity = default_max_capacity());

    // p-th smallest present index (1-based). Grows the window as needed and
    // throws resource_limit_error if that would exceed the cap.
    Int select(Int p);

    // Number of present indices <= i. Never grows the window.
    Int rank(Int i) const;

    bool present(Int i) const;

    // Removes index i, growing the window to cover it first. Erasing an
    // absent index is a logic error and throws std::invalid_argument.
    void erase(Int i);

    // Removes the p-th smallest present index and returns it.
    Int erase_at_position(Int p);

    Int deleted_count() const { return deleted_; }
    Int capacity() const { return capacity_; }
    Int max_capacity() const { return max_capacity_; }

    // Cap from GOLDSIEVE_MAX_INDEX when set to a positive integer, 2^32
    // otherwise.
    static Int default_max_capacity();

private:
    void grow_to(Int need);
    Int prefix_count(Int i) const;

    Int capacity_ = 0;
    Int deleted_ = 0;
    Int max_capacity_;
    std::vector<Int> tree_;
    std::vector<std::uint8_t> present_;
};

}

#endif
