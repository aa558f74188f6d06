#include "goldsieve/working_set.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "goldsieve/errors.hpp"

namespace goldsieve {

namespace {

Int round_up_pow2(Int v) {
    Int c = 1;
    while (c < v) c <<= 1;
    return c;
}

}

Int WorkingSet::default_max_capacity() {
    if (const char* env = std::getenv("GOLDSIEVE_MAX_INDEX")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<Int>(v);
    }
    return Int{1} << 32;
}

WorkingSet::WorkingSet(Int max_capacity) : max_capacity_(max_capacity) {
    if (max_capacity_ < 1) throw std::invalid_argument("working set cap must be positive");
}

void WorkingSet::grow_to(Int need) {
    if (need <= capacity_) return;
    if (need > max_capacity_)
        throw resource_limit_error("working set index " + std::to_string(need) +
                                       " exceeds cap " + std::to_string(max_capacity_),
                                   need, max_capacity_);
    Int next = round_up_pow2(need < 1024 ? 1024 : need);
    if (next > max_capacity_) next = max_capacity_;
    present_.resize(static_cast<std::size_t>(next) + 1, 1);
    tree_.assign(static_cast<std::size_t>(next) + 1, 0);
    for (Int i = 1; i <= next; ++i) {
        tree_[static_cast<std::size_t>(i)] += present_[static_cast<std::size_t>(i)];
        Int parent = i + (i & -i);
        if (parent <= next)
            tree_[static_cast<std::size_t>(parent)] += tree_[static_cast<std::size_t>(i)];
    }
    capacity_ = next;
}

Int WorkingSet::prefix_count(Int i) const {
    Int sum = 0;
    for (; i > 0; i -= i & -i) sum += tree_[static_cast<std::size_t>(i)];
    return sum;
}

Int WorkingSet::rank(Int i) const {
    if (i < 1) return 0;
    if (i <= capacity_) return prefix_count(i);
    return prefix_count(capacity_) + (i - capacity_);
}

bool WorkingSet::present(Int i) const {
    if (i < 1) return false;
    if (i > capacity_) return true;
    return present_[static_cast<std::size_t>(i)] != 0;
}

Int WorkingSet::select(Int p) {
    if (p < 1) throw std::invalid_argument("select position must be >= 1");
    if (capacity_ - deleted_ < p) grow_to(p + deleted_);
    Int idx = 0;
    Int remaining = p;
    Int bit = 1;
    while ((bit << 1) <= capacity_) bit <<= 1;
    for (; bit > 0; bit >>= 1) {
        Int next = idx + bit;
        if (next <= capacity_ && tree_[static_cast<std::size_t>(next)] < remaining) {
            idx = next;
            remaining -= tree_[static_cast<std::size_t>(next)];
        }
    }
    return idx + 1;
}

void WorkingSet::erase(Int i) {
    if (i < 1) throw std::invalid_argument("erase index must be >= 1");
    grow_to(i);
    if (!present_[static_cast<std::size_t>(i)])
        throw std::invalid_argument("erase of absent index " + std::to_string(i));
    present_[static_cast<std::size_t>(i)] = 0;
    ++deleted_;
    for (Int j = i; j <= capacity_; j += j & -j) --tree_[static_cast<std::size_t>(j)];
}

Int WorkingSet::erase_at_position(Int p) {
    Int idx = select(p);
    erase(idx);
    return idx;
}

}
