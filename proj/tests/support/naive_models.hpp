#ifndef GOLDSIEVE_TESTS_NAIVE_MODELS_HPP
#define GOLDSIEVE_TESTS_NAIVE_MODELS_HPP

// Deliberately slow reference implementations used as oracles. Everything
// here works on plain vectors with linear scans so that correctness is
// obvious by inspection; the real library must agree with these on small
// inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace naive {

using Int = std::int64_t;

// List-backed model of the library's WorkingSet: the set {1..limit} under
// deletions, with 1-based order statistics.
class ListModel {
public:
    explicit ListModel(Int limit) {
        for (Int i = 1; i <= limit; ++i) items_.push_back(i);
    }
    Int select(Int p) const {
        if (p < 1 || p > static_cast<Int>(items_.size()))
            throw std::out_of_range("select beyond model limit");
        return items_[static_cast<std::size_t>(p - 1)];
    }
    Int rank(Int i) const {
        return static_cast<Int>(std::upper_bound(items_.begin(), items_.end(), i) - items_.begin());
    }
    bool present(Int i) const {
        return std::binary_search(items_.begin(), items_.end(), i);
    }
    void erase(Int i) {
        auto it = std::lower_bound(items_.begin(), items_.end(), i);
        if (it == items_.end() || *it != i) throw std::out_of_range("erase of absent index");
        items_.erase(it);
    }
    Int size() const { return static_cast<Int>(items_.size()); }

private:
    std::vector<Int> items_;
};

struct SieveRun {
    std::vector<Int> pointers;
    std::vector<Int> deletions;
    std::vector<Int> survivors;
};

// Golden sieve straight from the definition, on an explicit prefix of the
// ground sequence. Step n reads the value h at position n, then deletes the
// value at position h. Survivors are the first `steps` values left standing.
inline SieveRun golden_sieve(std::vector<Int> w, Int steps) {
    SieveRun out;
    for (Int n = 1; n <= steps; ++n) {
        auto at = [&](Int pos) {
            if (pos < 1 || pos > static_cast<Int>(w.size()))
                throw std::out_of_range("ground prefix too short");
            return w[static_cast<std::size_t>(pos - 1)];
        };
        Int h = at(n);
        Int d = at(h);
        out.pointers.push_back(h);
        out.deletions.push_back(d);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(h - 1));
    }
    if (static_cast<Int>(w.size()) < steps) throw std::out_of_range("ground prefix too short");
    out.survivors.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(steps));
    return out;
}

// Double sieve: step n deletes both the pointer element (position n) and the
// target element (position h), once if they coincide.
inline SieveRun double_sieve(std::vector<Int> w, Int steps) {
    SieveRun out;
    for (Int n = 1; n <= steps; ++n) {
        auto at = [&](Int pos) {
            if (pos < 1 || pos > static_cast<Int>(w.size()))
                throw std::out_of_range("ground prefix too short");
            return w[static_cast<std::size_t>(pos - 1)];
        };
        Int h = at(n);
        Int d = at(h);
        out.pointers.push_back(h);
        out.deletions.push_back(d);
        if (h == n) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(n - 1));
        } else {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(h - 1));
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(n - 1));
        }
    }
    if (static_cast<Int>(w.size()) < steps) throw std::out_of_range("ground prefix too short");
    out.survivors.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(steps));
    return out;
}

// Extraction sieve with an explicit working vector and min removals, straight
// from the definition: keep the minimum as a survivor, always delete the next
// min(y,z)-1 minima, and delete |y-z| more when the membership test fires.
inline std::vector<Int> extraction_sieve(Int j, Int y, Int z, std::vector<Int> w, Int count) {
    std::vector<Int> survivors;
    Int keep = std::min(y, z) - 1;
    Int extra = y > z ? y - z : z - y;
    auto pop_min = [&]() {
        auto it = std::min_element(w.begin(), w.end());
        if (it == w.end()) throw std::out_of_range("ground prefix too short");
        Int v = *it;
        w.erase(it);
        return v;
    };
    for (Int n = 1; n <= count; ++n) {
        survivors.push_back(pop_min());
        for (Int i = 0; i < keep; ++i) pop_min();
        Int t = n + 1 - j;
        bool member = t >= 1 &&
            std::find(survivors.begin(), survivors.end(), t) != survivors.end();
        bool fire = (y > z) ? member : !member;
        if (fire)
            for (Int i = 0; i < extra; ++i) pop_min();
    }
    return survivors;
}

// Hiccup recurrence with a linear-scan membership test.
inline std::vector<Int> hiccup(Int j, Int x, Int y, Int z, Int count) {
    std::vector<Int> vals;
    if (count <= 0) return vals;
    vals.push_back(x);
    for (Int n = 2; n <= count; ++n) {
        Int t = n - j;
        bool member = t >= 1 &&
            std::find(vals.begin(), vals.end(), t) != vals.end();
        vals.push_back(vals.back() + (member ? y : z));
    }
    return vals;
}

inline std::vector<Int> arith_prefix(Int a, Int b, Int len) {
    std::vector<Int> w;
    for (Int n = 1; n <= len; ++n) w.push_back(a * n + b);
    return w;
}

inline std::vector<Int> squares_prefix(Int len) {
    std::vector<Int> w;
    for (Int n = 1; n <= len; ++n) w.push_back(n * n);
    return w;
}

} // namespace naive

#endif
