#include "goldsieve/words.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "goldsieve/errors.hpp"

namespace goldsieve {

std::string gap_word(const std::vector<Int>& sigma) {
    std::string word;
    if (sigma.size() < 2) return word;
    word.reserve(sigma.size() - 1);
    for (std::size_t i = 1; i < sigma.size(); ++i) {
        Int gap = sigma[i] - sigma[i - 1];
        if (gap != 1 && gap != 2)
            throw two_gap_error("gap " + std::to_string(gap) + " at term " +
                                std::to_string(i + 1) + " is outside {1, 2}");
        word.push_back(gap == 2 ? '1' : '0');
    }
    return word;
}

std::vector<Int> reconstruct_sigma(const std::string& word, Int sigma1) {
    std::vector<Int> sigma;
    sigma.reserve(word.size() + 1);
    Int current = sigma1;
    sigma.push_back(current);
    for (char c : word) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("reconstruct_sigma: word must be over {0, 1}");
        current += (c == '1') ? 2 : 1;
        sigma.push_back(current);
    }
    return sigma;
}

double ones_density(const std::string& word) {
    if (word.empty()) return 0.0;
    auto ones = static_cast<double>(std::count(word.begin(), word.end(), '1'));
    return ones / static_cast<double>(word.size());
}

std::vector<Int> factor_complexity(const std::string& word, Int max_len) {
    if (max_len < 1 || max_len > 62)
        throw std::invalid_argument("factor_complexity: max_len must be in 1..62");
    std::vector<Int> counts;
    counts.reserve(static_cast<std::size_t>(max_len));
    for (Int len = 1; len <= max_len; ++len) {
        if (static_cast<std::size_t>(len) > word.size()) {
            counts.push_back(0);
            continue;
        }
        std::set<std::uint64_t> factors;
        std::uint64_t window = 0;
        std::uint64_t mask = (len == 62) ? ~std::uint64_t{0} >> 2
                                         : (std::uint64_t{1} << len) - 1;
        for (std::size_t i = 0; i < word.size(); ++i) {
            window = ((window << 1) | static_cast<std::uint64_t>(word[i] == '1')) & mask;
            if (i + 1 >= static_cast<std::size_t>(len)) factors.insert(window);
        }
        counts.push_back(static_cast<Int>(factors.size()));
    }
    return counts;
}

std::vector<Int> balance_profile(const std::string& word, Int max_len) {
    if (max_len < 1) throw std::invalid_argument("balance_profile: max_len must be >= 1");
    std::vector<Int> profile;
    profile.reserve(static_cast<std::size_t>(max_len));
    for (Int len = 1; len <= max_len; ++len) {
        if (static_cast<std::size_t>(len) > word.size()) {
            profile.push_back(0);
            continue;
        }
        Int ones = 0;
        Int lo = 0, hi = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            ones += (word[i] == '1');
            if (i >= static_cast<std::size_t>(len))
                ones -= (word[i - static_cast<std::size_t>(len)] == '1');
            if (i + 1 >= static_cast<std::size_t>(len)) {
                if (i + 1 == static_cast<std::size_t>(len)) {
                    lo = hi = ones;
                } else {
                    lo = std::min(lo, ones);
                    hi = std::max(hi, ones);
                }
            }
        }
        profile.push_back(hi - lo);
    }
    return profile;
}

SturmianReport sturmian_report(const std::string& word, Int max_len) {
    SturmianReport rep{max_len, true, 0, true, factor_complexity(word, max_len)};
    auto imbalance = balance_profile(word, max_len);
    for (Int len = 1; len <= max_len; ++len) {
        if (rep.complexity[static_cast<std::size_t>(len - 1)] != len + 1)
            rep.complexity_ok = false;
        rep.max_imbalance = std::max(rep.max_imbalance, imbalance[static_cast<std::size_t>(len - 1)]);
    }
    rep.balanced = (rep.max_imbalance <= 1);
    return rep;
}

BeattyFit beatty_check(const std::vector<Int>& seq, const QuadSurd& alpha,
                       const QuadSurd& beta, Int valid_from) {
    BeattyFit fit{0, 0};
    for (Int n = valid_from; n <= static_cast<Int>(seq.size()); ++n) {
        QuadSurd value = alpha * QuadSurd(n) + beta;
        Int predicted = static_cast<Int>(value.floor());
        Int r = seq[static_cast<std::size_t>(n - 1)] - predicted;
        if (r < 0) r = -r;
        fit.max_residual = std::max(fit.max_residual, r);
        ++fit.checked;
    }
    return fit;
}

}
