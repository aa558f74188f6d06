#ifndef GOLDSIEVE_WORDS_HPP
#define GOLDSIEVE_WORDS_HPP

#include <string>
#include <vector>

#include "goldsieve/surd.hpp"
#include "goldsieve/types.hpp"

namespace goldsieve {

// Binary word as a '0'/'1' string; position i holds the gap bit H(i + 2).

// H(n) = (sigma_n - sigma_{n-1}) - 1 for n >= 2. Throws two_gap_error if a
// gap falls outside {1, 2}.
std::string gap_word(const std::vector<Int>& sigma);

// Inverse of gap_word given the first term: sigma_n = sigma_1 + (n - 1) +
// sum of the first n - 1 bits.
std::vector<Int> reconstruct_sigma(const std::string& word, Int sigma1);

double ones_density(const std::string& word);

// Number of distinct length-L factors for L = 1..max_len (index L-1).
std::vector<Int> factor_complexity(const std::string& word, Int max_len);

// Max imbalance (spread of ones-counts over same-length windows) for each
// window length L = 1..max_len (index L-1). Sturmian words stay <= 1.
std::vector<Int> balance_profile(const std::string& word, Int max_len);

struct SturmianReport {
    Int max_len;
    bool complexity_ok;   // p(L) == L + 1 for all L checked
    Int max_imbalance;    // max over L of (max ones in window - min ones)
    bool balanced;        // max_imbalance <= 1
    std::vector<Int> complexity;
};
SturmianReport sturmian_report(const std::string& word, Int max_len);

// Residual check of seq_n == floor(alpha * n + beta) for n >= valid_from.
struct BeattyFit {
    Int max_residual;
    Int checked;
};
BeattyFit beatty_check(const std::vector<Int>& seq, const QuadSurd& alpha,
                       const QuadSurd& beta, Int valid_from);

}

#endif
