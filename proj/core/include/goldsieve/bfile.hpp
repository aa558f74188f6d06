#ifndef GOLDSIEVE_BFILE_HPP
#define GOLDSIEVE_BFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goldsieve/types.hpp"

namespace goldsieve {

struct BFileEntry {
    Int index;
    Int value;
};

struct BFile {
    std::string id;  // optional tag, e.g. "A099267"
    std::vector<BFileEntry> entries;
};

// "index value" lines; '#' comments and blank lines ignored. Indices must
// strictly increase. Throws parse_error carrying the 1-based line number.
BFile parse_bfile(const std::string& text);

std::string emit_bfile(const std::vector<Int>& seq, Int start_index);

struct Mismatch {
    Int index;  // reference index where the disagreement sits
    Int expected;
    Int actual;
};

struct CompareResult {
    Int match_length;
    std::optional<Mismatch> mismatch;
    Int compared;  // entries actually aligned (reference may be short)
};

// Aligns seq(1) with reference index `offset` and walks consecutive indices.
CompareResult compare(const std::vector<Int>& seq, const BFile& ref, Int offset);

// Offline fixture prefixes keyed by sequence id.
const std::map<std::string, BFile>& bundled_fixtures();

}

#endif
