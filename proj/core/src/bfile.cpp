#include "goldsieve/bfile.hpp"

#include <algorithm>
#include <sstream>

#include "goldsieve/errors.hpp"

namespace goldsieve {

BFile parse_bfile(const std::string& text) {
    BFile file;
    std::istringstream in(text);
    std::string line;
    Int line_no = 0;
    bool have_prev = false;
    Int prev_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        Int index = 0, value = 0;
        if (!(fields >> index >> value))
            throw parse_error("malformed b-file line: '" + line + "'", line_no);
        std::string rest;
        if (fields >> rest)
            throw parse_error("trailing content on b-file line: '" + line + "'", line_no);
        if (have_prev && index <= prev_index)
            throw parse_error("non-increasing index " + std::to_string(index), line_no);
        file.entries.push_back({index, value});
        prev_index = index;
        have_prev = true;
    }
    return file;
}

std::string emit_bfile(const std::vector<Int>& seq, Int start_index) {
    std::ostringstream out;
    Int index = start_index;
    for (Int v : seq) out << index++ << ' ' << v << '\n';
    return out.str();
}

CompareResult compare(const std::vector<Int>& seq, const BFile& ref, Int offset) {
    CompareResult result{0, std::nullopt, 0};
    auto at = std::lower_bound(ref.entries.begin(), ref.entries.end(), offset,
                               [](const BFileEntry& e, Int idx) { return e.index < idx; });
    Int expected_index = offset;
    for (std::size_t i = 0; i < seq.size() && at != ref.entries.end(); ++i, ++at) {
        if (at->index != expected_index) break;  // gap in the reference
        ++result.compared;
        if (seq[i] != at->value) {
            result.mismatch = Mismatch{at->index, at->value, seq[i]};
            break;
        }
        ++result.match_length;
        ++expected_index;
    }
    return result;
}

const std::map<std::string, BFile>& bundled_fixtures() {
    static const std::map<std::string, BFile> fixtures = [] {
        std::map<std::string, BFile> m;
        auto add = [&m](const std::string& id, Int start, std::vector<Int> values) {
            BFile f;
            f.id = id;
            Int idx = start;
            for (Int v : values) f.entries.push_back({idx++, v});
            m[id] = std::move(f);
        };
        add("A099267", 1, {2, 3, 5, 6, 8, 10, 11, 13, 14, 16});
        add("A007066", 1, {1, 4, 7, 9, 12, 15, 17, 20, 22, 25});
        add("A000201", 1, {1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19});
        add("A001950", 1, {2, 5, 7, 10, 13, 15, 18, 20, 23, 26, 28, 31});
        add("A086377", 1, {1, 4, 6, 8, 11, 13, 16, 18, 21, 23, 25, 28});
        add("A003849", 0, {0, 1, 0, 0, 1, 0, 1, 0, 0, 1});
        return m;
    }();
    return fixtures;
}

}
