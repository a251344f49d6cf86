#include "supersat/numeric.hpp"

#include <algorithm>

namespace supersat {

std::string big_count_to_string(const BigCount& b) {
    if (b.saturated) return ">=2^127";
    unsigned __int128 v = b.value;
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace supersat
