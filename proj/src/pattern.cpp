#include "supersat/pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supersat {

std::string PatternSpec::to_string() const {
    std::ostringstream os;
    if (kind == Kind::Theta) {
        os << "theta:" << a << "," << b;
    } else {
        os << "complete:";
        for (size_t i = 0; i < profile.size(); ++i) {
            if (i) os << ",";
            os << profile[i];
        }
    }
    return os.str();
}

PatternSpec PatternSpec::theta(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("theta pattern requires a,b >= 2");
    PatternSpec p;
    p.kind = Kind::Theta;
    p.a = a;
    p.b = b;
    return p;
}

PatternSpec PatternSpec::complete(std::vector<int> profile) {
    if (profile.size() < 2) throw std::invalid_argument("complete pattern requires r >= 2 parts");
    if (!std::is_sorted(profile.begin(), profile.end()))
        throw std::invalid_argument("complete pattern requires a1 <= ... <= ar");
    if (profile.front() < 2) throw std::invalid_argument("complete pattern requires a1 >= 2");
    PatternSpec p;
    p.kind = Kind::Complete;
    p.profile = std::move(profile);
    return p;
}

PatternSpec PatternSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern must look like theta:a,b or complete:a1,...,ar");
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    std::vector<int> nums;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad pattern number: " + item);
        nums.push_back(v);
    }
    if (head == "theta") {
        if (nums.size() != 2) throw std::invalid_argument("theta pattern takes exactly a,b");
        return theta(nums[0], nums[1]);
    }
    if (head == "complete") return complete(std::move(nums));
    throw std::invalid_argument("unknown pattern kind: " + head);
}

} // namespace supersat
