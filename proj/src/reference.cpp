#include "mstd/reference.hpp"

namespace mstd::ref {

std::set<int64_t> sumset(const std::vector<int64_t>& a) {
    std::set<int64_t> out;
    for (int64_t x : a)
        for (int64_t y : a) out.insert(x + y);
    return out;
}

std::set<int64_t> diffset(const std::vector<int64_t>& a) {
    std::set<int64_t> out;
    for (int64_t x : a)
        for (int64_t y : a) out.insert(x - y);
    return out;
}

Profile profile(const std::vector<int64_t>& a) {
    return {static_cast<int64_t>(sumset(a).size()), static_cast<int64_t>(diffset(a).size())};
}

bool is_mstd(const std::vector<int64_t>& a) {
    auto p = profile(a);
    return p.sum_size > p.diff_size;
}

} // namespace mstd::ref
