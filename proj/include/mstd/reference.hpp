#pragma once
// Serial reference implementation: naive O(|A|^2) set arithmetic using
// ordered containers, kept deliberately independent of the bitset kernels.
// The property suite checks the fast kernels against these, and the
// benchmark target compares their throughput.

#include <cstdint>
#include <set>
#include <vector>

namespace mstd::ref {

std::set<int64_t> sumset(const std::vector<int64_t>& a);
std::set<int64_t> diffset(const std::vector<int64_t>& a); // full, signed

struct Profile {
    int64_t sum_size;
    int64_t diff_size;
};

Profile profile(const std::vector<int64_t>& a);
bool is_mstd(const std::vector<int64_t>& a);

} // namespace mstd::ref
