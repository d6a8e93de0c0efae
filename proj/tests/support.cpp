#include "support.hpp"

namespace testing {

std::vector<spinecensus::RegularGraph> small_multigraphs(int max_n) {
    std::vector<spinecensus::RegularGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = spinecensus::enumerate_C(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace testing
