#include "canonical_matrix.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace spinecensus::detail {

namespace {

// 1-dimensional Weisfeiler-Lehman refinement. Colours are numbered by sorted
// signature, so isomorphic matrices receive identical colourings.
std::vector<int> refine_colours(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = m[v][v];
    int classes = -1;
    for (;;) {
        using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Signature> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (int u = 0; u < n; ++u) {
                if (u != v && m[v][u] > 0) sig[v].second.emplace_back(m[v][u], colour[u]);
            }
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<Signature, int> ids;
        for (auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) colour[v] = ids.at(sig[v]);
        if (next == classes) break;
        classes = next;
    }
    return colour;
}

class Search {
public:
    Search(const Matrix& m, std::vector<int> colour)
        : m_(m), n_(static_cast<int>(m.size())), colour_(std::move(colour)),
          used_(n_, 0), order_(n_, -1) {
        slot_colour_ = colour_;
        std::sort(slot_colour_.begin(), slot_colour_.end());
        current_.reserve(n_ * (n_ + 1) / 2);
    }

    CanonicalMatrix run() {
        descend(0, false);
        CanonicalMatrix out;
        out.code.bytes.push_back(static_cast<std::uint8_t>(n_));
        out.code.bytes.insert(out.code.bytes.end(), best_.begin(), best_.end());
        out.order = best_order_;
        return out;
    }

private:
    void descend(int k, bool below) {
        if (k == n_) {
            if (!have_best_ || below) {
                best_ = current_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v] || colour_[v] != slot_colour_[k]) continue;
            const std::size_t start = current_.size();
            order_[k] = v;
            for (int j = 0; j <= k; ++j) {
                current_.push_back(static_cast<std::uint8_t>(m_[v][order_[j]]));
            }
            bool next_below = below;
            bool prune = false;
            if (have_best_ && !below) {
                auto cmp = std::lexicographical_compare_three_way(
                    current_.begin() + start, current_.end(),
                    best_.begin() + start, best_.begin() + current_.size());
                if (cmp > 0) prune = true;
                else if (cmp < 0) next_below = true;
            }
            if (!prune) {
                used_[v] = 1;
                descend(k + 1, next_below);
                used_[v] = 0;
            }
            current_.resize(start);
        }
    }

    const Matrix& m_;
    int n_;
    std::vector<int> colour_;
    std::vector<int> slot_colour_;
    std::vector<char> used_;
    std::vector<int> order_;
    std::vector<std::uint8_t> current_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_order_;
    bool have_best_ = false;
};

} // namespace

CanonicalMatrix canonical_matrix(const Matrix& m) {
    return Search(m, refine_colours(m)).run();
}

Matrix permute(const Matrix& m, const std::vector<int>& order) {
    const int n = static_cast<int>(m.size());
    Matrix out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out[i][j] = m[order[i]][order[j]];
    }
    return out;
}

} // namespace spinecensus::detail
