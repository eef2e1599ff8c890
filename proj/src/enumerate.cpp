#include "reeb/enumerate.hpp"

#include <algorithm>
#include <string>

#include "reeb/count.hpp"
#include "reeb/errors.hpp"

namespace reeb::enumeration {

namespace {

bool enc_less(const TreePtr& a, const TreePtr& b) {
    return a->encoding() < b->encoding();
}

std::size_t checked_size(const counting::BigCount& projected, std::size_t cap,
                         const char* what) {
    if (projected > (unsigned long)cap)
        throw ResourceLimitError(std::string(what) + " count " +
                                 projected.get_str() + " exceeds cap " +
                                 std::to_string(cap));
    return (std::size_t)projected.get_ui();
}

}  // namespace

void Enumerator::build_level(int k) {
    while ((int)levels_.size() <= k) {
        int m = (int)levels_.size();
        std::size_t total = checked_size(counting::K(m), cap_, "rooted tree");
        std::vector<TreePtr> level(total);
        if (m == 0) {
            level[0] = RootedTree::leaf();
            levels_.push_back(std::move(level));
            continue;
        }
        std::size_t base = 0;
        for (int s = 0; s < m; ++s) {
            int j = m - 1 - s;
            const auto& ls = levels_[s];
            const auto& lj = levels_[j];
            long long ns = (long long)ls.size();
            long long nj = (long long)lj.size();
            std::size_t split_start = base;

            if (s < j) {
                // unordered up-up pair, distinct saddle counts
                TreePtr* out = level.data() + base;
#pragma omp parallel for schedule(dynamic) if (parallel_)
                for (long long a = 0; a < ns; ++a)
                    for (long long b = 0; b < nj; ++b)
                        out[a * nj + b] =
                            RootedTree::attach_up_up(ls[a], lj[b]);
                base += (std::size_t)(ns * nj);
            } else if (s == j) {
                // unordered pairs from one level: index pairs a <= b
                TreePtr* out = level.data() + base;
#pragma omp parallel for schedule(dynamic) if (parallel_)
                for (long long a = 0; a < ns; ++a) {
                    long long row = a * ns - a * (a - 1) / 2 - a;
                    for (long long b = a; b < ns; ++b)
                        out[row + b] = RootedTree::attach_up_up(ls[a], ls[b]);
                }
                base += (std::size_t)(ns * (ns + 1) / 2);
            }

            // ordered mixed pair: up child from level s, down child from
            // level j
            {
                TreePtr* out = level.data() + base;
#pragma omp parallel for schedule(dynamic) if (parallel_)
                for (long long a = 0; a < ns; ++a)
                    for (long long b = 0; b < nj; ++b)
                        out[a * nj + b] =
                            RootedTree::attach_mixed(ls[a], lj[b]);
                base += (std::size_t)(ns * nj);
            }

            std::sort(level.begin() + split_start, level.begin() + base,
                      enc_less);
        }
        levels_.push_back(std::move(level));
    }
}

const std::vector<TreePtr>& Enumerator::rooted(int k) {
    if (k < 0) throw std::invalid_argument("rooted: k must be >= 0");
    build_level(k);
    return levels_[k];
}

std::vector<FullReebGraph> Enumerator::full(int k) {
    if (k < 1) throw std::invalid_argument("full: k must be >= 1");
    std::size_t total = checked_size(counting::N(k), cap_, "full graph");
    build_level(k - 1);
    std::vector<FullReebGraph> out(total);
    std::size_t base = 0;
    for (int i = 0; i < k; ++i) {
        const auto& li = levels_[i];
        const auto& lj = levels_[k - 1 - i];
        long long ni = (long long)li.size();
        long long nj = (long long)lj.size();
        FullReebGraph* block = out.data() + base;
#pragma omp parallel for schedule(dynamic) if (parallel_)
        for (long long a = 0; a < ni; ++a)
            for (long long b = 0; b < nj; ++b)
                block[a * nj + b] = glue(li[a], lj[b]);
        base += (std::size_t)(ni * nj);
        std::sort(block, out.data() + base,
                  [](const FullReebGraph& x, const FullReebGraph& y) {
                      return x.enc < y.enc;
                  });
    }
    return out;
}

std::vector<TreePtr> enum_rooted(int k, std::size_t cap, bool parallel) {
    Enumerator e(cap, parallel);
    return e.rooted(k);
}

std::vector<FullReebGraph> enum_full(int k, std::size_t cap, bool parallel) {
    Enumerator e(cap, parallel);
    return e.full(k);
}

}  // namespace reeb::enumeration
