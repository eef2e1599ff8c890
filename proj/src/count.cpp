#include "reeb/count.hpp"

#include <mutex>
#include <stdexcept>

namespace reeb::counting {

namespace {

std::mutex memo_mutex;
std::vector<BigCount> memo;  // memo[k] = K(k)

// caller holds memo_mutex
void extend_memo(int k) {
    if (memo.empty()) memo.push_back(1);  // K(0)
    while ((int)memo.size() <= k) {
        int m = (int)memo.size();
        int n = m / 2;
        BigCount sum = 0;
        for (int i = 0; i < n; ++i) sum += memo[i] * memo[m - 1 - i];
        BigCount value = 3 * sum;
        if (m % 2 == 1) {
            // middle split: unordered up-up pairs + ordered mixed pairs
            BigCount odd = memo[n] * (3 * memo[n] + 1);
            if (odd % 2 != 0)
                throw std::logic_error("K(n)*(3K(n)+1) not even at n=" +
                                       std::to_string(n));
            value += odd / 2;
        }
        memo.push_back(value);
    }
}

}  // namespace

BigCount K(int k) {
    if (k < 0) throw std::invalid_argument("K: k must be >= 0");
    std::lock_guard<std::mutex> lock(memo_mutex);
    extend_memo(k);
    return memo[k];
}

BigCount N(int k) {
    if (k < 1) throw std::invalid_argument("N: k must be >= 1");
    std::lock_guard<std::mutex> lock(memo_mutex);
    extend_memo(k - 1);
    BigCount sum = 0;
    for (int i = 0; i < k; ++i) sum += memo[i] * memo[k - 1 - i];
    return sum;
}

std::vector<std::pair<int, BigCount>> table(int k_max, Kind kind) {
    std::vector<std::pair<int, BigCount>> out;
    if (kind == Kind::Rooted) {
        for (int k = 0; k <= k_max; ++k) out.emplace_back(k, K(k));
    } else {
        for (int k = 1; k <= k_max; ++k) out.emplace_back(k, N(k));
    }
    return out;
}

}  // namespace reeb::counting
