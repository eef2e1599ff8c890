// Compares the serial and OpenMP enumeration paths level by level and
// checks that both emit identical sequences.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "reeb/enumerate.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    int max_k = argc > 1 ? std::atoi(argv[1]) : 9;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "k\tgraphs\tserial_s\tparallel_s\tspeedup\n";
    bool ok = true;
    for (int k = 1; k <= max_k; ++k) {
        auto t0 = Clock::now();
        auto serial = reeb::enumeration::enum_full(
            k, reeb::enumeration::kDefaultCap, /*parallel=*/false);
        auto t1 = Clock::now();
        auto parallel = reeb::enumeration::enum_full(
            k, reeb::enumeration::kDefaultCap, /*parallel=*/true);
        auto t2 = Clock::now();

        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].enc == parallel[i].enc;
        ok &= same;

        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%d\t%zu\t%.4f\t%.4f\t%.2fx%s\n", k, serial.size(), ts,
                    tp, tp > 0 ? ts / tp : 0.0, same ? "" : "\tMISMATCH");
    }
    if (!ok) {
        std::cout << "serial and parallel paths disagree\n";
        return 1;
    }
    return 0;
}
