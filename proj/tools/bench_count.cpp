// Compares the serial reference enumerator against the OpenMP kernel on the
// doubly stochastic matrix polytopes and prints a timing table. The counts
// must agree exactly; a mismatch aborts with exit 1.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forge/ehrhart.hpp"
#include "forge/families.hpp"

using namespace forge;

namespace {

long long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = 4;
    long max_r = 5;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) max_r = std::atol(argv[2]);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads();
    if (const char* env = std::getenv("EHRHART_FORGE_THREADS"))
        std::cout << " (capped by EHRHART_FORGE_THREADS=" << env << ")";
    std::cout << "\n";
#else
    std::cout << "threads: 1 (no OpenMP)\n";
#endif
    std::cout << "matrix size n = " << n << ", dilates r = 0.." << max_r << "\n";
    std::cout << "r\tcount\tserial_ms\tparallel_ms\n";

    IntegerPolytope p = birkhoff(n);
    Budgets budgets;
    long long serial_total = 0, parallel_total = 0;
    for (long r = 0; r <= max_r; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        Int serial = count_points_serial(p, r, budgets);
        long long serial_ms = ms_since(t0);

        auto t1 = std::chrono::steady_clock::now();
        Int parallel = count_points(p, r, budgets);
        long long parallel_ms = ms_since(t1);

        if (serial != parallel) {
            std::cerr << "MISMATCH at r = " << r << ": serial " << serial.get_str()
                      << ", parallel " << parallel.get_str() << "\n";
            return 1;
        }
        serial_total += serial_ms;
        parallel_total += parallel_ms;
        std::cout << r << "\t" << serial.get_str() << "\t" << serial_ms << "\t" << parallel_ms
                  << "\n";
    }
    std::cout << "total\t-\t" << serial_total << "\t" << parallel_total << "\n";
    if (parallel_total > 0)
        std::cout << "speedup x" << (serial_total * 10 / parallel_total) / 10 << "."
                  << (serial_total * 10 / parallel_total) % 10 << "\n";
    return 0;
}
