// Times the serial digit-level reference engine against the OpenMP bitmask
// engine on seeded random codes and prints a comparison table. The radii
// must agree; a mismatch aborts the run.

#include <chrono>
#include <cstdio>
#include <vector>

#include "gencover/radius.hpp"
#include "gencover/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gencover;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Code random_code_of_size(int n, int q, std::size_t m, std::uint64_t seed) {
    std::uint64_t w = space_size(n, q);
    CounterRng rng(seed);
    std::vector<std::uint32_t> idx(w);
    for (std::uint64_t i = 0; i < w; ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::vector<Word> words;
    for (std::size_t i = 0; i < m; ++i) {
        std::swap(idx[i], idx[i + rng.next_below(w - i)]);
        words.push_back(Word::from_index(idx[i], n, q));
    }
    return Code(std::move(words));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif
    std::printf("%-6s %-4s %-4s %-4s %10s %12s %12s %9s\n", "engine", "q", "n", "M", "radius",
                "ref (s)", "fast (s)", "speedup");

    struct Case {
        int q, n, t;
        std::size_t m;
        bool run_reference;
    };
    std::vector<Case> cases = {
        {2, 5, 2, 4, true},  {2, 6, 2, 6, true},   {2, 7, 2, 8, true},
        {3, 4, 2, 5, true},  {2, 10, 2, 12, false}, {2, 12, 2, 16, false},
    };

    for (const Case& c : cases) {
        Code code = random_code_of_size(c.n, c.q, c.m, 0xbe9c0de5ULL + c.n);

        double ref_s = -1.0;
        int ref_radius = -1;
        if (c.run_reference) {
            auto start = std::chrono::steady_clock::now();
            ref_radius = t_covering_radius_reference(code, c.t).radius;
            ref_s = seconds_since(start);
        }

        auto start = std::chrono::steady_clock::now();
        int fast_radius = t_covering_radius(code, c.t).radius;
        double fast_s = seconds_since(start);

        if (c.run_reference && ref_radius != fast_radius) {
            std::fprintf(stderr, "ENGINE MISMATCH: q=%d n=%d ref=%d fast=%d\n", c.q, c.n,
                         ref_radius, fast_radius);
            return 1;
        }

        if (c.run_reference)
            std::printf("t=%-4d %-4d %-4d %-4zu %10d %12.4f %12.4f %8.1fx\n", c.t, c.q, c.n, c.m,
                        fast_radius, ref_s, fast_s, ref_s / fast_s);
        else
            std::printf("t=%-4d %-4d %-4d %-4zu %10d %12s %12.4f %9s\n", c.t, c.q, c.n, c.m,
                        fast_radius, "-", fast_s, "-");
    }
    return 0;
}
