#include "gencover/radius.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gencover {

namespace {

void check_nonempty(const Code& code) {
    if (code.empty()) throw std::invalid_argument("code must be nonempty");
}

// Per target row u, the support masks of u - c over all codewords c, sorted
// by ascending weight. d^(t) of a target against a row tuple is then the
// popcount of the OR of the chosen masks.
struct MaskTable {
    int n = 0;
    int m = 0;            // code size
    std::uint64_t w = 0;  // q^n
    std::vector<std::uint64_t> masks;

    MaskTable(const Code& code) {
        n = code.n();
        if (n > 64) throw std::invalid_argument("bitmask engine requires n <= 64");
        m = static_cast<int>(code.size());
        w = space_size(n, code.q());
        int q = code.q();
        masks.resize(w * static_cast<std::uint64_t>(m));
        WordStream stream(n, q);
        while (!stream.done()) {
            std::uint64_t u = stream.position();
            Word word = stream.next();
            std::uint64_t* row = &masks[u * m];
            for (int j = 0; j < m; ++j) row[j] = (word - code[j]).support_mask();
            std::sort(row, row + m, [](std::uint64_t a, std::uint64_t b) {
                return std::popcount(a) < std::popcount(b);
            });
        }
    }

    const std::uint64_t* row(std::uint64_t u) const { return &masks[u * m]; }
};

// Min over C^t of d^(t) against the target with the given row indices.
// Aborts once the running minimum reaches stop_below or less; an aborted
// call returns a value <= stop_below, otherwise the exact minimum.
int min_distance(const MaskTable& tab, const std::uint64_t* rows, int t, int stop_below) {
    int best = std::numeric_limits<int>::max();
    if (t == 1) return std::popcount(tab.row(rows[0])[0]);
    if (t == 2) {
        const std::uint64_t* r1 = tab.row(rows[0]);
        const std::uint64_t* r2 = tab.row(rows[1]);
        for (int i = 0; i < tab.m; ++i) {
            if (std::popcount(r1[i]) >= best) break;
            for (int j = 0; j < tab.m; ++j) {
                std::uint64_t merged = r1[i] | r2[j];
                if (std::popcount(r2[j]) >= best) break;
                int d = std::popcount(merged);
                if (d < best) {
                    best = d;
                    if (best <= stop_below) return best;
                }
            }
        }
        return best;
    }
    // generic t: depth-first over rows, pruning on the accumulated support
    struct Rec {
        const MaskTable& tab;
        const std::uint64_t* rows;
        int t, stop_below;
        int best = std::numeric_limits<int>::max();
        bool stopped = false;

        void go(int level, std::uint64_t acc) {
            const std::uint64_t* cand = tab.row(rows[level]);
            for (int j = 0; j < tab.m; ++j) {
                if (std::popcount(cand[j]) >= best) break;
                std::uint64_t merged = acc | cand[j];
                int w = std::popcount(merged);
                if (w >= best) continue;
                if (level + 1 == t) {
                    best = w;
                    if (best <= stop_below) {
                        stopped = true;
                        return;
                    }
                } else {
                    go(level + 1, merged);
                    if (stopped) return;
                }
            }
        }
    } rec{tab, rows, t, stop_below};
    rec.go(0, 0);
    best = rec.best;
    return best;
}

struct TargetSpace {
    std::uint64_t w;      // q^n
    std::uint64_t total;  // w^t
    int t;

    TargetSpace(const Code& code, int t_) : t(t_) {
        if (t < 1) throw std::invalid_argument("t must be at least 1");
        w = space_size(code.n(), code.q());
        total = 1;
        for (int i = 0; i < t; ++i) {
            if (total > std::numeric_limits<std::uint64_t>::max() / w)
                throw budget_error("q^(t*n) does not fit in 64 bits",
                                   std::pow(double(w), double(t)));
            total *= w;
        }
    }

    void decompose(std::uint64_t v, std::uint64_t* rows) const {
        for (int i = t - 1; i >= 0; --i) {
            rows[i] = v % w;
            v /= w;
        }
    }

    // advance a decomposed index by one (lex order)
    void advance(std::uint64_t* rows) const {
        for (int i = t - 1; i >= 0; --i) {
            if (++rows[i] < w) return;
            rows[i] = 0;
        }
    }
};

constexpr int kMaxRows = 16;

// Chunk grid fixed by problem size only, so results merge identically for
// any thread count.
std::uint64_t pick_chunk_size(std::uint64_t total) {
    std::uint64_t chunks = std::min<std::uint64_t>(1024, (total + 4095) / 4096);
    if (chunks == 0) chunks = 1;
    return (total + chunks - 1) / chunks;
}

struct ChunkMax {
    int max_dist = -1;
    std::uint64_t argmax = 0;
};

template <typename F>
void parallel_chunks(std::uint64_t total, int threads, F&& body) {
    std::uint64_t chunk = pick_chunk_size(total);
    std::int64_t nchunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
#ifdef _OPENMP
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (std::int64_t c = 0; c < nchunks; ++c)
        body(static_cast<std::uint64_t>(c), c * chunk, std::min<std::uint64_t>((c + 1) * chunk, total));
#else
    (void)threads;
    for (std::int64_t c = 0; c < nchunks; ++c)
        body(static_cast<std::uint64_t>(c), c * chunk, std::min<std::uint64_t>((c + 1) * chunk, total));
#endif
}

MatrixWord matrix_at(const Code& code, int t, std::uint64_t index) {
    return MatrixWord::from_index(index, t, code.n(), code.q());
}

}  // namespace

RadiusReport t_covering_radius(const Code& code, int t, int threads) {
    check_nonempty(code);
    MaskTable tab(code);
    TargetSpace space(code, t);
    if (t > kMaxRows) throw std::invalid_argument("t too large for this engine");

    std::uint64_t chunk = pick_chunk_size(space.total);
    std::size_t nchunks = static_cast<std::size_t>((space.total + chunk - 1) / chunk);
    std::vector<ChunkMax> results(nchunks);

    parallel_chunks(space.total, threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t rows[kMaxRows];
        space.decompose(lo, rows);
        ChunkMax local;
        for (std::uint64_t v = lo; v < hi; ++v) {
            // aborted evaluations return <= local.max_dist and cannot update it,
            // so the chunk maximum and its first attaining target stay exact
            int d = min_distance(tab, rows, t, local.max_dist);
            if (d > local.max_dist) {
                local.max_dist = d;
                local.argmax = v;
            }
            space.advance(rows);
        }
        results[c] = local;
    });

    ChunkMax overall;
    overall.max_dist = -1;
    for (const ChunkMax& r : results)
        if (r.max_dist > overall.max_dist) overall = r;  // earlier chunk wins ties
    return RadiusReport{overall.max_dist, matrix_at(code, t, overall.argmax), space.total};
}

RadiusReport covering_radius(const Code& code, int threads) {
    return t_covering_radius(code, 1, threads);
}

CoverCheck is_covering(const Code& code, int t, int r, int threads) {
    check_nonempty(code);
    if (r < 0 || r > code.n()) throw std::domain_error("radius must be in [0,n]");
    MaskTable tab(code);
    TargetSpace space(code, t);
    if (t > kMaxRows) throw std::invalid_argument("t too large for this engine");

    std::atomic<std::uint64_t> first_uncovered{space.total};

    parallel_chunks(space.total, threads, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        if (lo > first_uncovered.load(std::memory_order_relaxed)) return;
        std::uint64_t rows[kMaxRows];
        space.decompose(lo, rows);
        for (std::uint64_t v = lo; v < hi; ++v) {
            int d = min_distance(tab, rows, t, r);
            if (d > r) {
                // keep the smallest index over all chunks
                std::uint64_t cur = first_uncovered.load(std::memory_order_relaxed);
                while (v < cur && !first_uncovered.compare_exchange_weak(cur, v)) {
                }
                return;
            }
            space.advance(rows);
        }
    });

    std::uint64_t idx = first_uncovered.load();
    if (idx == space.total) return CoverCheck{true, std::nullopt, space.total};
    return CoverCheck{false, matrix_at(code, t, idx), idx + 1};
}

std::vector<MatrixWord> deep_holes(const Code& code, int t, int threads) {
    RadiusReport report = t_covering_radius(code, t, threads);
    MaskTable tab(code);
    TargetSpace space(code, t);

    std::uint64_t chunk = pick_chunk_size(space.total);
    std::size_t nchunks = static_cast<std::size_t>((space.total + chunk - 1) / chunk);
    std::vector<std::vector<std::uint64_t>> found(nchunks);

    parallel_chunks(space.total, threads, [&](std::uint64_t c, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t rows[kMaxRows];
        space.decompose(lo, rows);
        for (std::uint64_t v = lo; v < hi; ++v) {
            int d = min_distance(tab, rows, t, report.radius - 1);
            if (d >= report.radius) found[c].push_back(v);
            space.advance(rows);
        }
    });

    std::vector<MatrixWord> holes;
    for (const auto& part : found)
        for (std::uint64_t v : part) holes.push_back(matrix_at(code, t, v));
    return holes;
}

RadiusReport t_covering_radius_reference(const Code& code, int t) {
    check_nonempty(code);
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    const int n = code.n();
    const int m = static_cast<int>(code.size());

    MatrixStream targets(t, n, code.q());
    int max_dist = -1;
    std::uint64_t argmax = 0;
    while (!targets.done()) {
        std::uint64_t index = targets.position();
        MatrixWord target = targets.next();
        // odometer over all row tuples of C^t
        std::vector<int> pick(static_cast<std::size_t>(t), 0);
        int best = n + 1;
        for (;;) {
            int d = 0;
            for (int col = 0; col < n; ++col) {
                for (int i = 0; i < t; ++i) {
                    if (code[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])][col] !=
                        target.row(i)[col]) {
                        ++d;
                        break;
                    }
                }
            }
            best = std::min(best, d);
            int level = t - 1;
            while (level >= 0 && ++pick[static_cast<std::size_t>(level)] == m)
                pick[static_cast<std::size_t>(level--)] = 0;
            if (level < 0) break;
        }
        if (best > max_dist) {
            max_dist = best;
            argmax = index;
        }
    }
    return RadiusReport{max_dist, matrix_at(code, t, argmax), targets.total()};
}

}  // namespace gencover
