#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gencover/words.hpp"

namespace gencover {

struct RadiusReport {
    int radius;
    MatrixWord deep_hole;   // first target attaining the radius, flattened lex order
    std::uint64_t scanned;  // targets examined
};

struct CoverCheck {
    bool covering;
    std::optional<MatrixWord> counterexample;  // lex-first uncovered target when false
    std::uint64_t scanned;  // targets up to and including the witness in scan order
};

/// Covering radius of a nonempty code under the Hamming metric.
RadiusReport covering_radius(const Code& code, int threads = 0);

/// t-th covering radius: covering radius of C^t (rows from C, repetition
/// allowed) in the t-metric. Bitmask engine, parallel over disjoint
/// lexicographic chunks of the target space; the result is identical for
/// every chunking and thread count.
RadiusReport t_covering_radius(const Code& code, int t, int threads = 0);

/// True iff R_t(code) <= r; short-circuits on the first uncovered target.
CoverCheck is_covering(const Code& code, int t, int r, int threads = 0);

/// All targets attaining R_t(code), in flattened lex order.
std::vector<MatrixWord> deep_holes(const Code& code, int t, int threads = 0);

/// Serial digit-level engine, kept as the reference the bitmask engine is
/// checked against.
RadiusReport t_covering_radius_reference(const Code& code, int t);

}  // namespace gencover
