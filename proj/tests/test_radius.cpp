#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gencover/radius.hpp"

using namespace gencover;

namespace {

Word w(const std::string& digits, int q) { return Word::parse(digits, q); }

std::vector<Word> all_words(int n, int q) {
    std::vector<Word> out;
    WordStream s(n, q);
    while (!s.done()) out.push_back(s.next());
    return out;
}

// distance of a matrix to C^t by full digit-level enumeration
int dist_to_power_oracle(const Code& code, const MatrixWord& target) {
    int t = target.t();
    std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
    int best = target.n() + 1;
    for (;;) {
        std::vector<Word> rows;
        for (int i = 0; i < t; ++i) rows.push_back(code[pick[static_cast<std::size_t>(i)]]);
        best = std::min(best, t_distance(MatrixWord(rows), target));
        int level = t - 1;
        while (level >= 0 && ++pick[static_cast<std::size_t>(level)] == code.size())
            pick[static_cast<std::size_t>(level--)] = 0;
        if (level < 0) break;
    }
    return best;
}

}  // namespace

TEST_CASE("covering radius examples") {
    Code rep3({w("000", 2), w("111", 2)});
    CHECK(covering_radius(rep3).radius == 1);
    CHECK(t_covering_radius(rep3, 2).radius == 2);

    Code full(all_words(2, 2));
    CHECK(covering_radius(full).radius == 0);
    CHECK(t_covering_radius(full, 2).radius == 0);

    Code single({Word::zero(3, 2)});
    CHECK(covering_radius(single).radius == 3);
    CHECK(t_covering_radius(single, 2).radius == 3);

    CHECK_THROWS_AS(covering_radius(Code({})), std::invalid_argument);
}

TEST_CASE("radius report carries a valid deep hole and scan count") {
    Code rep3({w("000", 2), w("111", 2)});
    RadiusReport rep = t_covering_radius(rep3, 2);
    CHECK(rep.scanned == 64);
    CHECK(dist_to_power_oracle(rep3, rep.deep_hole) == rep.radius);

    RadiusReport r1 = covering_radius(Code({Word::zero(3, 2)}));
    CHECK(r1.deep_hole.row(0) == w("111", 2));
}

TEST_CASE("fast engine agrees with the reference engine exhaustively") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            auto words = all_words(n, q);
            std::size_t total = words.size();
            // all codes of size 1..3
            for (std::size_t i = 0; i < total; ++i) {
                for (std::size_t j = i; j < total; ++j) {
                    for (std::size_t k = j; k < total; ++k) {
                        std::vector<Word> pick{words[i]};
                        if (j > i) pick.push_back(words[j]);
                        if (k > j) pick.push_back(words[k]);
                        Code code(pick);
                        RadiusReport fast = t_covering_radius(code, 2);
                        RadiusReport ref = t_covering_radius_reference(code, 2);
                        REQUIRE(fast.radius == ref.radius);
                        REQUIRE(fast.deep_hole == ref.deep_hole);
                    }
                }
            }
        }
    }
}

TEST_CASE("translation invariance and monotonicity in t, exhaustively at n=3 q=2") {
    auto words = all_words(3, 2);
    for (std::uint64_t mask = 1; mask < 256; ++mask) {
        std::vector<Word> pick;
        for (int b = 0; b < 8; ++b)
            if (mask >> b & 1) pick.push_back(words[static_cast<std::size_t>(b)]);
        Code code(pick);
        int r1 = covering_radius(code).radius;
        int r2 = t_covering_radius(code, 2).radius;
        CHECK(r1 <= r2);
        for (int x = 0; x < 8; ++x) {
            Code shifted = code.translated(words[static_cast<std::size_t>(x)]);
            CHECK(t_covering_radius(shifted, 2).radius == r2);
        }
    }
}

TEST_CASE("radius is anti-monotone under code extension") {
    auto words = all_words(2, 2);
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
        std::vector<Word> pick;
        for (int b = 0; b < 4; ++b)
            if (mask >> b & 1) pick.push_back(words[static_cast<std::size_t>(b)]);
        Code code(pick);
        int base = t_covering_radius(code, 2).radius;
        for (int b = 0; b < 4; ++b) {
            if (mask >> b & 1) continue;
            std::vector<Word> bigger = pick;
            bigger.push_back(words[static_cast<std::size_t>(b)]);
            CHECK(t_covering_radius(Code(bigger), 2).radius <= base);
        }
    }
}

TEST_CASE("results are identical across thread counts") {
    Code code({w("0000", 2), w("0111", 2), w("1010", 2)});
    RadiusReport serial = t_covering_radius(code, 2, 1);
    for (int threads : {2, 3, 8}) {
        RadiusReport par = t_covering_radius(code, 2, threads);
        CHECK(par.radius == serial.radius);
        CHECK(par.deep_hole == serial.deep_hole);
        CHECK(par.scanned == serial.scanned);
    }
    CoverCheck serial_check = is_covering(code, 2, 1, 1);
    for (int threads : {2, 8}) {
        CoverCheck par = is_covering(code, 2, 1, threads);
        CHECK(par.covering == serial_check.covering);
        CHECK(par.counterexample == serial_check.counterexample);
        CHECK(par.scanned == serial_check.scanned);
    }
}

TEST_CASE("is_covering matches the radius and yields real counterexamples") {
    Code rep3({w("000", 2), w("111", 2)});
    CHECK(is_covering(rep3, 2, 2).covering);
    CHECK(is_covering(rep3, 2, 3).covering);
    CoverCheck below = is_covering(rep3, 2, 1);
    CHECK_FALSE(below.covering);
    REQUIRE(below.counterexample.has_value());
    CHECK(dist_to_power_oracle(rep3, *below.counterexample) > 1);

    // r = n always covers
    Code any({w("01", 2)});
    CHECK(is_covering(any, 2, 2).covering);

    // counterexample is the lexicographically first uncovered target
    MatrixStream targets(2, 3, 2);
    while (!targets.done()) {
        MatrixWord m = targets.next();
        if (dist_to_power_oracle(rep3, m) > 1) {
            CHECK(*below.counterexample == m);
            break;
        }
    }
}

TEST_CASE("deep holes are exactly the radius-attaining targets") {
    Code rep3({w("000", 2), w("111", 2)});
    auto holes = deep_holes(rep3, 2);
    CHECK_FALSE(holes.empty());
    int radius = t_covering_radius(rep3, 2).radius;
    std::size_t expected = 0;
    MatrixStream targets(2, 3, 2);
    while (!targets.done())
        if (dist_to_power_oracle(rep3, targets.next()) == radius) ++expected;
    CHECK(holes.size() == expected);
    for (const auto& h : holes) CHECK(dist_to_power_oracle(rep3, h) == radius);

    // whole space: every matrix is a hole at radius 0
    Code full(all_words(1, 2));
    CHECK(deep_holes(full, 2).size() == 4);

    // single zero word, t = 1: the all-ones word is the unique hole
    auto ones = deep_holes(Code({Word::zero(3, 2)}), 1);
    REQUIRE(ones.size() == 1);
    CHECK(ones[0].row(0) == w("111", 2));
}

TEST_CASE("t=3 engine agrees with the digit-level reference on a small code") {
    Code code({w("00", 3), w("12", 3)});
    RadiusReport fast = t_covering_radius(code, 3);
    RadiusReport ref = t_covering_radius_reference(code, 3);
    CHECK(fast.radius == ref.radius);
    CHECK(fast.deep_hole == ref.deep_hole);
}
