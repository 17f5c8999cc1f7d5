#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "gencover/words.hpp"

using namespace gencover;

namespace {

Word w(const std::string& digits, int q) { return Word::parse(digits, q); }

MatrixWord mw(const std::vector<std::string>& rows, int q) {
    std::vector<Word> r;
    for (const auto& s : rows) r.push_back(w(s, q));
    return MatrixWord(std::move(r));
}

// brute-force count of matrices within t-distance r of the zero matrix
std::uint64_t ball_count_oracle(int t, int r, int n, int q) {
    MatrixStream stream(t, n, q);
    MatrixWord zero = MatrixWord::from_index(0, t, n, q);
    std::uint64_t count = 0;
    while (!stream.done())
        if (t_distance(zero, stream.next()) <= r) ++count;
    return count;
}

}  // namespace

TEST_CASE("hamming distance basics") {
    CHECK(hamming_distance(w("000", 2), w("111", 2)) == 3);
    CHECK(hamming_distance(w("0101", 2), w("0101", 2)) == 0);
    CHECK(hamming_distance(w("012", 3), w("022", 3)) == 1);
    CHECK(hamming_distance(w("012", 3), w("022", 3)) ==
          hamming_distance(w("022", 3), w("012", 3)));
    CHECK_THROWS_AS(hamming_distance(w("01", 2), w("011", 2)), std::invalid_argument);
    CHECK_THROWS_AS(hamming_distance(w("01", 2), w("01", 3)), std::invalid_argument);
}

TEST_CASE("t-weight counts columns with any nonzero") {
    CHECK(t_weight(mw({"101", "001"}, 2)) == 2);
    CHECK(t_weight(mw({"000", "000"}, 2)) == 0);
    CHECK(t_weight(mw({"10", "01"}, 2)) == 2);
    CHECK(t_weight(mw({"0120", "0100"}, 3)) == 2);
}

TEST_CASE("t-distance reduces to hamming for t=1 and is zero on equals") {
    auto a = mw({"0102"}, 3);
    auto b = mw({"2102"}, 3);
    CHECK(t_distance(a, b) == hamming_distance(a.row(0), b.row(0)));
    CHECK(t_distance(a, a) == 0);
    CHECK(t_distance(mw({"00", "00"}, 2), mw({"10", "01"}, 2)) == 2);
}

TEST_CASE("t-distance metric axioms, exhaustive on small spaces") {
    for (int q : {2, 3}) {
        for (int t : {1, 2}) {
            int n = (q == 2) ? (t == 1 ? 4 : 2) : (t == 1 ? 3 : 1);
            std::uint64_t total = 1;
            for (int i = 0; i < t * n; ++i) total *= q;
            std::vector<MatrixWord> all;
            for (std::uint64_t i = 0; i < total; ++i)
                all.push_back(MatrixWord::from_index(i, t, n, q));
            for (const auto& a : all)
                for (const auto& b : all) {
                    int d = t_distance(a, b);
                    CHECK(d == t_distance(b, a));
                    CHECK((d == 0) == (a == b));
                    for (const auto& c : all)
                        CHECK(t_distance(a, c) <= d + t_distance(b, c));
                }
        }
    }
}

TEST_CASE("t-distance translation and column-permutation invariance") {
    // exhaustive translations at n=3, q=2, t=2; rotation as the permutation
    int n = 3, q = 2, t = 2;
    std::uint64_t total = 1ULL << (t * n);
    auto rotate = [&](const MatrixWord& m) {
        std::vector<Word> rows;
        for (int i = 0; i < t; ++i) {
            std::vector<std::uint8_t> digits;
            for (int j = 0; j < n; ++j)
                digits.push_back(m.row(i)[(j + 1) % n]);
            rows.emplace_back(std::move(digits), q);
        }
        return MatrixWord(std::move(rows));
    };
    for (std::uint64_t i = 0; i < total; i += 3)
        for (std::uint64_t j = 0; j < total; j += 5) {
            auto a = MatrixWord::from_index(i, t, n, q);
            auto b = MatrixWord::from_index(j, t, n, q);
            int d = t_distance(a, b);
            CHECK(t_distance(rotate(a), rotate(b)) == d);
            for (std::uint64_t k = 0; k < total; k += 7) {
                auto c = MatrixWord::from_index(k, t, n, q);
                std::vector<Word> ar, br;
                for (int row = 0; row < t; ++row) {
                    ar.push_back(a.row(row) + c.row(row));
                    br.push_back(b.row(row) + c.row(row));
                }
                CHECK(t_distance(MatrixWord(ar), MatrixWord(br)) == d);
            }
        }
}

TEST_CASE("ball size formula") {
    CHECK(ball_size(1, 0, 5, 2) == 1);
    CHECK(ball_size(2, 1, 2, 2) == 7);
    CHECK(ball_size(2, 3, 3, 2) == 64);   // whole space q^(t n)
    CHECK(ball_size(1, 3, 3, 4) == 64);
    CHECK(ball_size(2, 2, 3, 2) == 37);
    CHECK_THROWS_AS(ball_size(1, -1, 3, 2), std::domain_error);
    CHECK_THROWS_AS(ball_size(1, 4, 3, 2), std::domain_error);
}

TEST_CASE("ball size equals the q^t alphabet identity and the brute count") {
    for (int q : {2, 3})
        for (int t : {1, 2})
            for (int n = 1; n <= 4; ++n)
                for (int r = 0; r <= n; ++r) {
                    int qt = 1;
                    for (int i = 0; i < t; ++i) qt *= q;
                    CHECK(ball_size(t, r, n, q) == ball_size(1, r, n, qt));
                }
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(ball_size(2, r, n, 2) == BigInt(ball_count_oracle(2, r, n, 2)));
}

TEST_CASE("word enumeration: order, count, restart") {
    WordStream s(1, 3);
    CHECK(s.next().str() == "0");
    CHECK(s.next().str() == "1");
    CHECK(s.next().str() == "2");
    CHECK(s.done());

    WordStream s2(3, 2);
    CHECK(s2.total() == 8);
    std::set<std::string> seen;
    Word prev = s2.next();
    CHECK(prev == Word::zero(3, 2));
    seen.insert(prev.str());
    while (!s2.done()) {
        Word cur = s2.next();
        CHECK(prev < cur);
        seen.insert(cur.str());
        prev = cur;
    }
    CHECK(seen.size() == 8);

    WordStream restarted(3, 2, 5);
    CHECK(restarted.next().index() == 5);

    MatrixStream ms(2, 2, 2, 3);
    CHECK(ms.total() == 16);
    CHECK(ms.next().index() == 3);
}

TEST_CASE("word index round trip and ordering") {
    for (std::uint64_t i = 0; i < 27; ++i)
        CHECK(Word::from_index(i, 3, 3).index() == i);
    CHECK(Word::from_index(0, 4, 5) == Word::zero(4, 5));
    CHECK(w("0210", 3).str() == "0210");
}

TEST_CASE("code construction validates and canonicalizes") {
    Code code({w("111", 2), w("000", 2)});
    CHECK(code.size() == 2);
    CHECK(code[0] == w("000", 2));  // sorted
    CHECK(code.contains(w("111", 2)));
    CHECK_FALSE(code.contains(w("101", 2)));
    CHECK_THROWS_AS(Code({w("00", 2), w("00", 2)}), std::invalid_argument);
    CHECK_THROWS_AS(Code({w("00", 2), w("000", 2)}), std::invalid_argument);
}

TEST_CASE("code file round trip and rejection of malformed input") {
    Code code({w("0210", 3), w("0000", 3), w("2221", 3)});
    std::ostringstream out;
    code.write(out);
    CHECK(out.str() == "q=3 n=4\n0000\n0210\n2221\n");

    std::istringstream in(out.str());
    CHECK(Code::read(in) == code);

    std::istringstream bad_digit("q=2 n=3\n012\n");
    CHECK_THROWS_AS(Code::read(bad_digit), std::invalid_argument);
    std::istringstream ragged("q=2 n=3\n0110\n");
    CHECK_THROWS_AS(Code::read(ragged), std::invalid_argument);
    std::istringstream dup("q=2 n=2\n01\n01\n");
    CHECK_THROWS_AS(Code::read(dup), std::invalid_argument);
    std::istringstream no_header("0101\n");
    CHECK_THROWS_AS(Code::read(no_header), std::invalid_argument);
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(Word::parse("012", 2), std::invalid_argument);
    CHECK_THROWS_AS(Word(std::vector<std::uint8_t>{}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Word::zero(3, 1), std::invalid_argument);
}
