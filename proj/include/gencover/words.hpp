#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gencover/base.hpp"

namespace gencover {

/// q^n as a uint64, throwing if the space does not fit (which is far past
/// any enumeration budget anyway).
std::uint64_t space_size(int n, int q);

/// A length-n vector of digits over the integers mod q.
class Word {
  public:
    Word(std::vector<std::uint8_t> digits, int q);

    static Word zero(int n, int q);
    /// Word with the given lexicographic rank (all-zeros has rank 0).
    static Word from_index(std::uint64_t index, int n, int q);
    /// Parse a run of digit characters, e.g. "0210" for q=3, n=4.
    /// Only alphabets up to q=10 have a textual form.
    static Word parse(std::string_view text, int q);

    int n() const { return static_cast<int>(digits_.size()); }
    int q() const { return q_; }
    std::uint8_t operator[](int i) const { return digits_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }

    int weight() const;
    /// Bit i set iff digit i is nonzero (requires n <= 64).
    std::uint64_t support_mask() const;
    /// Lexicographic rank within G_q^n.
    std::uint64_t index() const;

    Word operator+(const Word& other) const;
    Word operator-(const Word& other) const;

    std::string str() const;

    std::strong_ordering operator<=>(const Word& other) const;
    bool operator==(const Word& other) const = default;

  private:
    std::vector<std::uint8_t> digits_;
    int q_;
};

int hamming_distance(const Word& u, const Word& v);

/// A t x n matrix of digits mod q: t stacked Words of identical shape.
class MatrixWord {
  public:
    explicit MatrixWord(std::vector<Word> rows);

    static MatrixWord from_index(std::uint64_t index, int t, int n, int q);

    int t() const { return static_cast<int>(rows_.size()); }
    int n() const { return rows_[0].n(); }
    int q() const { return rows_[0].q(); }
    const Word& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<Word>& rows() const { return rows_; }

    /// Rank under row-major (flattened) lexicographic order.
    std::uint64_t index() const;

    std::string str() const;  // rows joined with ';'

    std::strong_ordering operator<=>(const MatrixWord& other) const;
    bool operator==(const MatrixWord& other) const = default;

  private:
    std::vector<Word> rows_;
};

/// Number of columns with at least one nonzero entry.
int t_weight(const MatrixWord& m);
/// t_weight of the columnwise difference b - a; the block metric.
int t_distance(const MatrixWord& a, const MatrixWord& b);

/// A set of distinct Words sharing n and q, kept sorted lexicographically.
class Code {
  public:
    explicit Code(std::vector<Word> words);

    int n() const { return n_; }
    int q() const { return q_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Word>& words() const { return words_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    bool contains(const Word& w) const;

    /// Translate every codeword by x.
    Code translated(const Word& x) const;

    // Text format: header "q=<q> n=<n>", then one codeword per line.
    static Code read(std::istream& in);
    static Code read_file(const std::string& path);
    void write(std::ostream& out) const;
    void write_file(const std::string& path) const;

    bool operator==(const Code& other) const = default;

  private:
    std::vector<Word> words_;
    int n_;
    int q_;
};

BigInt binomial(unsigned n, unsigned k);

/// Exact t-ball volume: sum_{i=0}^{r} C(n,i) (q^t - 1)^i.
BigInt ball_size(int t, int r, int n, int q);

/// Restartable lexicographic enumeration of G_q^n.
class WordStream {
  public:
    WordStream(int n, int q, std::uint64_t start = 0);

    std::uint64_t total() const { return total_; }
    std::uint64_t position() const { return position_; }
    bool done() const { return position_ >= total_; }
    Word next();

  private:
    std::vector<std::uint8_t> digits_;
    std::uint64_t position_;
    std::uint64_t total_;
    int q_;
};

/// Restartable lexicographic enumeration of G_q^{t x n} (row-major order).
class MatrixStream {
  public:
    MatrixStream(int t, int n, int q, std::uint64_t start = 0);

    std::uint64_t total() const { return total_; }
    std::uint64_t position() const { return position_; }
    bool done() const { return position_ >= total_; }
    MatrixWord next();

  private:
    std::vector<std::uint8_t> digits_;  // flattened t*n
    std::uint64_t position_;
    std::uint64_t total_;
    int t_, n_, q_;
};

}  // namespace gencover
