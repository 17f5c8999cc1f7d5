#include "gencover/words.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gencover {

namespace {

void check_alphabet(int q) {
    if (q < 2 || q > 256) throw std::invalid_argument("alphabet size must be in [2,256]");
}

void check_same_shape(const Word& u, const Word& v) {
    if (u.n() != v.n() || u.q() != v.q())
        throw std::invalid_argument("words differ in length or alphabet");
}

}  // namespace

std::uint64_t space_size(int n, int q) {
    check_alphabet(q);
    if (n < 0) throw std::invalid_argument("negative length");
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
            throw budget_error("q^n does not fit in 64 bits", std::pow(double(q), double(n)));
        r *= static_cast<std::uint64_t>(q);
    }
    return r;
}

Word::Word(std::vector<std::uint8_t> digits, int q) : digits_(std::move(digits)), q_(q) {
    check_alphabet(q);
    if (digits_.empty()) throw std::invalid_argument("word length must be at least 1");
    for (std::uint8_t d : digits_)
        if (d >= q_) throw std::invalid_argument("digit out of range for alphabet");
}

Word Word::zero(int n, int q) {
    if (n < 1) throw std::invalid_argument("word length must be at least 1");
    return Word(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0), q);
}

Word Word::from_index(std::uint64_t index, int n, int q) {
    std::uint64_t total = space_size(n, q);
    if (index >= total) throw std::invalid_argument("word index out of range");
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % q);
        index /= static_cast<std::uint64_t>(q);
    }
    return Word(std::move(digits), q);
}

Word Word::parse(std::string_view text, int q) {
    if (q > 10) throw std::invalid_argument("textual words support alphabets up to q=10");
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("invalid digit character");
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(std::move(digits), q);
}

int Word::weight() const {
    int w = 0;
    for (std::uint8_t d : digits_) w += (d != 0);
    return w;
}

std::uint64_t Word::support_mask() const {
    if (n() > 64) throw std::invalid_argument("support mask requires n <= 64");
    std::uint64_t m = 0;
    for (int i = 0; i < n(); ++i)
        if (digits_[static_cast<std::size_t>(i)] != 0) m |= std::uint64_t(1) << i;
    return m;
}

std::uint64_t Word::index() const {
    std::uint64_t total = space_size(n(), q_);
    (void)total;  // overflow guard
    std::uint64_t r = 0;
    for (std::uint8_t d : digits_) r = r * static_cast<std::uint64_t>(q_) + d;
    return r;
}

Word Word::operator+(const Word& other) const {
    check_same_shape(*this, other);
    std::vector<std::uint8_t> out(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i)
        out[i] = static_cast<std::uint8_t>((digits_[i] + other.digits_[i]) % q_);
    return Word(std::move(out), q_);
}

Word Word::operator-(const Word& other) const {
    check_same_shape(*this, other);
    std::vector<std::uint8_t> out(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i)
        out[i] = static_cast<std::uint8_t>((digits_[i] + q_ - other.digits_[i]) % q_);
    return Word(std::move(out), q_);
}

std::string Word::str() const {
    if (q_ > 10) throw std::invalid_argument("textual words support alphabets up to q=10");
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    check_same_shape(*this, other);
    return digits_ <=> other.digits_;
}

int hamming_distance(const Word& u, const Word& v) {
    check_same_shape(u, v);
    int d = 0;
    for (int i = 0; i < u.n(); ++i) d += (u[i] != v[i]);
    return d;
}

MatrixWord::MatrixWord(std::vector<Word> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("matrix word needs at least one row");
    for (const Word& r : rows_) check_same_shape(rows_[0], r);
}

MatrixWord MatrixWord::from_index(std::uint64_t index, int t, int n, int q) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    std::uint64_t per_row = space_size(n, q);
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(t));
    std::vector<std::uint64_t> row_idx(static_cast<std::size_t>(t));
    for (int i = t - 1; i >= 0; --i) {
        row_idx[static_cast<std::size_t>(i)] = index % per_row;
        index /= per_row;
    }
    if (index != 0) throw std::invalid_argument("matrix index out of range");
    for (int i = 0; i < t; ++i) rows.push_back(Word::from_index(row_idx[static_cast<std::size_t>(i)], n, q));
    return MatrixWord(std::move(rows));
}

std::uint64_t MatrixWord::index() const {
    std::uint64_t per_row = space_size(n(), q());
    std::uint64_t r = 0;
    for (const Word& row : rows_) {
        if (r > (std::numeric_limits<std::uint64_t>::max() - row.index()) / per_row)
            throw budget_error("q^(t*n) does not fit in 64 bits",
                               std::pow(double(q()), double(t()) * n()));
        r = r * per_row + row.index();
    }
    return r;
}

std::string MatrixWord::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s.push_back(';');
        s += rows_[i].str();
    }
    return s;
}

std::strong_ordering MatrixWord::operator<=>(const MatrixWord& other) const {
    if (t() != other.t()) throw std::invalid_argument("matrix words differ in row count");
    for (int i = 0; i < t(); ++i) {
        auto c = rows_[static_cast<std::size_t>(i)] <=> other.rows_[static_cast<std::size_t>(i)];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

int t_weight(const MatrixWord& m) {
    int w = 0;
    for (int col = 0; col < m.n(); ++col) {
        for (int i = 0; i < m.t(); ++i) {
            if (m.row(i)[col] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

int t_distance(const MatrixWord& a, const MatrixWord& b) {
    if (a.t() != b.t() || a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument("matrix words differ in shape");
    int w = 0;
    for (int col = 0; col < a.n(); ++col) {
        for (int i = 0; i < a.t(); ++i) {
            if (a.row(i)[col] != b.row(i)[col]) {
                ++w;
                break;
            }
        }
    }
    return w;
}

Code::Code(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) {
        n_ = 0;
        q_ = 0;
        return;
    }
    n_ = words_[0].n();
    q_ = words_[0].q();
    for (const Word& w : words_)
        if (w.n() != n_ || w.q() != q_)
            throw std::invalid_argument("codewords differ in length or alphabet");
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw std::invalid_argument("duplicate codeword");
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

Code Code::translated(const Word& x) const {
    std::vector<Word> out;
    out.reserve(words_.size());
    for (const Word& w : words_) out.push_back(w + x);
    return Code(std::move(out));
}

Code Code::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty code file");
    int q = 0, n = 0;
    if (std::sscanf(header.c_str(), "q=%d n=%d", &q, &n) != 2)
        throw std::invalid_argument("malformed code file header (expected 'q=<q> n=<n>')");
    if (n < 1) throw std::invalid_argument("code file declares n < 1");
    check_alphabet(q);
    std::vector<Word> words;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (static_cast<int>(line.size()) != n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(n) + " digits");
        Word w = Word::parse(line, q);
        words.push_back(std::move(w));
    }
    return Code(std::move(words));
}

Code Code::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    return read(in);
}

void Code::write(std::ostream& out) const {
    out << "q=" << q_ << " n=" << n_ << "\n";
    for (const Word& w : words_) out << w.str() << "\n";
}

void Code::write_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write(out);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

BigInt ball_size(int t, int r, int n, int q) {
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    check_alphabet(q);
    if (n < 1) throw std::invalid_argument("length must be at least 1");
    if (r < 0 || r > n) throw std::domain_error("radius must be in [0,n]");
    BigInt qt_minus_1 = 1;
    for (int i = 0; i < t; ++i) qt_minus_1 *= q;
    qt_minus_1 -= 1;
    BigInt sum = 0;
    BigInt pw = 1;
    for (int i = 0; i <= r; ++i) {
        sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * pw;
        pw *= qt_minus_1;
    }
    return sum;
}

WordStream::WordStream(int n, int q, std::uint64_t start)
    : digits_(static_cast<std::size_t>(n), 0), position_(start), total_(space_size(n, q)), q_(q) {
    if (n < 1) throw std::invalid_argument("word length must be at least 1");
    if (start > total_) throw std::invalid_argument("start index out of range");
    if (start > 0 && start < total_) {
        std::uint64_t idx = start;
        for (int i = n - 1; i >= 0; --i) {
            digits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % q);
            idx /= static_cast<std::uint64_t>(q);
        }
    }
}

Word WordStream::next() {
    if (done()) throw std::out_of_range("word stream exhausted");
    Word w(digits_, q_);
    ++position_;
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
        auto& d = digits_[static_cast<std::size_t>(i)];
        if (++d < q_) break;
        d = 0;
    }
    return w;
}

MatrixStream::MatrixStream(int t, int n, int q, std::uint64_t start)
    : digits_(static_cast<std::size_t>(t) * static_cast<std::size_t>(n), 0),
      position_(start),
      total_(space_size(t * n, q)),
      t_(t),
      n_(n),
      q_(q) {
    if (t < 1 || n < 1) throw std::invalid_argument("matrix shape must be at least 1x1");
    if (start > total_) throw std::invalid_argument("start index out of range");
    if (start > 0 && start < total_) {
        std::uint64_t idx = start;
        for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
            digits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % q);
            idx /= static_cast<std::uint64_t>(q);
        }
    }
}

MatrixWord MatrixStream::next() {
    if (done()) throw std::out_of_range("matrix stream exhausted");
    std::vector<Word> rows;
    rows.reserve(static_cast<std::size_t>(t_));
    for (int i = 0; i < t_; ++i) {
        std::vector<std::uint8_t> row(digits_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                                      digits_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
        rows.emplace_back(std::move(row), q_);
    }
    ++position_;
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
        auto& d = digits_[static_cast<std::size_t>(i)];
        if (++d < q_) break;
        d = 0;
    }
    return MatrixWord(std::move(rows));
}

}  // namespace gencover
