#ifndef NPLAB_WORDS_HPP
#define NPLAB_WORDS_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace nplab {

/// Noncommutative monomial x_{f(1)} ... x_{f(len)}; letters are 1-based
/// generator indices.
struct Word {
  std::vector<unsigned> letters;

  Word() = default;
  Word(std::initializer_list<unsigned> l) : letters(l) {}
  explicit Word(std::vector<unsigned> l) : letters(std::move(l)) {}

  std::size_t length() const { return letters.size(); }

  /// "x1*x2^2" form; consecutive repeats collapse into powers.
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < letters.size();) {
      std::size_t run = 1;
      while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
      if (!s.empty()) s += '*';
      s += 'x' + std::to_string(letters[k]);
      if (run > 1) s += '^' + std::to_string(run);
      k += run;
    }
    return s;
  }

  friend Word operator*(const Word &a, const Word &b) {
    Word w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }

  friend auto operator<=>(const Word &, const Word &) = default;
};

/// The data (m, r, p_1..p_n) defining psi(X_1..X_r) = p_1(X) (+) ... (+) p_n(X).
struct WordSystem {
  std::size_t m = 1;
  unsigned r = 1;
  std::vector<Word> words;

  std::size_t n() const { return words.size(); }
  std::size_t width() const { return m * words.size(); }

  /// Throws std::invalid_argument unless the invariants hold.
  void validate() const {
    if (m == 0) throw std::invalid_argument("WordSystem: m must be >= 1");
    if (r == 0) throw std::invalid_argument("WordSystem: r must be >= 1");
    if (words.empty())
      throw std::invalid_argument("WordSystem: at least one word is required");
    for (const auto &w : words) {
      if (w.letters.empty())
        throw std::invalid_argument("WordSystem: empty word");
      for (unsigned q : w.letters)
        if (q == 0 || q > r)
          throw std::invalid_argument("WordSystem: letter out of range 1..r");
    }
  }

  std::string to_string() const {
    std::string s;
    for (const auto &w : words) {
      if (!s.empty()) s += "; ";
      s += w.to_string();
    }
    return s;
  }

  friend bool operator==(const WordSystem &, const WordSystem &) = default;
};

/// Exponent vector of the commutative image of w, length r.
inline std::vector<unsigned> abelianize(const Word &w, unsigned r) {
  std::vector<unsigned> exps(r, 0);
  for (unsigned q : w.letters) {
    if (q == 0 || q > r)
      throw std::invalid_argument("abelianize: letter out of range 1..r");
    ++exps[q - 1];
  }
  return exps;
}

inline bool distinct_abelianizations(const WordSystem &ws) {
  std::set<std::vector<unsigned>> seen;
  for (const auto &w : ws.words)
    if (!seen.insert(abelianize(w, ws.r)).second) return false;
  return true;
}

/// Ordered product X_{f(1)} ... X_{f(len)}.
template <typename T>
DenseMatrix<T> evaluate_word(const Word &w, std::span<const DenseMatrix<T>> xs) {
  if (w.letters.empty()) throw std::invalid_argument("evaluate_word: empty word");
  if (xs.empty()) throw std::invalid_argument("evaluate_word: no matrices");
  const std::size_t m = xs.front().rows();
  for (const auto &x : xs)
    if (x.rows() != m || x.cols() != m)
      throw std::invalid_argument("evaluate_word: matrices must be square of equal size");
  for (unsigned q : w.letters)
    if (q == 0 || q > xs.size())
      throw std::invalid_argument("evaluate_word: letter out of range");
  DenseMatrix<T> acc = xs[w.letters.front() - 1];
  for (std::size_t k = 1; k < w.letters.size(); ++k)
    acc = matmul(acc, xs[w.letters[k] - 1]);
  return acc;
}

template <typename T>
DenseMatrix<T> evaluate_word(const Word &w, const std::vector<DenseMatrix<T>> &xs) {
  return evaluate_word(w, std::span<const DenseMatrix<T>>(xs));
}

/// The r generic m x m matrices X_1..X_r.
inline std::vector<PolyMatrix> generic_matrices(std::size_t m, unsigned r) {
  std::vector<PolyMatrix> xs;
  xs.reserve(r);
  for (unsigned q = 1; q <= r; ++q) xs.push_back(generic_matrix(m, q));
  return xs;
}

/// 0-based column of (t, l) with both 1-based: block l spans m columns.
inline std::size_t psi_column(std::size_t m, std::size_t t, std::size_t l) {
  return (l - 1) * m + (t - 1);
}

/// Symbolic psi(X_1..X_r) as an m x (m n) matrix; block l is p_l(X).
inline PolyMatrix build_psi(const WordSystem &ws) {
  ws.validate();
  auto xs = generic_matrices(ws.m, ws.r);
  PolyMatrix out(ws.m, ws.width());
  for (std::size_t l = 0; l < ws.n(); ++l) {
    PolyMatrix block = evaluate_word(ws.words[l], xs);
    for (std::size_t i = 0; i < ws.m; ++i)
      for (std::size_t t = 0; t < ws.m; ++t)
        out(i, psi_column(ws.m, t + 1, l + 1)) = std::move(block(i, t));
  }
  return out;
}

/// All words x_1^{n_1} ... x_r^{n_r} with 1 <= sum n_k <= n, graded by total
/// degree and descending lexicographic on the exponent vector within a
/// degree (x1, x2, x1^2, x1*x2, x2^2 for n = r = 2).
inline WordSystem veronese_system(std::size_t m, unsigned n, unsigned r) {
  if (m == 0 || n == 0 || r == 0)
    throw std::invalid_argument("veronese_system: m, n, r must be >= 1");
  WordSystem ws;
  ws.m = m;
  ws.r = r;
  std::vector<unsigned> exps(r, 0);
  for (unsigned deg = 1; deg <= n; ++deg) {
    // Enumerate compositions of deg into r parts in descending lex order.
    std::vector<std::vector<unsigned>> comps;
    auto rec = [&](auto &&self, unsigned k, unsigned left) -> void {
      if (k + 1 == r) {
        exps[k] = left;
        comps.push_back(exps);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        exps[k] = e;
        self(self, k + 1, left - e);
      }
    };
    rec(rec, 0, deg);
    for (const auto &c : comps) {
      Word w;
      for (unsigned q = 0; q < r; ++q)
        w.letters.insert(w.letters.end(), c[q], q + 1);
      ws.words.push_back(std::move(w));
    }
  }
  return ws;
}

namespace detail {

class WordParser {
public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Word> parse() {
    std::vector<Word> words;
    words.push_back(word());
    while (accept(';')) words.push_back(word());
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return words;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw parse_error("words: " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned integer() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 100000) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return static_cast<unsigned>(v);
  }

  Word word() {
    Word w;
    factor(w);
    while (accept('*')) factor(w);
    return w;
  }

  void factor(Word &w) {
    skip_ws();
    if (!accept('x')) fail("expected 'x'");
    std::size_t index_pos = pos_;
    unsigned q = integer();
    if (q == 0) {
      pos_ = index_pos;
      fail("indices start at 1");
    }
    unsigned power = 1;
    if (accept('^')) {
      std::size_t power_pos = pos_;
      power = integer();
      if (power == 0) {
        pos_ = power_pos;
        fail("power must be >= 1");
      }
    }
    w.letters.insert(w.letters.end(), power, q);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses "x1; x1^2" style word lists. When r is 0 it is inferred as the
/// largest index used; otherwise indices above r are rejected.
inline WordSystem parse_words(std::string_view text, std::size_t m,
                              unsigned r = 0) {
  WordSystem ws;
  ws.m = m;
  ws.words = detail::WordParser(text).parse();
  unsigned max_letter = 0;
  for (const auto &w : ws.words)
    for (unsigned q : w.letters) max_letter = std::max(max_letter, q);
  if (r == 0) {
    ws.r = max_letter;
  } else {
    if (max_letter > r)
      throw std::invalid_argument("words: generator index x" +
                                  std::to_string(max_letter) +
                                  " exceeds r = " + std::to_string(r));
    ws.r = r;
  }
  ws.validate();
  return ws;
}

} // namespace nplab

#endif // NPLAB_WORDS_HPP
