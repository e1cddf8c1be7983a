#ifndef NPLAB_RATIONAL_HPP
#define NPLAB_RATIONAL_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nplab {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const BigInt &num, const BigInt &den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// "3", "-7/4", "0.125", "-2.5e-3" -> exact rational. Throws
/// std::invalid_argument on anything else.
inline Rat parse_rat(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("parse_rat: empty input");

  auto digits_only = [](std::string_view v) {
    if (v.empty()) return false;
    for (char ch : v)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
      throw std::invalid_argument("parse_rat: malformed fraction '" + s + "'");
    value = make_rat(BigInt(std::string(num)), BigInt(std::string(den)));
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = std::string(body.substr(e + 1));
      std::size_t used = 0;
      try {
        exponent = std::stol(exp_text, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != exp_text.size() || exp_text.empty())
        throw std::invalid_argument("parse_rat: malformed exponent in '" + s +
                                    "'");
      body = body.substr(0, e);
    }
    std::string int_part(body), frac_part;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      int_part = std::string(body.substr(0, dot));
      frac_part = std::string(body.substr(dot + 1));
    }
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("parse_rat: malformed number '" + s + "'");
    if ((!int_part.empty() && !digits_only(int_part)) ||
        (!frac_part.empty() && !digits_only(frac_part)))
      throw std::invalid_argument("parse_rat: malformed number '" + s + "'");
    BigInt num(int_part.empty() ? std::string("0") : int_part);
    BigInt den = 1;
    for (char ch : frac_part) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                  static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0)
      num *= ten_pow;
    else
      den *= ten_pow;
    value = make_rat(num, den);
  }
  return negative ? Rat(-value) : value;
}

/// Shortest exact text: "3", "-1/2".
inline std::string to_string(const Rat &q) { return q.get_str(); }

} // namespace nplab

#endif // NPLAB_RATIONAL_HPP
