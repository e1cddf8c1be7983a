#ifndef NPLAB_GROEBNER_HPP
#define NPLAB_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace nplab {

/// Monomial order on the listed variables; variables.front() is the
/// largest. Every polynomial handed to the Gröbner routines must only use
/// listed variables.
struct TermOrder {
  enum class Kind {
    GRevLex,
    Lex,
    /// grevlex on all but the last variable, ties broken by the degree of
    /// the last one. Eliminates everything except the last variable.
    EliminateAllButLast,
  };

  Kind kind = Kind::GRevLex;
  std::vector<VarId> variables;

  static TermOrder grevlex(std::vector<VarId> vars) {
    return {Kind::GRevLex, std::move(vars)};
  }
  static TermOrder lex(std::vector<VarId> vars) {
    return {Kind::Lex, std::move(vars)};
  }

  /// Variables occurring in the inputs, in canonical VarId order.
  static std::vector<VarId> collect(const std::vector<Poly> &polys) {
    std::set<VarId> vs;
    for (const auto &p : polys) {
      auto pv = p.variables();
      vs.insert(pv.begin(), pv.end());
    }
    return {vs.begin(), vs.end()};
  }
};

namespace gb {

using Exponent = std::vector<int>;

struct Term {
  Exponent exp;
  Rat coef;
};

/// Terms sorted strictly descending in the active order.
using Polynomial = std::vector<Term>;

class Ring {
public:
  explicit Ring(TermOrder order) : order_(std::move(order)) {
    for (std::size_t k = 0; k < order_.variables.size(); ++k) {
      if (!index_.emplace(order_.variables[k], k).second)
        throw std::invalid_argument("TermOrder: duplicate variable");
    }
  }

  const TermOrder &order() const { return order_; }
  std::size_t nvars() const { return order_.variables.size(); }

  /// <0, 0, >0 like strcmp, in the active order.
  int compare(const Exponent &a, const Exponent &b) const {
    switch (order_.kind) {
    case TermOrder::Kind::Lex:
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    case TermOrder::Kind::GRevLex:
      return grevlex(a, b, a.size());
    case TermOrder::Kind::EliminateAllButLast: {
      const std::size_t n = a.size();
      if (n == 0) return 0;
      if (int c = grevlex(a, b, n - 1)) return c;
      if (a[n - 1] != b[n - 1]) return a[n - 1] > b[n - 1] ? 1 : -1;
      return 0;
    }
    }
    return 0;
  }

  Polynomial from_poly(const Poly &p) const {
    Polynomial out;
    out.reserve(p.size());
    for (const auto &[mono, c] : p.terms()) {
      Exponent e(nvars(), 0);
      for (const auto &[v, k] : mono) {
        auto it = index_.find(v);
        if (it == index_.end())
          throw std::invalid_argument("groebner: variable " + v.to_string() +
                                      " is not in the term order");
        e[it->second] = static_cast<int>(k);
      }
      out.push_back({std::move(e), c});
    }
    sort(out);
    return out;
  }

  Poly to_poly(const Polynomial &p) const {
    Poly out;
    for (const auto &t : p) {
      Monomial mono;
      for (std::size_t k = 0; k < t.exp.size(); ++k)
        if (t.exp[k] > 0)
          mono.add(order_.variables[k], static_cast<unsigned>(t.exp[k]));
      out.add_term(mono, t.coef);
    }
    return out;
  }

  void sort(Polynomial &p) const {
    std::sort(p.begin(), p.end(), [&](const Term &a, const Term &b) {
      return compare(a.exp, b.exp) > 0;
    });
  }

  /// a - c * x^shift * b.
  Polynomial sub_mul(const Polynomial &a, const Rat &c, const Exponent &shift,
                     const Polynomial &b) const {
    Polynomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Exponent e(shift.size());
    auto shifted = [&](std::size_t idx) {
      for (std::size_t k = 0; k < shift.size(); ++k)
        e[k] = shift[k] + b[idx].exp[k];
    };
    if (j < b.size()) shifted(j);
    while (i < a.size() || j < b.size()) {
      int cmp = (j >= b.size()) ? 1 : (i >= a.size()) ? -1 : compare(a[i].exp, e);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({e, -c * b[j].coef});
        if (++j < b.size()) shifted(j);
      } else {
        Rat v = a[i].coef - c * b[j].coef;
        if (v != 0) out.push_back({a[i].exp, std::move(v)});
        ++i;
        if (++j < b.size()) shifted(j);
      }
    }
    return out;
  }

  static bool divides(const Exponent &a, const Exponent &b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > b[k]) return false;
    return true;
  }

  static Exponent lcm(const Exponent &a, const Exponent &b) {
    Exponent out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
    return out;
  }

  static Exponent quotient(const Exponent &a, const Exponent &b) {
    Exponent out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
  }

  static bool coprime(const Exponent &a, const Exponent &b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0 && b[k] > 0) return false;
    return true;
  }

  static bool is_constant(const Exponent &a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
  }

  static void make_monic(Polynomial &p) {
    if (p.empty() || p.front().coef == 1) return;
    Rat inv = 1 / p.front().coef;
    for (auto &t : p) t.coef *= inv;
  }

  /// Full reduction of f modulo basis (every term, not only the leading one).
  Polynomial reduce(Polynomial f, const std::vector<Polynomial> &basis) const {
    Polynomial rem;
    while (!f.empty()) {
      bool reduced = false;
      for (const auto &g : basis) {
        if (g.empty() || !divides(g.front().exp, f.front().exp)) continue;
        Rat c = f.front().coef / g.front().coef;
        f = sub_mul(f, c, quotient(f.front().exp, g.front().exp), g);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.push_back(std::move(f.front()));
        f.erase(f.begin());
      }
    }
    return rem;
  }

  Polynomial spoly(const Polynomial &f, const Polynomial &g) const {
    Exponent l = lcm(f.front().exp, g.front().exp);
    Polynomial a = sub_mul({}, Rat(-1) / f.front().coef,
                           quotient(l, f.front().exp), f);
    return sub_mul(a, Rat(1) / g.front().coef, quotient(l, g.front().exp), g);
  }

private:
  static int grevlex(const Exponent &a, const Exponent &b, std::size_t n) {
    long da = 0, db = 0;
    for (std::size_t k = 0; k < n; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = n; k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    return 0;
  }

  TermOrder order_;
  std::map<VarId, std::size_t> index_;
};

} // namespace gb

struct GroebnerLimits {
  std::size_t max_pairs = 200'000;
  std::size_t max_basis = 5'000;
};

/// Reduced, monic Gröbner basis, sorted by ascending leading monomial.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Poly> generators;

  bool is_unit_ideal() const {
    return generators.size() == 1 && generators.front() == Poly(1);
  }
};

namespace detail {

inline std::vector<gb::Polynomial>
buchberger_internal(const gb::Ring &ring, std::vector<gb::Polynomial> gens,
                    const GroebnerLimits &limits) {
  using gb::Exponent;
  using gb::Ring;
  std::vector<gb::Polynomial> basis;
  std::vector<bool> active;
  struct Pair {
    std::size_t i, j;
    Exponent lcm;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto unit = [&]() {
    gb::Polynomial one{{Exponent(ring.nvars(), 0), Rat(1)}};
    return std::vector<gb::Polynomial>{one};
  };

  auto add = [&](gb::Polynomial g) -> bool {
    Ring::make_monic(g);
    if (Ring::is_constant(g.front().exp)) return true;
    std::size_t idx = basis.size();
    if (idx >= limits.max_basis)
      throw budget_exceeded("buchberger: basis size exceeds " +
                            std::to_string(limits.max_basis));
    for (std::size_t k = 0; k < idx; ++k) {
      if (!active[k]) continue;
      pairs.push_back({k, idx, Ring::lcm(basis[k].front().exp, g.front().exp)});
      pending.insert({k, idx});
    }
    // Elements whose leading term is now redundant stay for pair
    // bookkeeping but are dropped from the final basis.
    basis.push_back(std::move(g));
    active.push_back(true);
    return false;
  };

  for (auto &g : gens) {
    g = ring.reduce(std::move(g), basis);
    if (g.empty()) continue;
    if (add(std::move(g))) return unit();
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first; ties by insertion order.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it)
      if (ring.compare(it->lcm, best->lcm) < 0) best = it;
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});
    if (++processed > limits.max_pairs)
      throw budget_exceeded("buchberger: pair budget of " +
                            std::to_string(limits.max_pairs) + " exceeded");

    const auto &f = basis[p.i];
    const auto &g = basis[p.j];
    // Buchberger's first criterion: coprime leading terms.
    if (Ring::coprime(f.front().exp, g.front().exp)) continue;
    // Second criterion: some k with LT_k | lcm and both (i,k), (j,k)
    // already treated.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!Ring::divides(basis[k].front().exp, p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k)))
        chain = true;
    }
    if (chain) continue;

    gb::Polynomial h = ring.reduce(ring.spoly(f, g), basis);
    if (h.empty()) continue;
    if (add(std::move(h))) return unit();
  }

  // Minimalize then interreduce.
  std::vector<gb::Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (Ring::divides(basis[j].front().exp, basis[i].front().exp)) {
        // Equal leading terms: keep the earlier one.
        if (basis[j].front().exp != basis[i].front().exp || j < i)
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<gb::Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<gb::Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    gb::Polynomial tail(minimal[i].begin() + 1, minimal[i].end());
    gb::Polynomial r = ring.reduce(std::move(tail), others);
    r.insert(r.begin(), minimal[i].front());
    gb::Ring::make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const gb::Polynomial &a, const gb::Polynomial &b) {
              return ring.compare(a.front().exp, b.front().exp) < 0;
            });
  return reduced;
}

} // namespace detail

/// Reduced Gröbner basis of the ideal generated by gens. Zero generators
/// are ignored; the zero ideal yields an empty basis.
inline GroebnerBasis buchberger(const std::vector<Poly> &gens,
                                const TermOrder &order,
                                const GroebnerLimits &limits = {}) {
  gb::Ring ring(order);
  std::vector<gb::Polynomial> in;
  for (const auto &g : gens)
    if (!g.is_zero()) in.push_back(ring.from_poly(g));
  GroebnerBasis out;
  out.order = order;
  for (const auto &g : detail::buchberger_internal(ring, std::move(in), limits))
    out.generators.push_back(ring.to_poly(g));
  return out;
}

/// Same, with grevlex on the variables that occur.
inline GroebnerBasis buchberger(const std::vector<Poly> &gens,
                                const GroebnerLimits &limits = {}) {
  return buchberger(gens, TermOrder::grevlex(TermOrder::collect(gens)), limits);
}

/// Remainder of f on division by the basis (fully reduced).
inline Poly normal_form(const Poly &f, const GroebnerBasis &basis) {
  auto vars = basis.order.variables;
  std::set<VarId> known(vars.begin(), vars.end());
  for (const auto &v : f.variables())
    if (!known.count(v)) vars.push_back(v);
  TermOrder order{basis.order.kind, vars};
  // Variables foreign to the basis cannot be divided out; appending them
  // keeps the order a valid extension for grevlex and lex.
  if (order.kind == TermOrder::Kind::EliminateAllButLast && vars.size() != basis.order.variables.size())
    throw std::invalid_argument("normal_form: foreign variable under an elimination order");
  gb::Ring ring(order);
  std::vector<gb::Polynomial> g;
  for (const auto &p : basis.generators) g.push_back(ring.from_poly(p));
  return ring.to_poly(ring.reduce(ring.from_poly(f), g));
}

inline bool ideal_member(const Poly &f, const GroebnerBasis &basis) {
  return normal_form(f, basis).is_zero();
}

/// v in sqrt(I) via 1 in I + <1 - t v> with a fresh variable t.
inline bool radical_member(const VarId &v, const std::vector<Poly> &gens,
                           const GroebnerLimits &limits = {}) {
  std::vector<Poly> all = gens;
  std::set<VarId> used;
  for (const auto &g : gens) {
    auto vs = g.variables();
    used.insert(vs.begin(), vs.end());
  }
  unsigned fresh = 0;
  while (used.count(VarId::aux(fresh))) ++fresh;
  const VarId t = VarId::aux(fresh);
  all.push_back(Poly(1) - Poly::var(t) * Poly::var(v));
  auto vars = TermOrder::collect(all);
  GroebnerBasis basis = buchberger(all, TermOrder::grevlex(vars), limits);
  return basis.is_unit_ideal();
}

/// Independent route: with an order ranking pure powers of v below every
/// other monomial, I ∩ Q[v] is generated by the basis elements in v alone,
/// and some power of v lies in I iff that generator is itself a power of v.
inline bool radical_member_elimination(const VarId &v, const std::vector<Poly> &gens,
                                       const GroebnerLimits &limits = {}) {
  auto vars = TermOrder::collect(gens);
  vars.erase(std::remove(vars.begin(), vars.end(), v), vars.end());
  vars.push_back(v);
  GroebnerBasis basis = buchberger(
      gens, TermOrder{TermOrder::Kind::EliminateAllButLast, vars}, limits);
  for (const auto &g : basis.generators) {
    auto gv = g.variables();
    if (gv.empty() || (gv.size() == 1 && *gv.begin() == v)) {
      // Monic generator of the elimination ideal: a power of v iff it has a
      // single term.
      return g.size() == 1;
    }
  }
  return false;
}

} // namespace nplab

#endif // NPLAB_GROEBNER_HPP
