#ifndef NPLAB_PATHS_HPP
#define NPLAB_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "multiset.hpp"
#include "plucker.hpp"
#include "poly.hpp"
#include "words.hpp"

namespace nplab {

/// Edge (from, to, generator) of the multigraph on V = {1..m}; it stands
/// for the variable A[from,to,gen].
struct Edge {
  unsigned from = 0;
  unsigned to = 0;
  unsigned gen = 0;

  VarId var() const { return VarId::edge(from, to, gen); }
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Edge &e) {
  return os << '(' << e.from << ',' << e.to << ',' << e.gen << ')';
}

/// Labeled path v_0 -> v_1 -> ... -> v_len through the word with index
/// `label` (1-based); step k uses generator f_label(k).
struct Path {
  std::size_t label = 1;
  std::vector<unsigned> vertices;

  unsigned initial() const { return vertices.front(); }
  unsigned terminal() const { return vertices.back(); }

  friend auto operator<=>(const Path &, const Path &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Path &p) {
  os << "[" << p.label << ":";
  for (std::size_t k = 0; k < p.vertices.size(); ++k)
    os << (k ? "->" : "") << p.vertices[k];
  return os << "]";
}

using PathCollection = Multiset<Path>;
using EdgeMultiset = Multiset<Edge>;

inline const Word &word_of(const WordSystem &ws, std::size_t label) {
  if (label == 0 || label > ws.n())
    throw std::out_of_range("path label out of range");
  return ws.words[label - 1];
}

inline void check_path(const WordSystem &ws, const Path &p) {
  const Word &w = word_of(ws, p.label);
  if (p.vertices.size() != w.length() + 1)
    throw std::invalid_argument("path: vertex count must be word length + 1");
  for (unsigned v : p.vertices)
    if (v == 0 || v > ws.m) throw std::invalid_argument("path: vertex out of range");
}

inline std::vector<Edge> path_edges(const WordSystem &ws, const Path &p) {
  check_path(ws, p);
  const Word &w = word_of(ws, p.label);
  std::vector<Edge> edges;
  edges.reserve(w.length());
  for (std::size_t k = 0; k < w.length(); ++k)
    edges.push_back({p.vertices[k], p.vertices[k + 1], w.letters[k]});
  return edges;
}

/// F(P).
inline EdgeMultiset edge_multiset(const WordSystem &ws, const Path &p) {
  return EdgeMultiset::from_items(path_edges(ws, p));
}

/// F(collection) = sum over paths of F(P), with multiplicity.
inline EdgeMultiset edge_multiset(const WordSystem &ws, const PathCollection &pc) {
  return msum(pc, [&](const Path &p) { return edge_multiset(ws, p); });
}

/// 1-based column <t, l> of psi's output.
inline std::size_t path_column(const WordSystem &ws, const Path &p) {
  return psi_column(ws.m, p.terminal(), p.label) + 1;
}

/// Decodes a 1-based column into (t, l).
inline std::pair<std::size_t, std::size_t> decode_column(const WordSystem &ws,
                                                         std::size_t col) {
  if (col == 0 || col > ws.width())
    throw std::invalid_argument("column index out of range");
  return {(col - 1) % ws.m + 1, (col - 1) / ws.m + 1};
}

/// All paths with the given label; optionally fixed initial/terminal vertex.
/// With both fixed there are m^(len-1) of them.
inline std::vector<Path> enumerate_paths(const WordSystem &ws, std::size_t label,
                                         std::optional<unsigned> initial = {},
                                         std::optional<unsigned> terminal = {}) {
  const Word &w = word_of(ws, label);
  const unsigned m = static_cast<unsigned>(ws.m);
  if ((initial && (*initial == 0 || *initial > m)) ||
      (terminal && (*terminal == 0 || *terminal > m)))
    throw std::invalid_argument("enumerate_paths: vertex out of range");
  std::vector<Path> out;
  Path p;
  p.label = label;
  p.vertices.assign(w.length() + 1, 1);
  auto rec = [&](auto &&self, std::size_t k) -> void {
    if (k == p.vertices.size()) {
      out.push_back(p);
      return;
    }
    unsigned lo = 1, hi = m;
    if (k == 0 && initial) lo = hi = *initial;
    if (k + 1 == p.vertices.size() && terminal) lo = hi = *terminal;
    for (unsigned v = lo; v <= hi; ++v) {
      p.vertices[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// [p_l(X)]_{i,t} as the sum over paths from i to t with label l of the
/// product of their edge variables.
inline Poly path_sum_entry(const WordSystem &ws, unsigned i, unsigned t,
                           std::size_t label) {
  Poly total;
  for (const auto &p : enumerate_paths(ws, label, i, t)) {
    Monomial mono;
    for (const auto &e : path_edges(ws, p)) mono.add(e.var());
    total.add_term(mono, Rat(1));
  }
  return total;
}

/// d(collection) = (I, J) as multisets of rows and 1-based columns.
struct PathIndex {
  Multiset<std::size_t> rows;
  Multiset<std::size_t> cols;

  /// True iff both are sets of equal nonzero size, i.e. (I, J) lies in D.
  bool in_D() const {
    return rows.is_set() && cols.is_set() && !rows.empty() &&
           rows.cardinality() == cols.cardinality();
  }

  MinorIndex as_minor() const {
    MinorIndex d;
    for (const auto &[i, n] : rows) d.rows.push_back(i);
    for (const auto &[j, n] : cols) d.cols.push_back(j);
    return d;
  }
};

inline PathIndex collection_index(const WordSystem &ws, const PathCollection &pc) {
  PathIndex d;
  for (const auto &[p, n] : pc) {
    d.rows.add(p.initial(), n);
    d.cols.add(path_column(ws, p), n);
  }
  return d;
}

inline void check_minor(const WordSystem &ws, const MinorIndex &d) {
  if (d.rows.empty() || d.rows.size() != d.cols.size())
    throw std::invalid_argument("minor index: #I must equal #J >= 1");
  for (std::size_t k = 0; k < d.rows.size(); ++k) {
    if (d.rows[k] == 0 || d.rows[k] > ws.m || (k && d.rows[k - 1] >= d.rows[k]))
      throw std::invalid_argument("minor index: malformed row set");
    if (d.cols[k] == 0 || d.cols[k] > ws.width() ||
        (k && d.cols[k - 1] >= d.cols[k]))
      throw std::invalid_argument("minor index: malformed column index");
  }
}

/// Labels l with column <i, l> in J, for row i.
inline std::vector<std::size_t> labels_at(const WordSystem &ws,
                                          const MinorIndex &d, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t col : d.cols) {
    auto [t, l] = decode_column(ws, col);
    if (t == i) out.push_back(l);
  }
  return out;
}

/// f(d): over rows i in I that have some column <i, l> in J, the sum of the
/// shortest such word length.
inline std::size_t f_value(const WordSystem &ws, const MinorIndex &d) {
  check_minor(ws, d);
  std::size_t total = 0;
  for (std::size_t i : d.rows) {
    auto ls = labels_at(ws, d, i);
    if (ls.empty()) continue;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto l : ls) best = std::min(best, word_of(ws, l).length());
    total += best;
  }
  return total;
}

/// The collection of paths used to order D: row i with a column <i, l> in J
/// loops at i along the shortest such word; the remaining rows are matched
/// to the remaining columns in increasing order, each path looping at i and
/// stepping to its terminal vertex on the last letter.
inline PathCollection lemma_witness(const WordSystem &ws, const MinorIndex &d) {
  check_minor(ws, d);
  std::vector<std::size_t> unused_cols = d.cols;
  std::vector<std::size_t> unmatched_rows;
  std::vector<std::pair<std::size_t, std::size_t>> assignment; // row -> col
  for (std::size_t i : d.rows) {
    auto ls = labels_at(ws, d, i);
    if (ls.empty()) {
      unmatched_rows.push_back(i);
      continue;
    }
    std::size_t best = ls.front();
    for (auto l : ls)
      if (word_of(ws, l).length() < word_of(ws, best).length()) best = l;
    std::size_t col = psi_column(ws.m, i, best) + 1;
    assignment.emplace_back(i, col);
    unused_cols.erase(std::find(unused_cols.begin(), unused_cols.end(), col));
  }
  if (unused_cols.size() != unmatched_rows.size())
    throw std::logic_error("lemma_witness: no bijective extension");
  for (std::size_t k = 0; k < unmatched_rows.size(); ++k)
    assignment.emplace_back(unmatched_rows[k], unused_cols[k]);

  PathCollection pc;
  for (auto [i, col] : assignment) {
    auto [t, l] = decode_column(ws, col);
    Path p;
    p.label = l;
    p.vertices.assign(word_of(ws, l).length() + 1, static_cast<unsigned>(i));
    p.vertices.back() = static_cast<unsigned>(t);
    pc.add(p);
  }
  return pc;
}

namespace detail {

/// Every path whose edge multiset fits inside `avail` and uses `required`.
inline std::vector<Path> paths_within(const WordSystem &ws, const EdgeMultiset &avail,
                                      const Edge &required) {
  std::vector<Path> out;
  const unsigned m = static_cast<unsigned>(ws.m);
  for (std::size_t label = 1; label <= ws.n(); ++label) {
    const Word &w = ws.words[label - 1];
    Path p;
    p.label = label;
    p.vertices.assign(w.length() + 1, 0);
    EdgeMultiset left = avail;
    auto rec = [&](auto &&self, std::size_t k, bool used) -> void {
      if (k == w.length()) {
        if (used) out.push_back(p);
        return;
      }
      for (unsigned v = 1; v <= m; ++v) {
        Edge e{p.vertices[k], v, w.letters[k]};
        if (left.count(e) == 0) continue;
        left.remove(e);
        p.vertices[k + 1] = v;
        self(self, k + 1, used || e == required);
        left.add(e);
      }
    };
    for (unsigned v0 = 1; v0 <= m; ++v0) {
      p.vertices[0] = v0;
      rec(rec, 0, false);
    }
  }
  return out;
}

} // namespace detail

/// All collections of paths whose total edge multiset equals `target`.
/// Throws budget_exceeded if more than `budget` partial collections are
/// visited.
inline std::set<PathCollection>
collections_with_edges(const WordSystem &ws, const EdgeMultiset &target,
                       std::size_t budget = 1'000'000) {
  std::set<PathCollection> found;
  std::size_t visited = 0;
  PathCollection current;
  auto rec = [&](auto &&self, const EdgeMultiset &left) -> void {
    if (++visited > budget)
      throw budget_exceeded("collections_with_edges: budget of " +
                            std::to_string(budget) + " exceeded");
    if (left.empty()) {
      found.insert(current);
      return;
    }
    // Some path must cover the smallest remaining edge.
    const Edge first = left.begin()->first;
    for (const auto &p : detail::paths_within(ws, left, first)) {
      EdgeMultiset rest = left;
      for (const auto &e : path_edges(ws, p)) rest.remove(e);
      current.add(p);
      self(self, rest);
      current.remove(p);
    }
  };
  rec(rec, target);
  return found;
}

struct LemmaCheck {
  bool holds = true;
  std::size_t f_d = 0;
  PathCollection witness;
  std::size_t collections = 0;
  /// First alternative collection with d' in D and f(d') >= f(d).
  std::optional<PathCollection> counterexample;
};

/// Checks the ordering property at d: every other collection with the same
/// edge multiset as lemma_witness(d) and index in D has strictly smaller f.
inline LemmaCheck check_lemma(const WordSystem &ws, const MinorIndex &d,
                              std::size_t budget = 1'000'000) {
  LemmaCheck r;
  r.f_d = f_value(ws, d);
  r.witness = lemma_witness(ws, d);
  auto all = collections_with_edges(ws, edge_multiset(ws, r.witness), budget);
  r.collections = all.size();
  for (const auto &pc : all) {
    if (pc == r.witness) continue;
    PathIndex idx = collection_index(ws, pc);
    if (!idx.in_D()) continue;
    if (f_value(ws, idx.as_minor()) >= r.f_d) {
      r.holds = false;
      r.counterexample = pc;
      break;
    }
  }
  return r;
}

inline bool verify_lemma(const WordSystem &ws, const MinorIndex &d,
                         std::size_t budget = 1'000'000) {
  return check_lemma(ws, d, budget).holds;
}

} // namespace nplab

#endif // NPLAB_PATHS_HPP
