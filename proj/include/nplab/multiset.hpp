#ifndef NPLAB_MULTISET_HPP
#define NPLAB_MULTISET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nplab {

/// Finite multiset over a totally ordered item type.
///
/// Stored as a flat vector of (item, count) pairs sorted by item with every
/// count >= 1, so two equal multisets always have identical storage. That
/// makes the type usable directly as a map key (monomials, edge multisets).
template <typename Item>
class Multiset {
public:
  using item_type = Item;
  using count_type = std::uint32_t;
  using entry = std::pair<Item, count_type>;
  using const_iterator = typename std::vector<entry>::const_iterator;

  Multiset() = default;

  Multiset(std::initializer_list<entry> init) {
    for (const auto &[item, n] : init) add(item, n);
  }

  /// Multiset with each element of the range counted once per occurrence.
  template <typename Range>
  static Multiset from_items(const Range &items) {
    Multiset s;
    for (const auto &it : items) s.add(it, 1);
    return s;
  }

  /// Characteristic multiset of a set (all counts 1).
  static Multiset from_set(const std::set<Item> &items) {
    Multiset s;
    s.entries_.reserve(items.size());
    for (const auto &it : items) s.entries_.emplace_back(it, 1);
    return s;
  }

  void add(const Item &item, count_type n = 1) {
    if (n == 0) return;
    auto pos = lower(item);
    if (pos != entries_.end() && pos->first == item) {
      pos->second += n;
    } else {
      entries_.insert(pos, entry(item, n));
    }
  }

  /// Removes n copies; throws if fewer than n are present.
  void remove(const Item &item, count_type n = 1) {
    if (n == 0) return;
    auto pos = lower(item);
    if (pos == entries_.end() || !(pos->first == item) || pos->second < n)
      throw std::invalid_argument("Multiset::remove: not enough copies");
    pos->second -= n;
    if (pos->second == 0) entries_.erase(pos);
  }

  count_type count(const Item &item) const {
    auto pos = std::lower_bound(
        entries_.begin(), entries_.end(), item,
        [](const entry &e, const Item &x) { return e.first < x; });
    return (pos != entries_.end() && pos->first == item) ? pos->second : 0;
  }

  std::size_t cardinality() const {
    std::size_t total = 0;
    for (const auto &e : entries_) total += e.second;
    return total;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  std::set<Item> support() const {
    std::set<Item> s;
    for (const auto &e : entries_) s.insert(e.first);
    return s;
  }

  /// True iff every count is at most one, i.e. the multiset is a set.
  bool is_set() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const entry &e) { return e.second == 1; });
  }

  /// Pointwise comparison S <= T.
  bool is_submultiset_of(const Multiset &other) const {
    auto it = other.entries_.begin();
    for (const auto &e : entries_) {
      while (it != other.entries_.end() && it->first < e.first) ++it;
      if (it == other.entries_.end() || !(it->first == e.first) ||
          it->second < e.second)
        return false;
    }
    return true;
  }

  Multiset &operator+=(const Multiset &other) {
    std::vector<entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) {
        merged.push_back(*a++);
      } else if (b->first < a->first) {
        merged.push_back(*b++);
      } else {
        merged.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    merged.insert(merged.end(), a, entries_.end());
    merged.insert(merged.end(), b, other.entries_.end());
    entries_ = std::move(merged);
    return *this;
  }

  friend Multiset operator+(Multiset lhs, const Multiset &rhs) {
    lhs += rhs;
    return lhs;
  }

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }
  const std::vector<entry> &entries() const { return entries_; }

  friend bool operator==(const Multiset &, const Multiset &) = default;
  friend auto operator<=>(const Multiset &a, const Multiset &b) {
    return a.entries_ <=> b.entries_;
  }

  /// Canonical text "{item:count,...}" sorted by item.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto &[item, n] : entries_) {
      if (!first) os << ',';
      first = false;
      os << item << ':' << n;
    }
    os << '}';
    return os.str();
  }

private:
  typename std::vector<entry>::iterator lower(const Item &item) {
    return std::lower_bound(
        entries_.begin(), entries_.end(), item,
        [](const entry &e, const Item &x) { return e.first < x; });
  }

  std::vector<entry> entries_;
};

template <typename Item>
typename Multiset<Item>::count_type count(const Multiset<Item> &s,
                                          const Item &i) {
  return s.count(i);
}

template <typename Item>
std::size_t cardinality(const Multiset<Item> &s) {
  return s.cardinality();
}

template <typename Item>
bool is_submultiset(const Multiset<Item> &s, const Multiset<Item> &t) {
  return s.is_submultiset_of(t);
}

template <typename Item>
std::set<Item> support(const Multiset<Item> &s) {
  return s.support();
}

/// Weighted sum over S of the family T: the count of j in the result is
/// sum_i count(S, i) * count(T(i), j). Throws if T has no member for some
/// item in the support of S.
template <typename I, typename J>
Multiset<J> msum(const Multiset<I> &s, const std::map<I, Multiset<J>> &family) {
  Multiset<J> out;
  for (const auto &[i, n] : s) {
    auto it = family.find(i);
    if (it == family.end())
      throw std::out_of_range("msum: family has no member for an item of S");
    for (const auto &[j, k] : it->second) out.add(j, n * k);
  }
  return out;
}

/// Same as above with the family given as a callable I -> Multiset<J>.
template <typename I, typename F>
auto msum(const Multiset<I> &s, F &&family)
    -> Multiset<typename std::invoke_result_t<F, const I &>::item_type> {
  using J = typename std::invoke_result_t<F, const I &>::item_type;
  Multiset<J> out;
  for (const auto &[i, n] : s) {
    const auto &t = family(i);
    for (const auto &[j, k] : t) out.add(j, n * k);
  }
  return out;
}

} // namespace nplab

#endif // NPLAB_MULTISET_HPP
