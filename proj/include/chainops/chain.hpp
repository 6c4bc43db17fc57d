#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainops/errors.hpp"

namespace chainops {

/// Elements of L_k are the integers 1..k.
using Element = int;
using Tuple = std::vector<Element>;

/// Lexicographic index of an argument tuple, first argument most significant.
using TupleCode = std::size_t;

/// Largest table (k^n cells) the library will allocate.
inline constexpr std::size_t kMaxTableCells = std::size_t{1} << 26;

/// The chain L_k = {1, ..., k} with its natural order.
class FiniteChain {
 public:
  explicit FiniteChain(int k);

  int size() const noexcept { return k_; }
  bool contains(Element x) const noexcept { return x >= 1 && x <= k_; }

  /// Throws DomainError naming `what` when x is not in 1..k.
  void require(Element x, const std::string& what = "element") const;

  friend bool operator==(const FiniteChain&, const FiniteChain&) = default;

 private:
  int k_;
};

Element meet(std::span<const Element> xs);
Element join(std::span<const Element> xs);

/// k^n, throwing ResourceError once it passes `limit`.
std::size_t checked_power(int k, int n, std::size_t limit = kMaxTableCells);

TupleCode encode_tuple(const FiniteChain& chain, int n, std::span<const Element> tuple);
Tuple decode_tuple(const FiniteChain& chain, int n, TupleCode code);

namespace detail {

inline TupleCode encode_unchecked(int k, std::span<const Element> tuple) noexcept {
  TupleCode code = 0;
  for (Element x : tuple) code = code * static_cast<TupleCode>(k) + static_cast<TupleCode>(x - 1);
  return code;
}

/// Writes the digits of `code` into `out` (size n), 1-based.
inline void decode_into(int k, TupleCode code, std::span<Element> out) noexcept {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(code % static_cast<TupleCode>(k)) + 1;
    code /= static_cast<TupleCode>(k);
  }
}

/// Advances a tuple over 1..k in lexicographic order; returns false after the last tuple.
inline bool next_tuple(int k, std::span<Element> t) noexcept {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < k) {
      ++t[i];
      return true;
    }
    t[i] = 1;
  }
  return false;
}

}  // namespace detail

/// A total n-ary operation on L_k stored densely in TupleCode order. Immutable.
class OpTable {
 public:
  OpTable(FiniteChain chain, int arity, std::vector<Element> values);

  /// Tabulates f over every tuple in code order.
  static OpTable tabulate(FiniteChain chain, int arity,
                          const std::function<Element(std::span<const Element>)>& f);

  const FiniteChain& chain() const noexcept { return chain_; }
  int k() const noexcept { return chain_.size(); }
  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Element>& values() const noexcept { return values_; }

  Element at(TupleCode code) const noexcept { return values_[code]; }

  /// Validated evaluation.
  Element operator()(std::span<const Element> tuple) const;
  Element operator()(std::initializer_list<Element> tuple) const {
    return (*this)(std::span<const Element>(tuple.begin(), tuple.size()));
  }

  /// Unvalidated evaluation for inner loops.
  Element eval(std::span<const Element> tuple) const noexcept {
    return values_[detail::encode_unchecked(chain_.size(), tuple)];
  }

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  FiniteChain chain_;
  int arity_;
  std::vector<Element> values_;
};

/// An alternative total order a_1 < a_2 < ... < a_k on L_k, stored with its inverse.
class LinearOrdering {
 public:
  LinearOrdering(FiniteChain chain, std::vector<Element> seq);

  static LinearOrdering natural(const FiniteChain& chain);

  const FiniteChain& chain() const noexcept { return chain_; }
  const std::vector<Element>& seq() const noexcept { return seq_; }

  /// 1-based position of x in the ordering.
  int rank(Element x) const { return rank_[static_cast<std::size_t>(x - 1)]; }
  bool leq(Element x, Element y) const;
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  Element minimum() const noexcept { return seq_.front(); }
  /// The larger of x and y under this ordering.
  Element max_of(Element x, Element y) const { return rank(x) >= rank(y) ? x : y; }

  friend bool operator==(const LinearOrdering& a, const LinearOrdering& b) {
    return a.chain_ == b.chain_ && a.seq_ == b.seq_;
  }

 private:
  FiniteChain chain_;
  std::vector<Element> seq_;
  std::vector<int> rank_;
};

/// Nonincreasing g: {1..e} -> {e..k} with g(e) = e, parameterizing idempotent uninorms with neutral e.
class GMap {
 public:
  /// values[i] = g(i + 1).
  GMap(FiniteChain chain, Element e, std::vector<Element> values);

  /// Reason the data fails to form a g-map, or nullopt when valid.
  static std::optional<std::string> check(const FiniteChain& chain, Element e,
                                          const std::vector<Element>& values);

  const FiniteChain& chain() const noexcept { return chain_; }
  Element neutral() const noexcept { return e_; }
  const std::vector<Element>& values() const noexcept { return g_; }
  Element operator()(Element x) const;

  friend bool operator==(const GMap&, const GMap&) = default;

 private:
  FiniteChain chain_;
  Element e_;
  std::vector<Element> g_;
};

std::string format_tuple(std::span<const Element> t);

}  // namespace chainops
