#include "chainops/chain.hpp"

#include <algorithm>
#include <sstream>

namespace chainops {

FiniteChain::FiniteChain(int k) : k_(k) {
  if (k < 1) throw DomainError("chain size must be at least 1, got " + std::to_string(k));
}

void FiniteChain::require(Element x, const std::string& what) const {
  if (!contains(x)) {
    throw DomainError(what + " = " + std::to_string(x) + " is outside 1.." + std::to_string(k_));
  }
}

Element meet(std::span<const Element> xs) { return *std::min_element(xs.begin(), xs.end()); }
Element join(std::span<const Element> xs) { return *std::max_element(xs.begin(), xs.end()); }

std::size_t checked_power(int k, int n, std::size_t limit) {
  if (n < 0) throw DomainError("negative exponent");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > limit / static_cast<std::size_t>(k)) {
      throw ResourceError(std::to_string(k) + "^" + std::to_string(n) + " exceeds the bound " +
                          std::to_string(limit));
    }
    r *= static_cast<std::size_t>(k);
  }
  return r;
}

TupleCode encode_tuple(const FiniteChain& chain, int n, std::span<const Element> tuple) {
  if (static_cast<int>(tuple.size()) != n) {
    throw DomainError("tuple has length " + std::to_string(tuple.size()) + ", expected " +
                      std::to_string(n));
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    chain.require(tuple[i], "entry " + std::to_string(i + 1));
  }
  return detail::encode_unchecked(chain.size(), tuple);
}

Tuple decode_tuple(const FiniteChain& chain, int n, TupleCode code) {
  const std::size_t count = checked_power(chain.size(), n);
  if (code >= count) {
    throw DomainError("code " + std::to_string(code) + " is outside [0, " + std::to_string(count) +
                      ")");
  }
  Tuple t(static_cast<std::size_t>(n));
  detail::decode_into(chain.size(), code, t);
  return t;
}

OpTable::OpTable(FiniteChain chain, int arity, std::vector<Element> values)
    : chain_(chain), arity_(arity), values_(std::move(values)) {
  if (arity < 1) throw ConstructionError("arity must be at least 1");
  const std::size_t expected = checked_power(chain_.size(), arity_);
  if (values_.size() != expected) {
    throw ConstructionError("table has " + std::to_string(values_.size()) + " values, expected " +
                            std::to_string(expected));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!chain_.contains(values_[i])) {
      throw ConstructionError("value " + std::to_string(values_[i]) + " at code " +
                              std::to_string(i) + " is outside 1.." +
                              std::to_string(chain_.size()));
    }
  }
}

OpTable OpTable::tabulate(FiniteChain chain, int arity,
                          const std::function<Element(std::span<const Element>)>& f) {
  if (arity < 1) throw ConstructionError("arity must be at least 1");
  const std::size_t count = checked_power(chain.size(), arity);
  std::vector<Element> values;
  values.reserve(count);
  Tuple t(static_cast<std::size_t>(arity), 1);
  do {
    values.push_back(f(t));
  } while (detail::next_tuple(chain.size(), t));
  return OpTable(chain, arity, std::move(values));
}

Element OpTable::operator()(std::span<const Element> tuple) const {
  return values_[encode_tuple(chain_, arity_, tuple)];
}

LinearOrdering::LinearOrdering(FiniteChain chain, std::vector<Element> seq)
    : chain_(chain), seq_(std::move(seq)), rank_(static_cast<std::size_t>(chain.size()), 0) {
  if (static_cast<int>(seq_.size()) != chain_.size()) {
    throw ConstructionError("ordering lists " + std::to_string(seq_.size()) +
                            " elements, expected " + std::to_string(chain_.size()));
  }
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    const Element x = seq_[i];
    if (!chain_.contains(x)) {
      throw ConstructionError("ordering entry " + std::to_string(x) + " is outside 1.." +
                              std::to_string(chain_.size()));
    }
    int& r = rank_[static_cast<std::size_t>(x - 1)];
    if (r != 0) throw ConstructionError("ordering repeats " + std::to_string(x));
    r = static_cast<int>(i) + 1;
  }
}

LinearOrdering LinearOrdering::natural(const FiniteChain& chain) {
  std::vector<Element> seq(static_cast<std::size_t>(chain.size()));
  for (int i = 0; i < chain.size(); ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  return LinearOrdering(chain, std::move(seq));
}

bool LinearOrdering::leq(Element x, Element y) const {
  chain_.require(x, "x");
  chain_.require(y, "y");
  return rank(x) <= rank(y);
}

std::optional<std::string> GMap::check(const FiniteChain& chain, Element e,
                                       const std::vector<Element>& values) {
  if (!chain.contains(e)) return "neutral element " + std::to_string(e) + " is outside the chain";
  if (static_cast<int>(values.size()) != e) {
    return "g must list " + std::to_string(e) + " values, got " + std::to_string(values.size());
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < e || values[i] > chain.size()) {
      return "g(" + std::to_string(i + 1) + ") = " + std::to_string(values[i]) + " is outside " +
             std::to_string(e) + ".." + std::to_string(chain.size());
    }
    if (i > 0 && values[i] > values[i - 1]) {
      return "g is increasing between " + std::to_string(i) + " and " + std::to_string(i + 1);
    }
  }
  if (values.back() != e) return "g(e) = " + std::to_string(values.back()) + " differs from e";
  return std::nullopt;
}

GMap::GMap(FiniteChain chain, Element e, std::vector<Element> values)
    : chain_(chain), e_(e), g_(std::move(values)) {
  if (auto why = check(chain_, e_, g_)) throw ConstructionError("invalid g-map: " + *why);
}

Element GMap::operator()(Element x) const {
  if (x < 1 || x > e_) {
    throw DomainError("g is defined on 1.." + std::to_string(e_) + ", got " + std::to_string(x));
  }
  return g_[static_cast<std::size_t>(x - 1)];
}

std::string format_tuple(std::span<const Element> t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace chainops
