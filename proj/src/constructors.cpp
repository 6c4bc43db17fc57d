#include "chainops/constructors.hpp"

#include <algorithm>
#include <array>

#include "chainops/properties.hpp"

namespace chainops {
namespace {

void require_binary(const OpTable& t, const char* who) {
  if (t.arity() != 2) {
    throw PreconditionError(std::string(who) + " needs a binary table, got arity " +
                            std::to_string(t.arity()));
  }
}

void require_arity_at_least(int n, int least, const char* who) {
  if (n < least) {
    throw PreconditionError(std::string(who) + " needs n >= " + std::to_string(least) + ", got " +
                            std::to_string(n));
  }
}

void require_property(const PropertyReport& r, const char* who) {
  if (!r.holds) throw PreconditionError(std::string(who) + ": input is not " + r.name);
}

}  // namespace

OpTable max_wrt(const LinearOrdering& ord, int n) {
  require_arity_at_least(n, 1, "max_wrt");
  return OpTable::tabulate(ord.chain(), n, [&](std::span<const Element> t) {
    Element best = t[0];
    for (Element x : t.subspan(1)) best = ord.max_of(best, x);
    return best;
  });
}

OpTable lift_binary(const OpTable& binary, int n) {
  require_binary(binary, "lift_binary");
  require_arity_at_least(n, 2, "lift_binary");
  return OpTable::tabulate(binary.chain(), n, [&](std::span<const Element> t) {
    const Element lo = meet(t), hi = join(t);
    return binary.eval(std::array<Element, 2>{lo, hi});
  });
}

OpTable reduce_binary(const OpTable& op) {
  const int n = op.arity();
  require_arity_at_least(n, 2, "reduce_binary");
  Tuple t(static_cast<std::size_t>(n));
  return OpTable::tabulate(op.chain(), 2, [&](std::span<const Element> xy) {
    std::fill(t.begin(), t.end() - 1, xy[0]);
    t.back() = xy[1];
    return op.eval(t);
  });
}

LinearOrdering order_from_binary(const OpTable& binary) {
  require_binary(binary, "order_from_binary");
  require_property(is_quasitrivial(binary), "order_from_binary");
  require_property(is_associative(binary), "order_from_binary");
  const int k = binary.k();
  auto related = [&](Element x, Element y) { return binary.eval(std::array<Element, 2>{x, y}) == y; };
  auto pair = [](Element x, Element y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };

  for (Element x = 1; x <= k; ++x) {
    for (Element y = x + 1; y <= k; ++y) {
      const bool xy = related(x, y), yx = related(y, x);
      if (!xy && !yx) throw StructureError("relation H(x,y)=y is not total at " + pair(x, y));
      if (xy && yx) throw StructureError("relation H(x,y)=y is not antisymmetric at " + pair(x, y));
    }
  }
  for (Element x = 1; x <= k; ++x) {
    for (Element y = 1; y <= k; ++y) {
      for (Element z = 1; z <= k; ++z) {
        if (related(x, y) && related(y, z) && !related(x, z)) {
          throw StructureError("relation H(x,y)=y is not transitive at (" + std::to_string(x) + "," +
                               std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  std::vector<Element> seq(static_cast<std::size_t>(k));
  for (Element x = 1; x <= k; ++x) {
    int below = 0;
    for (Element y = 1; y <= k; ++y) below += (y != x && related(y, x)) ? 1 : 0;
    seq[static_cast<std::size_t>(below)] = x;
  }
  return LinearOrdering(binary.chain(), std::move(seq));
}

std::vector<LinearOrdering> enumerate_single_peaked(const FiniteChain& chain) {
  const int k = chain.size();
  std::vector<LinearOrdering> out;
  std::vector<Element> seq;
  seq.reserve(static_cast<std::size_t>(k));
  // The chosen set is always the interval [lo, hi].
  auto extend = [&](auto&& self, Element lo, Element hi) -> void {
    if (static_cast<int>(seq.size()) == k) {
      out.emplace_back(chain, seq);
      return;
    }
    if (lo > 1) {
      seq.push_back(lo - 1);
      self(self, lo - 1, hi);
      seq.pop_back();
    }
    if (hi < k) {
      seq.push_back(hi + 1);
      self(self, lo, hi + 1);
      seq.pop_back();
    }
  };
  for (Element a1 = 1; a1 <= k; ++a1) {
    seq.assign(1, a1);
    extend(extend, a1, a1);
  }
  return out;
}

ContourPlot contour_construct(const FiniteChain& chain, int n, const std::vector<bool>& choices) {
  require_arity_at_least(n, 1, "contour_construct");
  const int k = chain.size();
  if (static_cast<int>(choices.size()) != k - 1) {
    throw PreconditionError("contour_construct needs " + std::to_string(k - 1) +
                            " choice bits, got " + std::to_string(choices.size()));
  }
  const auto downward = std::count(choices.begin(), choices.end(), false);
  const Element a1 = 1 + static_cast<Element>(downward);

  std::vector<Element> seq{a1};
  Element lo = a1, hi = a1;
  for (bool up : choices) seq.push_back(up ? ++hi : --lo);
  LinearOrdering ord(chain, seq);

  const std::size_t count = checked_power(k, n);
  std::vector<Element> values(count, 0);
  std::vector<ContourClass> classes;
  // Step i adds C_i^n \ C_{i-1}^n: tuples inside the current interval not yet valued.
  Tuple t(static_cast<std::size_t>(n));
  lo = hi = a1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Element a = seq[i];
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    ContourClass cls{a, {}};
    for (TupleCode c = 0; c < count; ++c) {
      if (values[c] != 0) continue;
      detail::decode_into(k, c, t);
      if (std::all_of(t.begin(), t.end(), [&](Element x) { return x >= lo && x <= hi; })) {
        values[c] = a;
        cls.points.push_back(c);
      }
    }
    classes.push_back(std::move(cls));
  }
  return ContourPlot{OpTable(chain, n, std::move(values)), std::move(ord), std::move(classes)};
}

std::vector<bool> contour_choices(const LinearOrdering& ord) {
  if (!is_single_peaked(ord).holds) {
    throw PreconditionError("contour_choices needs a single-peaked ordering");
  }
  std::vector<bool> bits;
  Element lo = ord.seq().front();
  for (std::size_t i = 1; i < ord.seq().size(); ++i) {
    const Element a = ord.seq()[i];
    bits.push_back(a > lo);
    lo = std::min(lo, a);
  }
  return bits;
}

std::vector<Element> gbar(const GMap& gm) {
  const int k = gm.chain().size();
  const Element e = gm.neutral();
  const Element g1 = gm(1);
  std::vector<Element> out(static_cast<std::size_t>(k));
  for (Element x = 1; x <= k; ++x) {
    Element v;
    if (x <= e) {
      v = gm(x);
    } else if (x <= g1) {
      // z = 1 always qualifies here since g(1) >= x.
      v = 1;
      for (Element z = 1; z <= e; ++z) {
        if (gm(z) >= x) v = z;
      }
    } else {
      v = 1;
    }
    out[static_cast<std::size_t>(x - 1)] = v;
  }
  return out;
}

OpTable from_gmap(const GMap& gm, int n) {
  require_arity_at_least(n, 2, "from_gmap");
  const auto ext = gbar(gm);
  auto bar = [&](Element x) { return ext[static_cast<std::size_t>(x - 1)]; };
  return OpTable::tabulate(gm.chain(), n, [&](std::span<const Element> t) {
    const Element lo = meet(t), hi = join(t);
    return (hi <= bar(lo) && lo <= bar(1)) ? lo : hi;
  });
}

GMap gmap_of(const OpTable& op) {
  require_arity_at_least(op.arity(), 2, "gmap_of");
  for (auto* check : {&is_idempotent, &is_symmetric, &is_nondecreasing, &is_associative}) {
    require_property(check(op), "gmap_of");
  }
  const auto neutral = neutral_elements(op);
  if (neutral.empty()) throw PreconditionError("gmap_of: input has no neutral element");
  const Element e = neutral.front();
  const int n = op.arity();
  Tuple t(static_cast<std::size_t>(n));
  std::vector<Element> g(static_cast<std::size_t>(e));
  for (Element x = 1; x <= e; ++x) {
    Element best = e;
    for (Element y = 1; y <= op.k(); ++y) {
      std::fill(t.begin(), t.end() - 1, x);
      t.back() = y;
      if (op.eval(t) == x) best = std::max(best, y);
    }
    g[static_cast<std::size_t>(x - 1)] = (x == e) ? e : best;
  }
  return GMap(op.chain(), e, std::move(g));
}

std::vector<GMap> enumerate_gmaps(const FiniteChain& chain, Element e) {
  chain.require(e, "neutral element");
  std::vector<GMap> out;
  std::vector<Element> g(static_cast<std::size_t>(e));
  g.back() = e;
  // Fill g(e-1), ..., g(1) right to left, each at least its right neighbour.
  auto fill = [&](auto&& self, int idx) -> void {
    if (idx < 0) {
      out.emplace_back(chain, e, g);
      return;
    }
    const Element floor = g[static_cast<std::size_t>(idx) + 1];
    for (Element v = floor; v <= chain.size(); ++v) {
      g[static_cast<std::size_t>(idx)] = v;
      self(self, idx - 1);
    }
  };
  fill(fill, e - 2);
  std::sort(out.begin(), out.end(),
            [](const GMap& a, const GMap& b) { return a.values() < b.values(); });
  return out;
}

OpTable iterate_binary(const OpTable& binary, int n) {
  require_binary(binary, "iterate_binary");
  require_arity_at_least(n, 2, "iterate_binary");
  require_property(is_associative(binary), "iterate_binary");
  return OpTable::tabulate(binary.chain(), n, [&](std::span<const Element> t) {
    Element acc = t[0];
    for (Element x : t.subspan(1)) acc = binary.eval(std::array<Element, 2>{acc, x});
    return acc;
  });
}

OpTable neutral_reduction(const OpTable& op) {
  const int n = op.arity();
  require_arity_at_least(n, 2, "neutral_reduction");
  require_property(is_associative(op), "neutral_reduction");
  const auto neutral = neutral_elements(op);
  if (neutral.empty()) throw PreconditionError("neutral_reduction: input has no neutral element");
  const Element e = neutral.front();
  Tuple t(static_cast<std::size_t>(n), e);
  return OpTable::tabulate(op.chain(), 2, [&](std::span<const Element> xy) {
    t.front() = xy[0];
    t.back() = xy[1];
    return op.eval(t);
  });
}

}  // namespace chainops
