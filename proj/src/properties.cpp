#include "chainops/properties.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace chainops {
namespace {

PropertyReport pass(std::string name) { return PropertyReport{std::move(name), true, std::nullopt}; }

PropertyReport fail(std::string name, Witness w) {
  return PropertyReport{std::move(name), false, std::move(w)};
}

Tuple repeated(int count, Element x) { return Tuple(static_cast<std::size_t>(count), x); }

// F applied to x_1..x_{2n-1} with the inner block starting at 1-based position i.
Element nested(const OpTable& op, std::span<const Element> x, int i, Tuple& inner, Tuple& outer) {
  const int n = op.arity();
  const auto start = static_cast<std::size_t>(i - 1);
  std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(start), n, inner.begin());
  std::size_t o = 0;
  for (std::size_t j = 0; j < start; ++j) outer[o++] = x[j];
  outer[o++] = op.eval(inner);
  for (std::size_t j = start + static_cast<std::size_t>(n); j < x.size(); ++j) outer[o++] = x[j];
  return op.eval(outer);
}

std::uint64_t matrix_count(const OpTable& op, const MatrixGuard& guard, const char* what) {
  const int cells = op.arity() * op.arity();
  try {
    return checked_power(op.k(), cells, static_cast<std::size_t>(guard.max_matrices));
  } catch (const ResourceError&) {
    throw ResourceError(std::string(what) + " scan needs " + std::to_string(op.k()) + "^" +
                        std::to_string(cells) + " matrices, above the bound of " +
                        std::to_string(guard.max_matrices));
  }
}

// Row route F(F(r_1),...,F(r_n)) of a row-major n x n matrix.
Element row_route(const OpTable& op, std::span<const Element> m, Tuple& agg) {
  const auto n = static_cast<std::size_t>(op.arity());
  for (std::size_t r = 0; r < n; ++r) agg[r] = op.eval(m.subspan(r * n, n));
  return op.eval(agg);
}

Element column_route(const OpTable& op, std::span<const Element> m, Tuple& col, Tuple& agg) {
  const auto n = static_cast<std::size_t>(op.arity());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) col[r] = m[r * n + c];
    agg[c] = op.eval(col);
  }
  return op.eval(agg);
}

bool threshold_exists(const OpTable& op, Element x, Element y) {
  const int n = op.arity();
  Tuple t(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    std::fill(t.begin(), t.begin() + (j - 1), x);
    std::fill(t.begin() + (j - 1), t.end(), y);
    if (op.eval(t) != y) continue;
    std::fill(t.begin(), t.begin() + j, x);
    std::fill(t.begin() + j, t.end(), y);
    if (op.eval(t) == x) return true;
  }
  return false;
}

void join_list(std::ostream& os, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
}

bool in_tuple(std::span<const Element> t, Element v) {
  return std::find(t.begin(), t.end(), v) != t.end();
}

}  // namespace

std::string PropertyReport::to_line() const {
  std::ostringstream os;
  os << "PROP " << name << (holds ? " HOLDS" : " FAILS");
  if (witness) {
    if (!witness->tuples.empty()) {
      os << " args=";
      for (std::size_t i = 0; i < witness->tuples.size(); ++i) {
        os << (i ? "/" : "") << format_tuple(witness->tuples[i]);
      }
    }
    if (!witness->positions.empty()) {
      os << " at=";
      join_list(os, witness->positions);
    }
    if (!witness->values.empty()) {
      os << " got=";
      join_list(os, witness->values);
    }
  }
  return os.str();
}

PropertyReport is_idempotent(const OpTable& op) {
  for (Element x = 1; x <= op.k(); ++x) {
    Tuple t = repeated(op.arity(), x);
    const Element v = op.eval(t);
    if (v != x) return fail("idempotent", Witness{{t}, {v}, {}});
  }
  return pass("idempotent");
}

PropertyReport is_quasitrivial(const OpTable& op) {
  Tuple t(static_cast<std::size_t>(op.arity()), 1);
  TupleCode code = 0;
  do {
    const Element v = op.at(code);
    if (!in_tuple(t, v)) return fail("quasitrivial", Witness{{t}, {v}, {}});
    ++code;
  } while (detail::next_tuple(op.k(), t));
  return pass("quasitrivial");
}

PropertyReport is_symmetric(const OpTable& op) {
  Tuple t(static_cast<std::size_t>(op.arity()), 1);
  Tuple sorted(t.size());
  TupleCode code = 0;
  do {
    sorted = t;
    std::sort(sorted.begin(), sorted.end());
    const Element a = op.eval(sorted);
    const Element b = op.at(code);
    if (a != b) return fail("symmetric", Witness{{sorted, t}, {a, b}, {}});
    ++code;
  } while (detail::next_tuple(op.k(), t));
  return pass("symmetric");
}

PropertyReport is_nondecreasing(const OpTable& op) {
  Tuple t(static_cast<std::size_t>(op.arity()), 1);
  Tuple up(t.size());
  TupleCode code = 0;
  do {
    const Element v = op.at(code);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] == op.k()) continue;
      up = t;
      ++up[i];
      const Element w = op.eval(up);
      if (w < v) {
        return fail("nondecreasing", Witness{{t, up}, {v, w}, {static_cast<int>(i) + 1}});
      }
    }
    ++code;
  } while (detail::next_tuple(op.k(), t));
  return pass("nondecreasing");
}

PropertyReport is_associative(const OpTable& op) {
  const int n = op.arity();
  if (n < 2) return pass("associative");
  Tuple x(static_cast<std::size_t>(2 * n - 1), 1);
  Tuple inner(static_cast<std::size_t>(n)), outer(static_cast<std::size_t>(n));
  do {
    Element prev = nested(op, x, 1, inner, outer);
    for (int i = 1; i < n; ++i) {
      const Element next = nested(op, x, i + 1, inner, outer);
      if (prev != next) return fail("associative", Witness{{x}, {prev, next}, {i}});
      prev = next;
    }
  } while (detail::next_tuple(op.k(), x));
  return pass("associative");
}

PropertyReport is_bisymmetric(const OpTable& op, MatrixGuard guard) {
  matrix_count(op, guard, "bisymmetry");
  const auto n = static_cast<std::size_t>(op.arity());
  Tuple m(n * n, 1), agg(n), col(n);
  do {
    const Element a = row_route(op, m, agg);
    const Element b = column_route(op, m, col, agg);
    if (a != b) return fail("bisymmetric", Witness{{m}, {a, b}, {}});
  } while (detail::next_tuple(op.k(), m));
  return pass("bisymmetric");
}

PropertyReport is_ultrabisymmetric(const OpTable& op, MatrixGuard guard) {
  matrix_count(op, guard, "ultrabisymmetry");
  const auto n = static_cast<std::size_t>(op.arity());
  const std::size_t cells = n * n;
  Tuple m(cells, 1), rows(n), swapped_rows(n);
  do {
    for (std::size_t r = 0; r < n; ++r) rows[r] = op.eval(std::span<const Element>(m).subspan(r * n, n));
    const Element base = op.eval(rows);
    for (std::size_t p = 0; p < cells; ++p) {
      for (std::size_t q = p + 1; q < cells; ++q) {
        if (m[p] == m[q]) continue;
        std::swap(m[p], m[q]);
        swapped_rows = rows;
        const std::size_t rp = p / n, rq = q / n;
        swapped_rows[rp] = op.eval(std::span<const Element>(m).subspan(rp * n, n));
        swapped_rows[rq] = op.eval(std::span<const Element>(m).subspan(rq * n, n));
        const Element after = op.eval(swapped_rows);
        std::swap(m[p], m[q]);
        if (after != base) {
          Tuple swapped = m;
          std::swap(swapped[p], swapped[q]);
          return fail("ultrabisymmetric",
                      Witness{{m, swapped}, {base, after},
                              {static_cast<int>(p) + 1, static_cast<int>(q) + 1}});
        }
      }
    }
  } while (detail::next_tuple(op.k(), m));
  return pass("ultrabisymmetric");
}

PropertyReport is_surjective(const OpTable& op) {
  std::vector<bool> hit(static_cast<std::size_t>(op.k()), false);
  for (Element v : op.values()) hit[static_cast<std::size_t>(v - 1)] = true;
  for (Element y = 1; y <= op.k(); ++y) {
    if (!hit[static_cast<std::size_t>(y - 1)]) return fail("surjective", Witness{{}, {y}, {}});
  }
  return pass("surjective");
}

std::vector<Element> neutral_elements(const OpTable& op) {
  const int n = op.arity();
  std::vector<Element> out;
  Tuple t(static_cast<std::size_t>(n));
  for (Element e = 1; e <= op.k(); ++e) {
    bool ok = true;
    for (Element x = 1; x <= op.k() && ok; ++x) {
      for (int i = 0; i < n && ok; ++i) {
        std::fill(t.begin(), t.end(), e);
        t[static_cast<std::size_t>(i)] = x;
        ok = op.eval(t) == x;
      }
    }
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<Tuple> isolated_points(const OpTable& op) {
  std::vector<std::size_t> count(static_cast<std::size_t>(op.k()), 0);
  for (Element v : op.values()) ++count[static_cast<std::size_t>(v - 1)];
  std::vector<Tuple> out;
  for (TupleCode c = 0; c < op.size(); ++c) {
    if (count[static_cast<std::size_t>(op.at(c) - 1)] == 1) {
      out.push_back(decode_tuple(op.chain(), op.arity(), c));
    }
  }
  return out;
}

PropertyReport check_threshold_switch(const OpTable& op) {
  if (!is_quasitrivial(op).holds) {
    throw PreconditionError("threshold switch check requires a quasitrivial operation");
  }
  for (Element x = 1; x <= op.k(); ++x) {
    for (Element y = 1; y <= op.k(); ++y) {
      if (!threshold_exists(op, x, y)) return fail("threshold_switch", Witness{{{x, y}}, {}, {}});
    }
  }
  return pass("threshold_switch");
}

PropertyReport is_single_peaked(const LinearOrdering& ord) {
  const int k = ord.chain().size();
  for (Element a = 1; a <= k; ++a) {
    for (Element b = a + 1; b <= k; ++b) {
      for (Element c = b + 1; c <= k; ++c) {
        if (ord.rank(b) > ord.rank(a) && ord.rank(b) > ord.rank(c)) {
          return fail("single_peaked", Witness{{{a, b, c}}, {}, {}});
        }
      }
    }
  }
  return pass("single_peaked");
}

PropertyReport single_peaked_via_convexity(const LinearOrdering& ord) {
  const int k = ord.chain().size();
  for (Element t = 1; t <= k; ++t) {
    auto in_down_set = [&](Element x) { return ord.rank(x) <= ord.rank(t); };
    for (Element a = 1; a <= k; ++a) {
      if (!in_down_set(a)) continue;
      for (Element c = a + 2; c <= k; ++c) {
        if (!in_down_set(c)) continue;
        for (Element b = a + 1; b < c; ++b) {
          if (!in_down_set(b)) {
            return fail("single_peaked_convexity", Witness{{{a, b, c}}, {t}, {}});
          }
        }
      }
    }
  }
  return pass("single_peaked_convexity");
}

PropertyReport single_peaked_via_sisd(const LinearOrdering& ord) {
  const int k = ord.chain().size();
  const Element x0 = ord.minimum();
  for (Element x1 = 1; x1 <= k; ++x1) {
    for (Element x2 = 1; x2 <= k; ++x2) {
      const bool between = (x0 < x1 && x1 < x2) || (x2 < x1 && x1 < x0);
      if (between && !(ord.rank(x1) < ord.rank(x2))) {
        return fail("single_peaked_sisd", Witness{{{x0, x1, x2}}, {}, {}});
      }
    }
  }
  return pass("single_peaked_sisd");
}

bool replay_witness(const OpTable& op, const PropertyReport& report) {
  if (report.holds || !report.witness) return false;
  const Witness& w = *report.witness;
  const std::string& name = report.name;
  const auto& chain = op.chain();
  auto valid = [&](const Tuple& t, int len) {
    if (static_cast<int>(t.size()) != len) return false;
    return std::all_of(t.begin(), t.end(), [&](Element x) { return chain.contains(x); });
  };
  const int n = op.arity();

  if (name == "idempotent") {
    if (w.tuples.size() != 1 || !valid(w.tuples[0], n)) return false;
    const Tuple& t = w.tuples[0];
    if (std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) != t.end()) return false;
    return op.eval(t) != t[0];
  }
  if (name == "quasitrivial") {
    if (w.tuples.size() != 1 || !valid(w.tuples[0], n)) return false;
    return !in_tuple(w.tuples[0], op.eval(w.tuples[0]));
  }
  if (name == "symmetric") {
    if (w.tuples.size() != 2 || !valid(w.tuples[0], n) || !valid(w.tuples[1], n)) return false;
    if (!std::is_permutation(w.tuples[0].begin(), w.tuples[0].end(), w.tuples[1].begin())) return false;
    return op.eval(w.tuples[0]) != op.eval(w.tuples[1]);
  }
  if (name == "nondecreasing") {
    if (w.tuples.size() != 2 || !valid(w.tuples[0], n) || !valid(w.tuples[1], n)) return false;
    for (int i = 0; i < n; ++i) {
      if (w.tuples[0][static_cast<std::size_t>(i)] > w.tuples[1][static_cast<std::size_t>(i)]) return false;
    }
    return op.eval(w.tuples[0]) > op.eval(w.tuples[1]);
  }
  if (name == "associative") {
    if (n < 2 || w.tuples.size() != 1 || w.positions.size() != 1) return false;
    if (!valid(w.tuples[0], 2 * n - 1)) return false;
    const int i = w.positions[0];
    if (i < 1 || i >= n) return false;
    Tuple inner(static_cast<std::size_t>(n)), outer(static_cast<std::size_t>(n));
    return nested(op, w.tuples[0], i, inner, outer) != nested(op, w.tuples[0], i + 1, inner, outer);
  }
  if (name == "bisymmetric") {
    if (w.tuples.size() != 1 || !valid(w.tuples[0], n * n)) return false;
    Tuple agg(static_cast<std::size_t>(n)), col(static_cast<std::size_t>(n));
    return row_route(op, w.tuples[0], agg) != column_route(op, w.tuples[0], col, agg);
  }
  if (name == "ultrabisymmetric") {
    if (w.tuples.size() != 2 || w.positions.size() != 2) return false;
    if (!valid(w.tuples[0], n * n) || !valid(w.tuples[1], n * n)) return false;
    const int p = w.positions[0] - 1, q = w.positions[1] - 1;
    if (p < 0 || q < 0 || p >= n * n || q >= n * n || p == q) return false;
    Tuple expect = w.tuples[0];
    std::swap(expect[static_cast<std::size_t>(p)], expect[static_cast<std::size_t>(q)]);
    if (expect != w.tuples[1]) return false;
    Tuple agg(static_cast<std::size_t>(n));
    return row_route(op, w.tuples[0], agg) != row_route(op, w.tuples[1], agg);
  }
  if (name == "surjective") {
    if (w.values.size() != 1) return false;
    const Element y = w.values[0];
    return chain.contains(y) &&
           std::find(op.values().begin(), op.values().end(), y) == op.values().end();
  }
  if (name == "threshold_switch") {
    if (w.tuples.size() != 1 || !valid(w.tuples[0], 2)) return false;
    return !threshold_exists(op, w.tuples[0][0], w.tuples[0][1]);
  }
  return false;
}

bool replay_witness(const LinearOrdering& ord, const PropertyReport& report) {
  if (report.holds || !report.witness || report.witness->tuples.size() != 1) return false;
  const Tuple& t = report.witness->tuples[0];
  if (t.size() != 3) return false;
  for (Element x : t) {
    if (!ord.chain().contains(x)) return false;
  }
  if (report.name == "single_peaked") {
    const auto [a, b, c] = std::tuple{t[0], t[1], t[2]};
    return a < b && b < c && ord.rank(b) > ord.rank(a) && ord.rank(b) > ord.rank(c);
  }
  if (report.name == "single_peaked_convexity") {
    if (report.witness->values.size() != 1) return false;
    const Element top = report.witness->values[0];
    auto in = [&](Element x) { return ord.rank(x) <= ord.rank(top); };
    return t[0] < t[1] && t[1] < t[2] && in(t[0]) && in(t[2]) && !in(t[1]);
  }
  if (report.name == "single_peaked_sisd") {
    const auto [x0, x1, x2] = std::tuple{t[0], t[1], t[2]};
    if (x0 != ord.minimum()) return false;
    const bool between = (x0 < x1 && x1 < x2) || (x2 < x1 && x1 < x0);
    return between && ord.rank(x1) > ord.rank(x2);
  }
  return false;
}

const std::vector<std::string>& table_property_names() {
  static const std::vector<std::string> names = {
      "idempotent",   "quasitrivial", "symmetric",        "nondecreasing",
      "associative",  "bisymmetric",  "ultrabisymmetric", "surjective"};
  return names;
}

PropertyReport check_property(const OpTable& op, const std::string& name, MatrixGuard guard) {
  if (name == "idempotent") return is_idempotent(op);
  if (name == "quasitrivial") return is_quasitrivial(op);
  if (name == "symmetric") return is_symmetric(op);
  if (name == "nondecreasing") return is_nondecreasing(op);
  if (name == "associative") return is_associative(op);
  if (name == "bisymmetric") return is_bisymmetric(op, guard);
  if (name == "ultrabisymmetric") return is_ultrabisymmetric(op, guard);
  if (name == "surjective") return is_surjective(op);
  if (name == "threshold_switch") return check_threshold_switch(op);
  std::string valid;
  for (const auto& n : table_property_names()) valid += " " + n;
  throw LookupError("unknown property '" + name + "'; valid:" + valid + " threshold_switch");
}

}  // namespace chainops
