#include "chainops/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "chainops/constructors.hpp"
#include "chainops/nop.hpp"

namespace chainops {
namespace {

constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

// Cells to fill, in TupleCode order of their representative tuple.
struct SearchPlan {
  std::size_t count = 0;
  std::vector<std::size_t> cell_of;  // code -> cell
  std::vector<std::vector<Element>> candidates;
  std::vector<std::vector<std::size_t>> lower;  // cells one step below, all earlier
};

SearchPlan make_plan(const FiniteChain& chain, int n, const Constraint& c) {
  const int k = chain.size();
  SearchPlan plan;
  plan.count = checked_power(k, n);
  plan.cell_of.assign(plan.count, kNoCell);
  std::vector<TupleCode> rep_code;
  Tuple t(static_cast<std::size_t>(n), 1), s;
  TupleCode code = 0;
  do {
    s = t;
    if (c.symmetric) std::sort(s.begin(), s.end());
    const TupleCode rep = detail::encode_unchecked(k, s);
    if (rep != code) {
      plan.cell_of[code] = plan.cell_of[rep];
    } else {
      plan.cell_of[code] = plan.candidates.size();
      rep_code.push_back(code);
      std::vector<Element> cand;
      const bool diagonal = std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
      if (c.idempotent && diagonal) {
        cand = {t[0]};
      } else if (c.quasitrivial) {
        cand = s;
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      } else {
        for (Element v = 1; v <= k; ++v) cand.push_back(v);
      }
      plan.candidates.push_back(std::move(cand));
    }
    ++code;
  } while (detail::next_tuple(k, t));

  plan.lower.resize(plan.candidates.size());
  if (c.nondecreasing) {
    for (std::size_t cell = 0; cell < rep_code.size(); ++cell) {
      detail::decode_into(k, rep_code[cell], t);
      auto& low = plan.lower[cell];
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 1) continue;
        --t[i];
        const std::size_t below = plan.cell_of[detail::encode_unchecked(k, t)];
        ++t[i];
        if (std::find(low.begin(), low.end(), below) == low.end()) low.push_back(below);
      }
    }
  }
  return plan;
}

long double plan_estimate(const SearchPlan& plan) {
  long double total = 1.0L;
  for (const auto& cand : plan.candidates) total *= static_cast<long double>(cand.size());
  return total;
}

std::vector<Element> expand(const SearchPlan& plan, const std::vector<Element>& cell_values) {
  std::vector<Element> values(plan.count);
  for (std::size_t code = 0; code < plan.count; ++code) values[code] = cell_values[plan.cell_of[code]];
  return values;
}

std::string describe(const Constraint& c) {
  const std::string label = c.label();
  return label == "all tables" ? label : label + " tables";
}

std::string format_estimate(long double x) {
  std::ostringstream os;
  os.precision(4);
  os << static_cast<double>(x);
  return os.str();
}

// First failing index across `items`, split into contiguous chunks per worker.
template <class Item, class Check>
std::optional<std::pair<std::size_t, std::string>> first_failure(const std::vector<Item>& items,
                                                                 const Check& check, int jobs) {
  using Hit = std::optional<std::pair<std::size_t, std::string>>;
  auto scan_range = [&](std::size_t lo, std::size_t hi) -> Hit {
    for (std::size_t i = lo; i < hi; ++i) {
      if (auto why = check(items[i])) return std::make_pair(i, *why);
    }
    return std::nullopt;
  };
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(items.size(), 1));
  if (workers == 1) return scan_range(0, items.size());

  std::vector<Hit> hits(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        const std::size_t lo = std::min(items.size(), w * chunk);
        hits[w] = scan_range(lo, std::min(items.size(), lo + chunk));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

using Values = std::vector<Element>;
using TableCheck = std::function<std::optional<std::string>(const OpTable&)>;

std::set<Values> max_tables(const std::vector<LinearOrdering>& orderings, int n) {
  std::set<Values> out;
  for (const auto& o : orderings) out.insert(max_wrt(o, n).values());
  return out;
}

std::vector<LinearOrdering> all_orderings(const FiniteChain& chain) {
  if (chain.size() > 10) {
    throw ResourceError("scanning all orderings of L_" + std::to_string(chain.size()) +
                        " exceeds the bound k <= 10");
  }
  std::vector<Element> seq(static_cast<std::size_t>(chain.size()));
  for (int i = 0; i < chain.size(); ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  std::vector<LinearOrdering> out;
  do {
    out.emplace_back(chain, seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool isolated_value(const OpTable& op, Element v) {
  return std::count(op.values().begin(), op.values().end(), v) == 1;
}

bool has(const std::vector<Element>& xs, Element x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

Constraint qt() { return Constraint{true, false, false, false, false}; }
Constraint qs() { return Constraint{true, true, false, false, false}; }
Constraint qsn() { return Constraint{true, true, true, false, false}; }
Constraint idem() { return Constraint{false, false, false, true, false}; }
Constraint all_tables() { return Constraint{}; }

// A suite that checks one condition per table of a population.
struct TableSuite {
  std::vector<Constraint> populations;  // preferred first
  int arity = 0;
  bool sampling_ok = false;
  bool open_search = false;
  std::string note;
  TableCheck check;
};

std::optional<std::string> failed(const PropertyReport& r) {
  if (r.holds) return std::nullopt;
  return r.to_line();
}

TableSuite table_suite(const std::string& name, const FiniteChain& chain, int n,
                       const SuiteOptions& o) {
  const MatrixGuard mg = o.matrix_guard;
  const bool relax = o.relax_hypothesis;
  auto no_relax = [&] {
    if (relax) throw LookupError("suite '" + name + "' has no relaxed variant");
  };
  TableSuite s;
  s.arity = n;

  if (name == "marmaytor") {
    no_relax();
    s.populations = {qsn()};
    s.check = [](const OpTable& f) { return failed(is_associative(f)); };
  } else if (name == "main2") {
    no_relax();
    s.populations = {qsn()};
    auto sp = std::make_shared<std::set<Values>>(max_tables(enumerate_single_peaked(chain), n));
    auto binaries = std::make_shared<std::vector<OpTable>>(enumerate_ops(chain, 2, qsn(), o.enumeration_guard));
    s.note = "uniqueness of G is counted among symmetric quasitrivial nondecreasing binary tables";
    s.check = [sp, binaries, n](const OpTable& f) -> std::optional<std::string> {
      const bool assoc = is_associative(f).holds;
      bool exchange = true;
      Tuple a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (Element x = 1; x <= f.k() && exchange; ++x) {
        for (Element y = 1; y <= f.k() && exchange; ++y) {
          std::fill(a.begin(), a.end(), x);
          a.back() = y;
          std::fill(b.begin(), b.end(), y);
          b.front() = x;
          exchange = f.eval(a) == f.eval(b);
        }
      }
      const bool max_form = sp->count(f.values()) > 0;
      const OpTable g = reduce_binary(f);
      const bool lifted = is_quasitrivial(g).holds && is_nondecreasing(g).holds && lift_binary(g, n) == f;
      if (assoc != exchange || exchange != max_form || max_form != lifted) {
        return "assertions disagree: associative=" + bool_str(assoc) + " exchange=" + bool_str(exchange) +
               " single-peaked-max=" + bool_str(max_form) + " min/max-lift=" + bool_str(lifted);
      }
      if (!assoc) return std::nullopt;
      if (!is_symmetric(g).holds) return "reduced binary table is not symmetric";
      if (!is_associative(g).holds) return "reduced binary table is not associative";
      const auto lifts = std::count_if(binaries->begin(), binaries->end(),
                                       [&](const OpTable& h) { return lift_binary(h, n) == f; });
      if (lifts != 1) return "binary table G is not unique (" + std::to_string(lifts) + " candidates)";
      return std::nullopt;
    };
  } else if (name == "f456dfs") {
    no_relax();
    s.populations = {qt(), qs()};
    auto sp = std::make_shared<std::set<Values>>(max_tables(enumerate_single_peaked(chain), n));
    s.check = [sp, n](const OpTable& f) -> std::optional<std::string> {
      const bool first = is_quasitrivial(f).holds && is_symmetric(f).holds &&
                         is_nondecreasing(f).holds && is_associative(f).holds;
      const OpTable g = reduce_binary(f);
      const bool second = is_quasitrivial(g).holds && is_symmetric(g).holds &&
                          is_nondecreasing(g).holds && lift_binary(g, n) == f;
      const bool third = sp->count(f.values()) > 0;
      if (first != second || second != third) {
        return "assertions disagree: (i)=" + bool_str(first) + " (ii)=" + bool_str(second) +
               " (iii)=" + bool_str(third);
      }
      if (first) {
        if (!is_associative(g).holds) return "G is not associative";
        if (iterate_binary(g, n) != f) return "F is not derived from G";
      }
      return std::nullopt;
    };
  } else if (name == "ack") {
    no_relax();
    s.populations = {qs()};
    auto derived = std::make_shared<std::set<Values>>();
    for_each_op(chain, 2, qt(), [&](const OpTable& h) {
      if (is_associative(h).holds) derived->insert(iterate_binary(h, n).values());
      return true;
    }, o.enumeration_guard);
    auto maxes = std::make_shared<std::set<Values>>(max_tables(all_orderings(chain), n));
    s.note = "non-associative tables are outside the statement and pass vacuously";
    s.check = [derived, maxes](const OpTable& f) -> std::optional<std::string> {
      if (!is_associative(f).holds) return std::nullopt;
      const bool lhs = derived->count(f.values()) > 0;
      const bool rhs = maxes->count(f.values()) > 0;
      if (lhs != rhs) {
        return "derived-from-quasitrivial-associative=" + bool_str(lhs) + " but max-form=" + bool_str(rhs);
      }
      return std::nullopt;
    };
  } else if (name == "eee") {
    no_relax();
    s.populations = {qs()};
    s.arity = 2;
    s.note = "population lists the binary G; F is its min/max lift";
    s.check = [n](const OpTable& g) -> std::optional<std::string> {
      const OpTable f = lift_binary(g, n);
      const auto nf = neutral_elements(f);
      const auto ng = neutral_elements(g);
      if (nf.size() > 1) return "F has " + std::to_string(nf.size()) + " neutral elements";
      for (Element e = 1; e <= g.k(); ++e) {
        const Tuple diag_f(static_cast<std::size_t>(n), e);
        const bool i = has(nf, e);
        const bool ii = has(ng, e);
        const bool iii = isolated_value(g, g.eval(std::array<Element, 2>{e, e}));
        const bool iv = isolated_value(f, f.eval(diag_f));
        if (i != ii || ii != iii || iii != iv) {
          return "e=" + std::to_string(e) + ": neutral(F)=" + bool_str(i) + " neutral(G)=" + bool_str(ii) +
                 " isolated(G)=" + bool_str(iii) + " isolated(F)=" + bool_str(iv);
        }
      }
      return std::nullopt;
    };
  } else if (name == "cor24f") {
    s.populations = relax ? std::vector<Constraint>{qt()} : std::vector<Constraint>{qs()};
    s.check = [mg](const OpTable& f) -> std::optional<std::string> {
      const bool a = is_associative(f).holds;
      const bool b = is_bisymmetric(f, mg).holds;
      if (a != b) return "associative=" + bool_str(a) + " bisymmetric=" + bool_str(b);
      return std::nullopt;
    };
  } else if (name == "cor24f1") {
    s.populations = relax ? std::vector<Constraint>{all_tables()} : std::vector<Constraint>{qt(), qs()};
    s.sampling_ok = relax;
    s.check = [mg](const OpTable& f) -> std::optional<std::string> {
      const bool a = is_associative(f).holds && is_symmetric(f).holds;
      const bool u = is_ultrabisymmetric(f, mg).holds;
      if (a != u) return "associative-and-symmetric=" + bool_str(a) + " ultrabisymmetric=" + bool_str(u);
      return std::nullopt;
    };
  } else if (name == "prop19gz") {
    s.populations = {qt(), qs()};
    s.check = [mg, relax](const OpTable& f) -> std::optional<std::string> {
      const bool hyp = relax ? is_bisymmetric(f, mg).holds : is_ultrabisymmetric(f, mg).holds;
      if (!hyp) return std::nullopt;
      if (auto w = failed(is_associative(f))) return w;
      return failed(is_symmetric(f));
    };
  } else if (name == "prop21ft") {
    s.populations = {all_tables()};
    s.sampling_ok = true;
    s.check = [mg, relax](const OpTable& f) -> std::optional<std::string> {
      if (!is_associative(f).holds) return std::nullopt;
      if (!relax && !is_symmetric(f).holds) return std::nullopt;
      return failed(is_ultrabisymmetric(f, mg));
    };
  } else if (name == "prop20gt") {
    s.populations = {all_tables()};
    s.sampling_ok = true;
    s.check = [mg, relax](const OpTable& f) -> std::optional<std::string> {
      if (!relax && neutral_elements(f).empty()) return std::nullopt;
      if (!is_bisymmetric(f, mg).holds) return std::nullopt;
      if (auto w = failed(is_associative(f))) return w;
      return failed(is_symmetric(f));
    };
  } else if (name == "surj65") {
    s.populations = {all_tables()};
    s.sampling_ok = true;
    s.check = [mg, relax](const OpTable& f) -> std::optional<std::string> {
      if (!relax && !is_surjective(f).holds) return std::nullopt;
      if (!is_ultrabisymmetric(f, mg).holds) return std::nullopt;
      return failed(is_symmetric(f));
    };
  } else if (name == "cons65") {
    no_relax();
    s.populations = {qt(), qs()};
    s.check = [](const OpTable& f) { return failed(check_threshold_switch(f)); };
  } else if (name == "idis") {
    s.populations = relax ? std::vector<Constraint>{all_tables()}
                          : std::vector<Constraint>{idem(), qt(), qs()};
    s.sampling_ok = relax;
    s.check = [](const OpTable& f) -> std::optional<std::string> {
      for (const Tuple& p : isolated_points(f)) {
        if (std::adjacent_find(p.begin(), p.end(), std::not_equal_to<>()) != p.end()) {
          return "isolated point " + format_tuple(p) + " is off the diagonal";
        }
      }
      return std::nullopt;
    };
  } else if (name == "lemma_ee") {
    no_relax();
    s.populations = {qt(), qs()};
    s.check = [n](const OpTable& f) -> std::optional<std::string> {
      const auto neutral = neutral_elements(f);
      for (Element e = 1; e <= f.k(); ++e) {
        const bool iso = isolated_value(f, f.eval(Tuple(static_cast<std::size_t>(n), e)));
        const bool neu = has(neutral, e);
        if (iso && !neu) return "diagonal point of " + std::to_string(e) + " is isolated but not neutral";
        if (n == 2 && neu && !iso) return std::to_string(e) + " is neutral but (e,e) is not isolated";
      }
      return std::nullopt;
    };
  } else if (name == "open_q_search") {
    no_relax();
    s.populations = {qt(), qs()};
    s.open_search = true;
    s.note = "searches for a quasitrivial bisymmetric non-associative table; no outcome is asserted";
    s.check = [mg](const OpTable& f) -> std::optional<std::string> {
      if (!is_bisymmetric(f, mg).holds) return std::nullopt;
      return failed(is_associative(f));
    };
  } else {
    throw LookupError("'" + name + "' is not a table suite");
  }
  return s;
}

bool is_table_suite(const std::string& name) {
  return name != "bl56" && name != "sp_equiv" && name != "deb1" && name != "gc";
}

struct Population {
  std::vector<OpTable> tables;
  std::string label;
  bool exhaustive = true;
};

std::vector<OpTable> sample_tables(const FiniteChain& chain, int n, const Constraint& c,
                                   std::uint64_t count, std::uint64_t seed) {
  const SearchPlan plan = make_plan(chain, n, c);
  std::mt19937_64 rng(seed);
  std::vector<OpTable> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Element> cells(plan.candidates.size());
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& cand = plan.candidates[i];
      std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
      cells[i] = cand[pick(rng)];
    }
    out.emplace_back(chain, n, expand(plan, cells));
  }
  return out;
}

Population choose_population(const FiniteChain& chain, int n, const TableSuite& suite,
                             const SuiteOptions& o) {
  const auto& prefs = suite.populations;
  std::size_t pick = prefs.size() - 1;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (estimate_population(chain, n, prefs[i]) <= static_cast<long double>(o.population_cap)) {
      pick = i;
      break;
    }
  }
  const Constraint& c = prefs[pick];
  std::string label = c.label();
  if (pick > 0) label += " (narrowed from " + prefs[0].label() + ")";
  const long double est = estimate_population(chain, n, c);
  const bool too_big = est > static_cast<long double>(o.population_cap);
  if (too_big && suite.sampling_ok && !o.exhaustive_only && !c.nondecreasing) {
    return {sample_tables(chain, n, c, o.samples, o.seed),
            "random sample of " + std::to_string(o.samples) + " from " + c.label() + " (non-exhaustive)",
            false};
  }
  return {enumerate_ops(chain, n, c, o.enumeration_guard), label, true};
}

void apply_hit(SuiteReport& r, const std::optional<std::pair<std::size_t, std::string>>& hit,
               const std::vector<OpTable>& pop, bool open_search) {
  if (!hit) {
    r.verdict = open_search ? Verdict::NoneFound : Verdict::Holds;
    return;
  }
  r.verdict = open_search ? Verdict::Found : Verdict::Fails;
  r.counterexample_table = pop[hit->first];
  r.counterexample = hit->second;
}

// Orderings: max_wrt(ord, n) nondecreasing iff ord single-peaked.
std::optional<std::string> bl56_check(const LinearOrdering& ord, int n) {
  const bool nd = is_nondecreasing(max_wrt(ord, n)).holds;
  const bool sp = is_single_peaked(ord).holds;
  if (nd != sp) return "nondecreasing=" + bool_str(nd) + " single-peaked=" + bool_str(sp);
  return std::nullopt;
}

std::optional<std::string> sp_equiv_check(const LinearOrdering& ord) {
  const auto a = is_single_peaked(ord);
  const auto b = single_peaked_via_convexity(ord);
  const auto c = single_peaked_via_sisd(ord);
  if (a.holds != b.holds || b.holds != c.holds) {
    return "deciders disagree: definition=" + bool_str(a.holds) + " convexity=" + bool_str(b.holds) +
           " minimal-element=" + bool_str(c.holds);
  }
  for (const auto* r : {&a, &b, &c}) {
    if (!r->holds && !replay_witness(ord, *r)) return "witness does not replay: " + r->to_line();
  }
  return std::nullopt;
}

void run_ordering_suite(SuiteReport& r, const FiniteChain& chain, int n, const SuiteOptions& o) {
  if (o.relax_hypothesis) throw LookupError("suite '" + r.suite + "' has no relaxed variant");
  const auto orderings = all_orderings(chain);
  r.population = orderings.size();
  r.population_label = "all orderings";
  auto check = [&](const LinearOrdering& ord) {
    return r.suite == "bl56" ? bl56_check(ord, n) : sp_equiv_check(ord);
  };
  if (auto hit = first_failure(orderings, check, o.jobs)) {
    r.verdict = Verdict::Fails;
    r.counterexample_ordering = orderings[hit->first];
    r.counterexample = format_ordering(orderings[hit->first]) + ": " + hit->second;
    return;
  }
  if (r.suite == "sp_equiv") {
    std::set<std::vector<Element>> accepted;
    for (const auto& ord : orderings) {
      if (is_single_peaked(ord).holds) accepted.insert(ord.seq());
    }
    const auto listed = enumerate_single_peaked(chain);
    std::set<std::vector<Element>> listed_set;
    for (const auto& ord : listed) listed_set.insert(ord.seq());
    const std::size_t expected = std::size_t{1} << (chain.size() - 1);
    std::ostringstream os;
    os << "accepters=" << accepted.size() << " expected=" << expected << " listed=" << listed.size();
    r.note = os.str();
    if (accepted.size() != expected || listed.size() != expected || listed_set != accepted) {
      r.verdict = Verdict::Fails;
      r.counterexample = "count mismatch: " + os.str();
      return;
    }
  }
  r.verdict = Verdict::Holds;
}

std::set<Values> uninorm_set(const FiniteChain& chain, int n, const SuiteOptions& o, std::string& source) {
  try {
    std::set<Values> out;
    for (const auto& f : enumerate_uninorms(chain, n, o.enumeration_guard)) out.insert(f.values());
    source = "enumerated uninorms";
    return out;
  } catch (const ResourceError&) {
    source = "max tables of single-peaked orderings (enumeration above guard)";
    return max_tables(enumerate_single_peaked(chain), n);
  }
}

void fail_with(SuiteReport& r, std::string why) {
  r.verdict = Verdict::Fails;
  r.counterexample = std::move(why);
}

void run_deb1(SuiteReport& r, const FiniteChain& chain, int n, const SuiteOptions& o) {
  if (o.relax_hypothesis) throw LookupError("suite 'deb1' has no relaxed variant");
  std::vector<GMap> gmaps;
  for (Element e = 1; e <= chain.size(); ++e) {
    auto part = enumerate_gmaps(chain, e);
    gmaps.insert(gmaps.end(), part.begin(), part.end());
  }
  r.population = gmaps.size();
  r.population_label = "valid g-maps over all e";
  const std::size_t expected = std::size_t{1} << (chain.size() - 1);

  std::string source;
  const auto uninorms = uninorm_set(chain, n, o, source);
  r.note = "compared against " + source;

  auto check = [&](const GMap& gm) -> std::optional<std::string> {
    const OpTable f = from_gmap(gm, n);
    for (auto* p : {&is_idempotent, &is_symmetric, &is_nondecreasing, &is_associative}) {
      if (auto w = failed(p(f))) return format_gmap(gm) + ": " + *w;
    }
    if (neutral_elements(f) != std::vector<Element>{gm.neutral()}) {
      return format_gmap(gm) + ": neutral elements differ from e";
    }
    if (!(gmap_of(f) == gm)) return format_gmap(gm) + ": gmap_of does not invert from_gmap";
    if (uninorms.count(f.values()) == 0) return format_gmap(gm) + ": table is not an enumerated uninorm";
    return std::nullopt;
  };
  if (auto hit = first_failure(gmaps, check, o.jobs)) return fail_with(r, hit->second);

  std::set<Values> images;
  for (const auto& gm : gmaps) images.insert(from_gmap(gm, n).values());
  if (gmaps.size() != expected) {
    return fail_with(r, "g-map count " + std::to_string(gmaps.size()) + " differs from " + std::to_string(expected));
  }
  if (images.size() != gmaps.size()) return fail_with(r, "from_gmap is not injective");
  if (images != uninorms) return fail_with(r, "from_gmap image differs from the uninorm set");
  for (const auto& v : uninorms) {
    const OpTable f(chain, n, v);
    if (!(from_gmap(gmap_of(f), n) == f)) return fail_with(r, "from_gmap(gmap_of(F)) != F");
  }
  r.verdict = Verdict::Holds;
}

void run_gc(SuiteReport& r, const FiniteChain& chain, int n, const SuiteOptions& o) {
  if (o.relax_hypothesis) throw LookupError("suite 'gc' has no relaxed variant");
  const int bits = chain.size() - 1;
  if (bits > 20) throw ResourceError("gc suite is bounded to k <= 21");
  const std::size_t total = std::size_t{1} << bits;
  r.population = total;
  r.population_label = "all choice strings";
  std::string source;
  const auto uninorms = uninorm_set(chain, n, o, source);
  r.note = "compared against " + source;

  std::vector<std::size_t> masks(total);
  for (std::size_t m = 0; m < total; ++m) masks[m] = m;
  auto plot_of = [&](std::size_t mask) {
    std::vector<bool> choice(static_cast<std::size_t>(bits));
    for (int b = 0; b < bits; ++b) choice[static_cast<std::size_t>(b)] = (mask >> b) & 1U;
    return contour_construct(chain, n, choice);
  };
  auto check = [&](std::size_t mask) -> std::optional<std::string> {
    const ContourPlot plot = plot_of(mask);
    const std::string tag = "ordering " + format_ordering(plot.ordering) + ": ";
    const Element a1 = plot.ordering.minimum();
    const Tuple diag(static_cast<std::size_t>(n), a1);
    if (isolated_points(plot.table) != std::vector<Tuple>{diag}) {
      return tag + "the first point is not the unique isolated point";
    }
    if (plot.classes.front().points.size() != 1) return tag + "first class is not a single point";
    std::size_t covered = 0;
    for (const auto& cls : plot.classes) {
      for (TupleCode c : cls.points) {
        if (plot.table.at(c) != cls.value) return tag + "class value differs from table value";
      }
      const auto level = std::count(plot.table.values().begin(), plot.table.values().end(), cls.value);
      if (static_cast<std::size_t>(level) != cls.points.size()) return tag + "class is not a full level set";
      covered += cls.points.size();
    }
    if (covered != plot.table.size()) return tag + "classes do not cover every point";
    if (!(plot.table == max_wrt(plot.ordering, n))) return tag + "table differs from max w.r.t. its ordering";
    if (uninorms.count(plot.table.values()) == 0) return tag + "table is not an enumerated uninorm";
    if (contour_choices(plot.ordering) != [&] {
          std::vector<bool> c(static_cast<std::size_t>(bits));
          for (int b = 0; b < bits; ++b) c[static_cast<std::size_t>(b)] = (mask >> b) & 1U;
          return c;
        }()) {
      return tag + "choice bits do not round trip";
    }
    return std::nullopt;
  };
  if (auto hit = first_failure(masks, check, o.jobs)) return fail_with(r, hit->second);

  std::set<Values> outputs;
  for (std::size_t m = 0; m < total; ++m) outputs.insert(plot_of(m).table.values());
  if (outputs.size() != total) return fail_with(r, "contour outputs are not pairwise distinct");
  if (outputs != uninorms) return fail_with(r, "contour outputs differ from the uninorm set");
  r.verdict = Verdict::Holds;
}

void lemma_ee_converse_note(SuiteReport& r, const std::vector<OpTable>& pop, int n) {
  if (n < 3) return;
  std::size_t converse_failures = 0;
  for (const auto& f : pop) {
    const auto neutral = neutral_elements(f);
    for (Element e : neutral) {
      if (!isolated_value(f, f.eval(Tuple(static_cast<std::size_t>(n), e)))) {
        ++converse_failures;
        break;
      }
    }
  }
  r.note = std::to_string(converse_failures) +
           " tables have a neutral element whose diagonal point is not isolated (converse fails for n >= 3)";
}

}  // namespace

std::string Constraint::label() const {
  std::string out;
  auto add = [&](bool on, const char* what) {
    if (!on) return;
    if (!out.empty()) out += "+";
    out += what;
  };
  add(quasitrivial, "quasitrivial");
  add(symmetric, "symmetric");
  add(nondecreasing, "nondecreasing");
  add(idempotent, "idempotent");
  add(has_neutral, "has-neutral");
  return out.empty() ? "all tables" : out;
}

long double estimate_population(const FiniteChain& chain, int n, const Constraint& c) {
  return plan_estimate(make_plan(chain, n, c));
}

void for_each_op(const FiniteChain& chain, int n, const Constraint& c,
                 const std::function<bool(const OpTable&)>& visit, std::uint64_t guard) {
  const SearchPlan plan = make_plan(chain, n, c);
  const long double estimate = plan_estimate(plan);
  if (!c.nondecreasing && estimate > static_cast<long double>(guard)) {
    throw ResourceError("enumerating " + describe(c) + " on L_" + std::to_string(chain.size()) +
                        " with n=" + std::to_string(n) + " needs about " + format_estimate(estimate) +
                        " tables, above the guard of " + std::to_string(guard));
  }
  const std::size_t cells = plan.candidates.size();
  std::vector<Element> val(cells, 0);
  std::uint64_t nodes = 0;
  auto descend = [&](auto& self, std::size_t d) -> bool {
    if (d == cells) {
      OpTable table(chain, n, expand(plan, val));
      if (c.has_neutral && neutral_elements(table).empty()) return true;
      return visit(table);
    }
    for (Element v : plan.candidates[d]) {
      if (++nodes > guard) {
        throw ResourceError("enumerating " + describe(c) + " on L_" + std::to_string(chain.size()) +
                            " with n=" + std::to_string(n) + " explored more than " + std::to_string(guard) +
                            " search nodes (estimate " + format_estimate(estimate) + " tables)");
      }
      bool ok = true;
      for (std::size_t low : plan.lower[d]) {
        if (val[low] > v) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      val[d] = v;
      if (!self(self, d + 1)) return false;
    }
    return true;
  };
  descend(descend, 0);
}

std::vector<OpTable> enumerate_ops(const FiniteChain& chain, int n, const Constraint& c, std::uint64_t guard) {
  std::vector<OpTable> out;
  for_each_op(chain, n, c, [&](const OpTable& t) {
    out.push_back(t);
    return true;
  }, guard);
  return out;
}

std::vector<OpTable> enumerate_uninorms(const FiniteChain& chain, int n, std::uint64_t guard) {
  std::vector<OpTable> out;
  for_each_op(chain, n, qsn(), [&](const OpTable& t) {
    if (is_associative(t).holds) out.push_back(t);
    return true;
  }, guard);
  return out;
}

std::uint64_t count_uninorms(const FiniteChain& chain, int n, std::uint64_t guard) {
  return enumerate_uninorms(chain, n, guard).size();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NoneFound: return "none_found";
    case Verdict::Found: return "found";
  }
  return "?";
}

bool SuiteReport::matches_claim() const {
  if (verdict == Verdict::NoneFound || verdict == Verdict::Found) return true;
  return relaxed ? verdict == Verdict::Fails : verdict == Verdict::Holds;
}

std::string SuiteReport::to_line() const {
  std::ostringstream os;
  os << "SUITE " << suite << " k=" << k << " n=" << n << " pop=" << population
     << " verdict=" << to_string(verdict);
  return os.str();
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite:        " << suite << (relaxed ? " (hypothesis relaxed)" : "") << "\n";
  os << "scale:        k=" << k << " n=" << n << "\n";
  os << "population:   " << population << " (" << population_label << ")\n";
  os << "coverage:     " << (exhaustive ? "exhaustive" : "sampled, non-exhaustive") << "\n";
  os << "verdict:      " << to_string(verdict) << (matches_claim() ? "" : "  << MISMATCH") << "\n";
  if (!counterexample.empty()) os << "witness:      " << counterexample << "\n";
  if (counterexample_table) {
    os << "table:\n" << write_nop(*counterexample_table);
  }
  if (!note.empty()) os << "note:         " << note << "\n";
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(3);
  t << seconds;
  os << "time:         " << t.str() << " s\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "marmaytor", "main2",    "f456dfs", "ack",    "bl56",   "sp_equiv", "eee",
      "cor24f",    "cor24f1",  "prop19gz", "prop21ft", "prop20gt", "surj65", "cons65",
      "idis",      "lemma_ee", "deb1",    "gc",     "open_q_search"};
  return names;
}

SuiteReport run_suite(const std::string& name, const FiniteChain& chain, int n, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    std::string valid;
    for (const auto& s : suite_names()) valid += " " + s;
    throw LookupError("unknown suite '" + name + "'; valid:" + valid);
  }
  if (name == "marmaytor") n = 2;
  if (n < 1) throw DomainError("arity must be at least 1");
  if (n < 2 && name != "sp_equiv") throw DomainError("suite '" + name + "' needs n >= 2");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = name;
  r.k = chain.size();
  r.n = n;
  r.relaxed = options.relax_hypothesis;

  if (name == "bl56" || name == "sp_equiv") {
    run_ordering_suite(r, chain, n, options);
  } else if (name == "deb1") {
    run_deb1(r, chain, n, options);
  } else if (name == "gc") {
    run_gc(r, chain, n, options);
  } else {
    const TableSuite suite = table_suite(name, chain, n, options);
    const Population pop = choose_population(chain, suite.arity, suite, options);
    r.population = pop.tables.size();
    r.population_label = pop.label;
    r.exhaustive = pop.exhaustive;
    r.note = suite.note;
    apply_hit(r, first_failure(pop.tables, suite.check, options.jobs), pop.tables, suite.open_search);
    if (name == "lemma_ee" && r.verdict == Verdict::Holds) lemma_ee_converse_note(r, pop.tables, n);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool replay_counterexample(const SuiteReport& report, const SuiteOptions& options) {
  SuiteOptions o = options;
  o.relax_hypothesis = report.relaxed;
  if (report.counterexample_table && is_table_suite(report.suite)) {
    const TableSuite suite = table_suite(report.suite, FiniteChain(report.k), report.n, o);
    return suite.check(*report.counterexample_table).has_value();
  }
  if (report.counterexample_ordering) {
    const auto& ord = *report.counterexample_ordering;
    return (report.suite == "bl56" ? bl56_check(ord, report.n) : sp_equiv_check(ord)).has_value();
  }
  return false;
}

}  // namespace chainops
