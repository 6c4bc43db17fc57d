#include "chainops/gallery.hpp"

#include <algorithm>

#include "chainops/constructors.hpp"

namespace chainops {
namespace {

using Profile = std::map<std::string, bool>;

int count_of(std::span<const Element> t, Element x) {
  return static_cast<int>(std::count(t.begin(), t.end(), x));
}

// Z2 arithmetic with 0/1 stored as 1/2.
Element z2(int parity) { return (parity % 2) + 1; }

GalleryEntry median3(int k) {
  if (k < 2 || k > 4) throw DomainError("median3 is offered on L_2..L_4, got k=" + std::to_string(k));
  OpTable op = OpTable::tabulate(FiniteChain(k), 3, [](std::span<const Element> t) {
    const Element x = t[0], y = t[1], z = t[2];
    return std::max({std::min(x, y), std::min(y, z), std::min(z, x)});
  });
  return {"median3", "ternary median on L_" + std::to_string(k), std::move(op),
          Profile{{"idempotent", true},
                  {"quasitrivial", true},
                  {"symmetric", true},
                  {"nondecreasing", true},
                  {"associative", false},
                  {"bisymmetric", false},
                  {"ultrabisymmetric", false}},
          std::nullopt, std::nullopt};
}

GalleryEntry projection_first(int n) {
  if (n < 2 || n > 3) {
    throw DomainError("projection_first is offered for n=2..3, got n=" + std::to_string(n));
  }
  OpTable op = OpTable::tabulate(FiniteChain(3), n, [](std::span<const Element> t) { return t[0]; });
  return {"projection_first", "first projection on L_3", std::move(op),
          Profile{{"idempotent", true},
                  {"quasitrivial", true},
                  {"symmetric", false},
                  {"nondecreasing", true},
                  {"associative", true},
                  {"bisymmetric", true},
                  {"ultrabisymmetric", false}},
          std::nullopt, std::nullopt};
}

GalleryEntry l3_flat() {
  OpTable op = OpTable::tabulate(FiniteChain(3), 3, [](std::span<const Element> t) {
    if (count_of(t, 1) == 3) return 1;
    return count_of(t, 2) > 0 ? 2 : 3;
  });
  return {"l3_flat", "F(1,1,1)=1, 2 when 2 is an argument, else 3", std::move(op),
          Profile{{"idempotent", true},
                  {"quasitrivial", true},
                  {"symmetric", true},
                  {"nondecreasing", false},
                  {"associative", true},
                  {"bisymmetric", true},
                  {"ultrabisymmetric", true}},
          std::nullopt, std::nullopt};
}

GalleryEntry mod2_sum() {
  OpTable op = OpTable::tabulate(FiniteChain(2), 3, [](std::span<const Element> t) {
    return z2((t[0] - 1) + (t[1] - 1) + (t[2] - 1));
  });
  return {"mod2_sum", "x1+x2+x3 mod 2 on L_2 (0,1 stored as 1,2)", std::move(op),
          Profile{{"idempotent", true},
                  {"quasitrivial", true},
                  {"symmetric", true},
                  {"nondecreasing", false},
                  {"associative", true},
                  {"bisymmetric", true},
                  {"ultrabisymmetric", true}},
          std::vector<Element>{1, 2}, std::vector<Tuple>{}};
}

GalleryEntry z2_binary(bool shifted) {
  OpTable op = OpTable::tabulate(FiniteChain(2), 2, [shifted](std::span<const Element> t) {
    return z2((t[0] - 1) + (t[1] - 1) + (shifted ? 1 : 0));
  });
  return {shifted ? "z2_Hprime" : "z2_H",
          shifted ? "x+y+1 mod 2 on L_2 (0,1 stored as 1,2)" : "x+y mod 2 on L_2 (0,1 stored as 1,2)",
          std::move(op),
          Profile{{"idempotent", false},
                  {"quasitrivial", false},
                  {"symmetric", true},
                  {"nondecreasing", false},
                  {"associative", true},
                  {"bisymmetric", true},
                  {"ultrabisymmetric", true}},
          std::vector<Element>{shifted ? 2 : 1}, std::nullopt};
}

// a, e, b are 1, 2, 3.
GalleryEntry majority_e() {
  OpTable op = OpTable::tabulate(FiniteChain(3), 3, [](std::span<const Element> t) {
    const int a = count_of(t, 1), b = count_of(t, 3);
    if (a > b) return 1;
    if (b > a) return 3;
    return 2;
  });
  return {"majority_e", "a=1 if more a's than b's, b=3 if more b's, else e=2", std::move(op),
          Profile{{"idempotent", true}, {"quasitrivial", true}, {"symmetric", true}},
          std::vector<Element>{2}, std::vector<Tuple>{}};
}

GalleryEntry ab_c_flat() {
  OpTable op = OpTable::tabulate(FiniteChain(3), 2, [](std::span<const Element> t) {
    return (t[0] == 1 && t[1] == 3) ? 1 : 2;
  });
  return {"ab_c_flat", "F(1,3)=1, else 2", std::move(op),
          Profile{{"idempotent", false},
                  {"quasitrivial", false},
                  {"symmetric", false},
                  {"associative", false},
                  {"bisymmetric", true},
                  {"ultrabisymmetric", true}},
          std::nullopt, std::nullopt};
}

GalleryEntry figure_panel(bool left) {
  const FiniteChain l4(4);
  LinearOrdering ord(l4, left ? std::vector<Element>{3, 2, 4, 1} : std::vector<Element>{1, 2, 3, 4});
  Profile all_true{{"idempotent", true},    {"quasitrivial", true}, {"symmetric", true},
                   {"nondecreasing", true}, {"associative", true},  {"bisymmetric", true},
                   {"ultrabisymmetric", true}};
  return {left ? "fig1_left" : "fig1_right",
          left ? "max w.r.t. the ordering 3,2,4,1 on L_4" : "binary max on L_4",
          max_wrt(ord, 2), std::move(all_true), std::vector<Element>{left ? 3 : 1},
          std::vector<Tuple>{left ? Tuple{3, 3} : Tuple{1, 1}}};
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {
      "median3", "projection_first", "l3_flat",    "mod2_sum",  "z2_H",
      "z2_Hprime", "majority_e",     "ab_c_flat", "fig1_left", "fig1_right"};
  return names;
}

GalleryEntry gallery_get(const std::string& name, const GalleryParams& params) {
  if (name == "median3") return median3(params.k.value_or(3));
  if (name == "projection_first") return projection_first(params.n.value_or(2));
  if (name == "l3_flat") return l3_flat();
  if (name == "mod2_sum") return mod2_sum();
  if (name == "z2_H") return z2_binary(false);
  if (name == "z2_Hprime" || name == "z2_H'") return z2_binary(true);
  if (name == "majority_e") return majority_e();
  if (name == "ab_c_flat") return ab_c_flat();
  if (name == "fig1_left") return figure_panel(true);
  if (name == "fig1_right") return figure_panel(false);
  std::string valid;
  for (const auto& n : gallery_names()) valid += " " + n;
  throw LookupError("unknown gallery entry '" + name + "'; valid:" + valid);
}

}  // namespace chainops
