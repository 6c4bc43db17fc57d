#include "chainops/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chainops/properties.hpp"

namespace chainops {
namespace {

void require_drawable(const OpTable& op) {
  if (op.arity() != 2 && op.arity() != 3) {
    throw PreconditionError("rendering supports n = 2 or n = 3, got n = " + std::to_string(op.arity()));
  }
}

std::string pad(Element x, std::size_t width) {
  std::string s = std::to_string(x);
  return std::string(width - std::min(width, s.size()), ' ') + s;
}

// One k x k panel: rows = `row` argument top-down from k, columns = last argument.
void ascii_panel(std::ostringstream& os, const OpTable& op, Element slice) {
  const int k = op.k();
  const std::size_t w = std::to_string(k).size();
  Tuple t(static_cast<std::size_t>(op.arity()));
  if (op.arity() == 3) t[0] = slice;
  const std::size_t r = t.size() - 2, c = t.size() - 1;
  for (Element row = k; row >= 1; --row) {
    t[r] = row;
    os << pad(row, w) << " |";
    for (Element col = 1; col <= k; ++col) {
      t[c] = col;
      os << ' ' << pad(op.eval(t), w);
    }
    os << '\n';
  }
  os << std::string(w, ' ') << " +" << std::string(static_cast<std::size_t>(k) * (w + 1), '-') << '\n';
  os << std::string(w, ' ') << "  ";
  for (Element col = 1; col <= k; ++col) os << ' ' << pad(col, w);
  os << '\n';
}

}  // namespace

std::vector<ContourClass> level_sets(const OpTable& op) {
  std::map<Element, std::vector<TupleCode>> by_value;
  for (TupleCode c = 0; c < op.size(); ++c) by_value[op.at(c)].push_back(c);
  std::vector<ContourClass> out;
  for (auto& [v, pts] : by_value) out.push_back(ContourClass{v, std::move(pts)});
  std::stable_sort(out.begin(), out.end(), [](const ContourClass& a, const ContourClass& b) {
    return a.points.size() < b.points.size();
  });
  return out;
}

std::string render_ascii(const OpTable& op) {
  require_drawable(op);
  std::ostringstream os;
  const int n = op.arity();
  if (n == 2) {
    os << "rows x1 (bottom to top), columns x2\n";
    ascii_panel(os, op, 0);
  } else {
    os << "one grid per x1; rows x2 (bottom to top), columns x3\n";
    for (Element s = 1; s <= op.k(); ++s) {
      os << "x1 = " << s << '\n';
      ascii_panel(os, op, s);
    }
  }
  os << "level sets:\n";
  for (const auto& cls : level_sets(op)) {
    os << "  " << cls.value << ":";
    for (TupleCode c : cls.points) os << ' ' << format_tuple(decode_tuple(op.chain(), n, c));
    os << '\n';
  }
  os << "isolated points:";
  const auto iso = isolated_points(op);
  if (iso.empty()) os << " none";
  for (const auto& p : iso) os << ' ' << format_tuple(p);
  os << '\n';
  return os.str();
}

std::string render_svg(const OpTable& op) {
  require_drawable(op);
  constexpr int step = 40, margin = 40, gap = 40;
  const int k = op.k();
  const int n = op.arity();
  const int panels = n == 2 ? 1 : k;
  const int panel = (k - 1) * step;
  const int width = 2 * margin + panels * panel + (panels - 1) * gap;
  const int height = 2 * margin + panel + (n == 3 ? 20 : 0);

  // Screen position of a tuple: last argument to the right, the one before it upward.
  auto at = [&](const Tuple& t) {
    const int px = margin + (n == 3 ? (t[0] - 1) * (panel + gap) : 0) + (t.back() - 1) * step;
    const int py = margin + (k - t[t.size() - 2]) * step;
    return std::make_pair(px, py);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (n == 3) {
    for (Element s = 1; s <= k; ++s) {
      const int px = margin + (s - 1) * (panel + gap);
      os << "<text x=\"" << px << "\" y=\"" << height - 12 << "\" font-size=\"12\">x1 = " << s << "</text>\n";
    }
  }
  for (const auto& cls : level_sets(op)) {
    // Break the path between slices so it never crosses a panel gap.
    std::vector<std::vector<std::pair<int, int>>> runs;
    Element last_slice = 0;
    for (TupleCode c : cls.points) {
      const Tuple t = decode_tuple(op.chain(), n, c);
      const Element slice = n == 3 ? t[0] : 1;
      if (runs.empty() || slice != last_slice) runs.emplace_back();
      last_slice = slice;
      runs.back().push_back(at(t));
    }
    for (const auto& run : runs) {
      if (run.size() < 2) continue;
      os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        os << (i ? " " : "") << run[i].first << ',' << run[i].second;
      }
      os << "\"/>\n";
    }
  }
  Tuple t(static_cast<std::size_t>(n), 1);
  TupleCode code = 0;
  do {
    const auto [px, py] = at(t);
    os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << px + 6 << "\" y=\"" << py - 6 << "\" font-size=\"12\">" << op.at(code) << "</text>\n";
    ++code;
  } while (detail::next_tuple(k, t));
  os << "</svg>\n";
  return os.str();
}

}  // namespace chainops
