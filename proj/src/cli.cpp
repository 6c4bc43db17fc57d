#include "chainops/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "chainops/constructors.hpp"
#include "chainops/gallery.hpp"
#include "chainops/nop.hpp"
#include "chainops/properties.hpp"
#include "chainops/render.hpp"
#include "chainops/verifier.hpp"

namespace chainops {
namespace {

struct Globals {
  std::uint64_t guard = kDefaultEnumerationGuard;
  int jobs = 1;
  std::string format = "text";
  bool lines() const { return format == "lines"; }
};

std::string element_set(const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string point_list(const std::vector<Tuple>& pts) {
  if (pts.empty()) return "none";
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + format_tuple(p);
  return s;
}

void emit_table(std::ostream& out, const OpTable& op, const std::string& path) {
  if (path.empty() || path == "-") {
    out << write_nop(op);
  } else {
    write_nop_file(path, op);
  }
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, check, enumerate and verify n-ary operations on finite chains", "chainops"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--guard", g.guard, "Limit on enumeration search nodes")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for suite scans")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report style")->check(CLI::IsMember({"text", "lines"}));

  // check
  auto* check = app.add_subcommand("check", "Report properties of a NOP table");
  std::string check_file, check_props;
  check->add_option("file", check_file, "NOP file")->required();
  check->add_option("--props", check_props, "Comma-separated property names (default: all)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a table and write it as NOP");
  construct->require_subcommand(1);
  std::string out_path;
  int arity = 2;
  auto* c_max = construct->add_subcommand("max", "Maximum with respect to a linear ordering");
  std::string order_text;
  c_max->add_option("--order", order_text, "Ordering from least to greatest, e.g. 3,2,4,1")->required();
  auto* c_gmap = construct->add_subcommand("gmap", "Idempotent uninorm from a g-map");
  int gm_k = 0, gm_e = 0;
  std::string gm_values;
  c_gmap->add_option("--k", gm_k, "Chain size")->required();
  c_gmap->add_option("--e", gm_e, "Neutral element")->required();
  c_gmap->add_option("--g", gm_values, "g(1),...,g(e)")->required();
  auto* c_lift = construct->add_subcommand("lift", "F = G(min, max) from a binary table");
  auto* c_reduce = construct->add_subcommand("reduce", "G(x,y) = F((n-1)x, y)");
  auto* c_derive = construct->add_subcommand("derive", "n-ary iterate of an associative binary table");
  auto* c_order = construct->add_subcommand("order", "Ordering read off a quasitrivial associative binary table");
  std::string in_path;
  for (auto* sub : {c_lift, c_reduce, c_derive, c_order}) {
    sub->add_option("--in", in_path, "Input NOP file")->required();
  }
  for (auto* sub : {c_max, c_gmap, c_lift, c_derive}) {
    sub->add_option("--n", arity, "Arity of the result")->capture_default_str();
  }
  for (auto* sub : {c_max, c_gmap, c_lift, c_reduce, c_derive}) {
    sub->add_option("--out", out_path, "Output file (default: stdout)");
  }

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List single-peaked orderings or idempotent uninorms");
  std::string enum_kind;
  int enum_k = 0, enum_n = 2;
  enumerate->add_option("kind", enum_kind, "orderings | uninorms")
      ->required()
      ->check(CLI::IsMember({"orderings", "uninorms"}));
  enumerate->add_option("--k", enum_k, "Chain size")->required();
  enumerate->add_option("--n", enum_n, "Arity (uninorms)")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Check a stated equivalence or implication over a table population");
  std::string suite;
  int v_k = 0, v_n = 2;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool exhaustive = false, relax = false;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--k", v_k, "Chain size")->required();
  verify->add_option("--n", v_n, "Arity")->capture_default_str();
  auto* ex_flag = verify->add_flag("--exhaustive", exhaustive, "Fail instead of sampling");
  verify->add_option("--samples", samples, "Random tables when sampling is needed")->excludes(ex_flag);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_flag("--relax", relax, "Drop a hypothesis; the suite is then expected to fail");

  // render
  auto* render = app.add_subcommand("render", "Draw the contour plot of a binary or ternary table");
  std::string render_file, render_style = "ascii";
  render->add_option("file", render_file, "NOP file")->required();
  render->add_option("style", render_style, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));

  // gallery
  auto* gallery = app.add_subcommand("gallery", "Emit a named example table with its expected profile");
  std::string gallery_name;
  std::optional<int> gal_k, gal_n;
  gallery->add_option("name", gallery_name, "Entry name (omit to list)");
  gallery->add_option("--k", gal_k, "Chain size where the entry allows it");
  gallery->add_option("--n", gal_n, "Arity where the entry allows it");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) {
      const OpTable op = read_nop_file(check_file);
      std::vector<std::string> props =
          check_props.empty() ? table_property_names() : split_names(check_props);
      if (!g.lines()) out << "table k=" << op.k() << " n=" << op.arity() << "\n";
      for (const auto& p : props) out << check_property(op, p).to_line() << "\n";
      out << "NEUTRAL " << element_set(neutral_elements(op)) << "\n";
      out << "ISOLATED " << point_list(isolated_points(op)) << "\n";
      return kExitOk;
    }

    if (*construct) {
      if (*c_max) {
        emit_table(out, max_wrt(parse_ordering(order_text), arity), out_path);
      } else if (*c_gmap) {
        const FiniteChain chain(gm_k);
        emit_table(out, from_gmap(GMap(chain, gm_e, parse_element_list(gm_values)), arity), out_path);
      } else if (*c_lift) {
        emit_table(out, lift_binary(read_nop_file(in_path), arity), out_path);
      } else if (*c_reduce) {
        emit_table(out, reduce_binary(read_nop_file(in_path)), out_path);
      } else if (*c_derive) {
        emit_table(out, iterate_binary(read_nop_file(in_path), arity), out_path);
      } else if (*c_order) {
        out << format_ordering(order_from_binary(read_nop_file(in_path))) << "\n";
      }
      return kExitOk;
    }

    if (*enumerate) {
      const FiniteChain chain(enum_k);
      if (enum_kind == "orderings") {
        const auto ords = enumerate_single_peaked(chain);
        for (const auto& o : ords) out << format_ordering(o) << "\n";
        out << "count=" << ords.size() << "\n";
      } else {
        const auto tables = enumerate_uninorms(chain, enum_n, g.guard);
        for (std::size_t i = 0; i < tables.size(); ++i) out << (i ? "\n" : "") << write_nop(tables[i]);
        out << (tables.empty() ? "" : "\n") << "count=" << tables.size() << "\n";
      }
      return kExitOk;
    }

    if (*verify) {
      SuiteOptions o;
      o.jobs = g.jobs;
      o.enumeration_guard = g.guard;
      o.exhaustive_only = exhaustive;
      o.relax_hypothesis = relax;
      o.seed = seed;
      if (samples) o.samples = *samples;
      const SuiteReport r = run_suite(suite, FiniteChain(v_k), v_n, o);
      if (g.lines()) {
        out << r.to_line() << "\n";
      } else {
        out << r.to_text() << r.to_line() << "\n";
      }
      return r.matches_claim() ? kExitOk : kExitMismatch;
    }

    if (*render) {
      const OpTable op = read_nop_file(render_file);
      out << (render_style == "svg" ? render_svg(op) : render_ascii(op));
      return kExitOk;
    }

    if (*gallery) {
      if (gallery_name.empty()) {
        for (const auto& name : gallery_names()) out << name << "\n";
        return kExitOk;
      }
      const GalleryEntry e = gallery_get(gallery_name, GalleryParams{gal_k, gal_n});
      out << "# " << e.name << ": " << e.description << "\n" << write_nop(e.op);
      out << "# expected profile\n";
      for (const auto& [prop, holds] : e.expected) {
        out << "# " << prop << " " << (holds ? "HOLDS" : "FAILS") << "\n";
      }
      if (e.expected_neutral) out << "# neutral " << element_set(*e.expected_neutral) << "\n";
      if (e.expected_isolated) out << "# isolated " << point_list(*e.expected_isolated) << "\n";
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chainops
