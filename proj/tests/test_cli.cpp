#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chainops/cli.hpp"
#include "chainops/constructors.hpp"
#include "chainops/gallery.hpp"
#include "chainops/nop.hpp"

using namespace chainops;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "chainops_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("construct max writes the left panel") {
  const auto r = cli({"construct", "max", "--order", "3,2,4,1", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(parse_nop(r.out) == gallery_get("fig1_left").op);
}

TEST_CASE("construct gmap gives the same table") {
  const auto r = cli({"construct", "gmap", "--k", "4", "--e", "3", "--g", "4,3,3", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(parse_nop(r.out) == gallery_get("fig1_left").op);
  CHECK(cli({"construct", "gmap", "--k", "4", "--e", "3", "--g", "3,4,3"}).code == 2);
}

TEST_CASE("construct from files: lift, reduce, derive, order") {
  const auto bin = scratch("bin.nop");
  const auto tern = scratch("tern.nop");
  const OpTable mx = max_wrt(LinearOrdering(FiniteChain(3), {2, 3, 1}), 2);
  write_nop_file(bin, mx);
  CHECK(cli({"construct", "lift", "--in", bin.string(), "--n", "3", "--out", tern.string()}).code == 0);
  CHECK(read_nop_file(tern) == max_wrt(LinearOrdering(FiniteChain(3), {2, 3, 1}), 3));

  const auto red = cli({"construct", "reduce", "--in", tern.string()});
  CHECK(red.code == 0);
  CHECK(parse_nop(red.out) == mx);

  const auto der = cli({"construct", "derive", "--in", bin.string(), "--n", "3"});
  CHECK(parse_nop(der.out) == read_nop_file(tern));

  const auto ord = cli({"construct", "order", "--in", bin.string()});
  CHECK(ord.out == "2,3,1\n");

  CHECK(cli({"construct", "reduce", "--in", scratch("missing.nop").string()}).code == 2);
  CHECK(cli({"construct", "order", "--in", tern.string()}).code == 2);
}

TEST_CASE("check prints one PROP line per property") {
  const auto path = scratch("fig.nop");
  write_nop_file(path, gallery_get("fig1_left").op);
  const auto r = cli({"--format", "lines", "check", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("PROP quasitrivial HOLDS") != std::string::npos);
  CHECK(r.out.find("PROP associative HOLDS") != std::string::npos);
  CHECK(r.out.find("NEUTRAL {3}") != std::string::npos);
  CHECK(r.out.find("ISOLATED (3,3)") != std::string::npos);
  CHECK(r.out.rfind("PROP", 0) == 0);

  const auto med = scratch("median.nop");
  write_nop_file(med, gallery_get("median3", {2, std::nullopt}).op);
  const auto m = cli({"check", med.string(), "--props", "associative"});
  CHECK(m.code == 0);
  CHECK(m.out.find("PROP associative FAILS args=") != std::string::npos);
  CHECK(cli({"check", med.string(), "--props", "bogus"}).code == 2);
}

TEST_CASE("check reports parse errors with a position") {
  const auto path = scratch("truncated.nop");
  std::ofstream(path) << "NOP 1\nk=3 n=2\n1 2 3\n";
  const auto r = cli({"check", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4, column 1") != std::string::npos);
}

TEST_CASE("enumerate") {
  const auto o = cli({"enumerate", "orderings", "--k", "3"});
  CHECK(o.code == 0);
  CHECK(o.out == "1,2,3\n2,1,3\n2,3,1\n3,2,1\ncount=4\n");
  CHECK(cli({"enumerate", "orderings", "--k", "1"}).out == "1\ncount=1\n");

  const auto u = cli({"enumerate", "uninorms", "--k", "4", "--n", "2"});
  CHECK(u.code == 0);
  CHECK(u.out.find("count=8\n") != std::string::npos);
  std::size_t blocks = 0;
  for (std::size_t p = u.out.find("NOP 1"); p != std::string::npos; p = u.out.find("NOP 1", p + 1)) ++blocks;
  CHECK(blocks == 8);

  CHECK(cli({"--guard", "100", "enumerate", "uninorms", "--k", "5", "--n", "3"}).code == 3);
  CHECK(cli({"enumerate", "shapes", "--k", "3"}).code == 2);
}

TEST_CASE("verify exit codes") {
  const auto ok = cli({"--format", "lines", "verify", "main2", "--k", "3", "--n", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "SUITE main2 k=3 n=2 pop=4 verdict=holds\n");

  const auto relaxed = cli({"verify", "prop21ft", "--k", "3", "--n", "2", "--relax"});
  CHECK(relaxed.code == 0);
  CHECK(relaxed.out.find("verdict=fails") != std::string::npos);

  // No counterexample exists on L_2, so the relaxed claim is not reproduced.
  CHECK(cli({"verify", "cor24f", "--k", "2", "--n", "2", "--relax"}).code == 1);

  CHECK(cli({"verify", "prop21ft", "--k", "4", "--n", "2", "--exhaustive"}).code == 3);
  const auto sampled = cli({"--jobs", "2", "verify", "prop21ft", "--k", "4", "--n", "2", "--samples", "200"});
  CHECK(sampled.code == 0);
  CHECK(sampled.out.find("non-exhaustive") != std::string::npos);
  CHECK(cli({"verify", "nope", "--k", "3"}).code == 2);
  CHECK(cli({"verify", "main2"}).code == 2);
}

TEST_CASE("render") {
  const auto path = scratch("left.nop");
  write_nop_file(path, gallery_get("fig1_left").op);
  const auto a = cli({"render", path.string()});
  CHECK(a.code == 0);
  CHECK(a.out == cli({"render", path.string(), "ascii"}).out);
  const auto s = cli({"render", path.string(), "svg"});
  CHECK(s.out.rfind("<svg", 0) == 0);
  CHECK(cli({"render", path.string(), "png"}).code == 2);

  const auto quad = scratch("quad.nop");
  write_nop_file(quad, OpTable(FiniteChain(2), 4, std::vector<Element>(16, 1)));
  CHECK(cli({"render", quad.string()}).code == 2);
}

TEST_CASE("gallery output is a valid NOP file followed by its profile") {
  const auto r = cli({"gallery", "mod2_sum"});
  CHECK(r.code == 0);
  CHECK(parse_nop(r.out) == gallery_get("mod2_sum").op);
  CHECK(r.out.find("# neutral {1,2}") != std::string::npos);
  CHECK(r.out.find("# quasitrivial HOLDS") != std::string::npos);
  CHECK(parse_nop(cli({"gallery", "median3", "--k", "2"}).out).k() == 2);
  CHECK(count_lines(cli({"gallery"}).out) == gallery_names().size());
  CHECK(cli({"gallery", "nope"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({"--jobs", "0", "verify", "main2", "--k", "2"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
