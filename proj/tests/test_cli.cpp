#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "macdual/error.hpp"
#include "macdual_cli/cli.hpp"
#include "macdual_cli/io.hpp"
#include "support.hpp"

using namespace macdual;
using namespace macdual::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "macdual-cli-tests";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string write_curve() {
  const auto path = scratch("curve.ideal");
  cli::write_text(path, kCurveFile);
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) != 0) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("ideal file of the curve") {
  const auto f = cli::parse_ideal_file(kCurveFile);
  CHECK(f.ring->size() == 4);
  CHECK(f.ring->is_local());
  CHECK(f.ring->dimension() == 1);
  CHECK(f.ideal.generators().size() == 5);
  const auto again = cli::parse_ideal_file(cli::print_ideal_file(f));
  CHECK(cli::print_ideal_file(again) == cli::print_ideal_file(f));
  CHECK(equal(again.ideal.in_ring(f.ring), f.ideal));
}

TEST_CASE("minimal ideal file") {
  const auto f = cli::parse_ideal_file("field Q\nring graded vars x\nideal:\nx^2\n");
  CHECK(f.ring->size() == 1);
  CHECK(f.ideal.generators().size() == 1);
  CHECK(f.ideal.generators()[0].to_string() == "x^2");
}

TEST_CASE("ideal file errors carry positions") {
  auto message = [](const std::string& text) {
    try {
      (void)cli::parse_ideal_file(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("ring graded vars x,y\nzvars q\nideal:\nx\n").rfind("2:7:", 0) == 0);
  CHECK(message("ring graded vars x\nideal:\n  x + t\n").rfind("3:7:", 0) == 0);
  CHECK(message("field F12\nring graded vars x\nideal:\n").rfind("1:", 0) == 0);
  CHECK(message("ring graded vars x\n") != "no error");
  CHECK(message("ideal:\nx\n") != "no error");
  CHECK(message("ring affine vars x\nideal:\n") != "no error");
}

TEST_CASE("prime fields in files") {
  const auto a = cli::parse_ideal_file("field F<101>\nring graded vars x\nideal:\nx^2\n");
  const auto b = cli::parse_ideal_file("field F101 # comment\nring graded vars x\nideal:\nx^2\n");
  CHECK(a.ring->field() == Field::prime(101));
  CHECK(b.ring->field() == Field::prime(101));
}

TEST_CASE("socle subcommand") {
  const auto path = write_curve();
  const auto r = run({"socle", "-i", path, "--m", "2"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).size() == 2);
}

TEST_CASE("hilbert subcommand") {
  const auto r = run({"hilbert", "-i", write_curve(), "--json"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "hilbert");
  CHECK(j["diagnostics"]["type"] == 2);
  CHECK(j["ring"]["vars"].size() == 4);
}

TEST_CASE("limit, verify and reconstruct round trip") {
  const auto path = write_curve();
  const auto hpath = scratch("curve.json");
  const auto limit = run({"limit", "-i", path, "--mmax", "7", "-o", hpath});
  REQUIRE(limit.status == 0);
  CHECK(lines(limit.out).size() == 7);

  CHECK(run({"verify", "-i", hpath}).status == 0);
  const auto rpath = scratch("back.ideal");
  const auto rec = run({"reconstruct", "-i", hpath, "-o", rpath});
  REQUIRE(rec.status == 0);
  const auto back = cli::parse_ideal_file(cli::read_text(rpath));
  const auto original = curve_ideal(back.ring);
  for (const auto& g : original.generators()) CHECK(contains(back.ideal, g));
  CHECK(equal(back.ideal, original));

  const auto j = nlohmann::json::parse(cli::read_text(hpath));
  const auto sys = cli::limit_system_from_json(j);
  CHECK(cli::limit_system_to_json(sys) == j);
}

TEST_CASE("tampered limit system is rejected with the condition named") {
  const auto hpath = scratch("tampered.json");
  REQUIRE(run({"limit", "-i", write_curve(), "--mmax", "3", "-o", hpath}).status == 0);
  auto j = nlohmann::json::parse(cli::read_text(hpath));
  j["family"][1]["H"][0] = "0";
  cli::write_text(hpath, j.dump());
  const auto v = run({"verify", "-i", hpath});
  CHECK(v.status == 1);
  CHECK(v.out.find("FAIL") != std::string::npos);
  const auto r = run({"reconstruct", "-i", hpath});
  CHECK(r.status == 1);
  CHECK(r.err.find("condition") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const auto path = write_curve();
  const auto a = run({"limit", "-i", path, "--mmax", "4", "--json"});
  const auto b = run({"limit", "-i", path, "--mmax", "4", "--json", "--jobs", "2"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  const auto path = write_curve();
  CHECK(run({}).status == 2);
  CHECK(run({"socle"}).status == 2);
  CHECK(run({"socle", "-i", scratch("missing.ideal")}).status == 2);
  CHECK(run({"socle", "-i", path, "--m", "1,1"}).status == 2);
  CHECK(run({"socle", "-i", path, "--field", "reals"}).status == 2);
  CHECK(run({"--help"}).status == 0);
  const auto flat = scratch("flat.ideal");
  cli::write_text(flat, "ring graded vars x,y\nideal:\nx^2\n");
  const auto r = run({"perp", "-i", flat});
  CHECK(r.status == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("reduce subcommand") {
  const auto path = write_curve();
  const auto r = run({"reduce", "-i", path, "--poly", "x^3 - y*z"});
  CHECK(r.status == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"0"});
  CHECK(run({"reduce", "-i", path, "--m", "1"}).status == 0);
}

TEST_CASE("rees-check subcommand") {
  const auto path = write_curve();
  const auto r = run({"rees-check", "-i", path, "--l", "2"});
  CHECK(r.status == 0);
  CHECK(lines(r.out).size() == 3);
  const auto bad = scratch("bad.ideal");
  cli::write_text(bad, "ring graded vars x,y\nideal:\nx*y\n");
  CHECK(run({"rees-check", "-i", bad, "--g", "x"}).status == 1);
}

TEST_CASE("monoid-socle subcommand") {
  const auto r = run({"monoid-socle", "--gens", "2,0;0,3"});
  CHECK(r.status == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"(1,2)"});
  CHECK(run({"monoid-socle", "--gens", "2,0;1"}).status == 2);
}

TEST_CASE("field override") {
  const auto r = run({"hilbert", "-i", write_curve(), "--field", "fp:32003", "--json"});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["ring"]["field"] == "F32003");
}
