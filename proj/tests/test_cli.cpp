#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tilekit/cli.hpp"
#include "tilekit/json_io.hpp"

using namespace tilekit;

namespace {

struct CliResult {
  int exit_code;
  Json out;
};

CliResult run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"tilekit"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream captured;
  auto* old = std::cout.rdbuf(captured.rdbuf());
  int code = dispatch(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old);
  Json j;
  if (!captured.str().empty()) j = Json::parse(captured.str());
  return {code, j};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("tiles-z verdicts and exit codes") {
  auto pos = run({"tiles-z", "--set", "0,2,3,5"});
  CHECK(pos.exit_code == 0);
  CHECK(pos.out.at("verdict") == "tile");
  CHECK(pos.out.at("certificate").at("period") == "4");
  CHECK(pos.out.at("cyclotomic_divisors") == Json::array({"2", "4", "6"}));

  auto neg = run({"tiles-z", "--set", "0,1,3"});
  CHECK(neg.exit_code == 1);
  CHECK(neg.out.at("verdict") == "non-tile");

  auto capped = run({"tiles-z", "--set", "0,40", "--method", "stategraph"});
  CHECK(capped.exit_code == 2);
  CHECK(capped.out.at("verdict") == "capped");
}

TEST_CASE("byte-identical output across runs") {
  std::ostringstream a, b;
  for (auto* sink : {&a, &b}) {
    std::vector<const char*> argv{"tilekit", "tiles-z", "--set", "0,2,3,5"};
    auto* old = std::cout.rdbuf(sink->rdbuf());
    dispatch(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
  }
  CHECK(a.str() == b.str());
  CHECK_FALSE(a.str().empty());
}

TEST_CASE("emitted certificate re-verifies via --verify") {
  auto pos = run({"tiles-z", "--set", "0,2,3,5"});
  const char* path = "cli_roundtrip_cert.json";
  {
    std::ofstream f(path);
    f << pos.out.dump();
  }
  auto ver = run({"tiles-z", "--verify", path});
  CHECK(ver.exit_code == 0);
  CHECK(ver.out.at("verdict") == "verified");
  std::remove(path);
}

TEST_CASE("seed is rejected, threads accepted") {
  CHECK(run({"--seed", "42", "good-group", "--n", "12"}).exit_code == 64);
  CHECK(run({"--threads", "4", "good-group", "--n", "12"}).exit_code == 0);
}

TEST_CASE("good-group output") {
  auto good = run({"good-group", "--n", "12"});
  CHECK(good.exit_code == 0);
  CHECK(good.out.at("verdict") == "good");
  CHECK(good.out.at("pattern") == "p^m q");
  auto bad = run({"good-group", "--n", "72"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.at("verdict") == "not-good");
}

TEST_CASE("complements command") {
  auto r = run({"complements", "--n", "12", "--set", "0,2,3,5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.at("verdict") == "found");
  bool has = false;
  for (const auto& t : r.out.at("tilings"))
    has = has || t.at("B") == Json::array({"0", "4", "8"});
  CHECK(has);
}

TEST_CASE("tiles-z2 command with verify round trip") {
  auto yes = run({"tiles-z2", "--points", "0,0;2,0;0,2;2,2"});
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.at("verdict") == "YES");
  CHECK(yes.out.at("certificate").at("a") == "4");
  const char* path = "cli_roundtrip_z2.json";
  {
    std::ofstream f(path);
    f << yes.out.dump();
  }
  CHECK(run({"tiles-z2", "--verify", path}).exit_code == 0);
  std::remove(path);

  auto no = run({"tiles-z2", "--points", "0,0;1,0;3,0"});
  CHECK(no.exit_code == 1);
  CHECK(no.out.at("verdict") == "NO");

  auto single = run({"tiles-z2", "--points", "0,0", "--max-n", "1"});
  CHECK(single.exit_code == 0);
}

TEST_CASE("bricks command") {
  auto r = run({"bricks", "--a", "1/2x1/3", "--b", "1/3x1/6", "--construct"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.at("verdict") == "tileable");
  const char* path = "cli_roundtrip_bricks.json";
  {
    std::ofstream f(path);
    f << r.out.dump();
  }
  CHECK(run({"bricks", "--verify", path}).exit_code == 0);
  std::remove(path);
  CHECK(run({"bricks", "--a", "1/3x2/5", "--b", "2/5x1/2"}).exit_code == 1);
}

TEST_CASE("hadamard / butson / spectral commands") {
  CHECK(run({"hadamard", "--fourier", "6"}).exit_code == 0);
  auto bu = run({"butson", "--k", "3", "--q", "2"});
  CHECK(bu.exit_code == 1);
  CHECK(bu.out.at("count") == "0");
  auto sp = run({"spectral", "--n", "6", "--d", "1", "--set", "0,1,2"});
  CHECK(sp.exit_code == 0);
  CHECK(sp.out.at("Q") == Json::array({"0", "2", "4"}));
  CHECK(sp.out.at("tiles") == true);
  auto nosp = run({"spectral", "--n", "6", "--d", "1", "--set", "0,1,3"});
  CHECK(nosp.exit_code == 1);
}

TEST_CASE("hadamard --check round trip on a Butson file") {
  auto bu = run({"butson", "--k", "6", "--q", "3", "--limit", "1"});
  REQUIRE(bu.exit_code == 0);
  const char* path = "cli_roundtrip_butson.json";
  {
    std::ofstream f(path);
    f << bu.out.at("matrices").at(0).dump();
  }
  auto chk = run({"hadamard", "--check", path});
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.at("verdict") == "hadamard");
  std::remove(path);
}

TEST_CASE("spectral nontile demo and verify round trip") {
  auto demo = run({"spectral", "--nontile-demo"});
  CHECK(demo.exit_code == 0);
  CHECK(demo.out.at("verdict") == "spectral-non-tile");
  CHECK(demo.out.at("tiles") == false);
  CHECK(demo.out.at("power_spectrum_holds") == true);
  const char* path = "cli_roundtrip_spectral.json";
  {
    std::ofstream f(path);
    f << demo.out.dump();
  }
  CHECK(run({"spectral", "--verify", path}).exit_code == 0);
  std::remove(path);
}

TEST_CASE("fuglede-sweep agreement at small scale") {
  auto r = run({"fuglede-sweep", "--max-n", "8"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.at("verdict") == "agreement");
  CHECK(r.out.at("checked") == "502");  // sum over n <= 8 of 2^n - 1
}

TEST_CASE("vuza command: good group is empty, verify round trip at 72") {
  auto empty = run({"vuza", "--n", "12"});
  CHECK(empty.exit_code == 1);
  CHECK(empty.out.at("verdict") == "none");
}

TEST_CASE("complements verify round trip") {
  auto r = run({"complements", "--n", "12", "--set", "0,2,3,5"});
  REQUIRE(r.exit_code == 0);
  const char* path = "cli_roundtrip_complements.json";
  {
    std::ofstream f(path);
    f << r.out.dump();
  }
  CHECK(run({"complements", "--verify", path}).exit_code == 0);
  std::remove(path);
}

TEST_CASE("steinhaus command") {
  auto r = run({"steinhaus", "--check", "--N", "2000", "--samples", "10"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.at("verdict") == "ok");
}

TEST_CASE("state budget cap from the environment") {
  setenv("TILEKIT_MAX_STATES", "16", 1);
  auto capped = run({"tiles-z", "--set", "0,2,3,5,9", "--method", "stategraph"});
  CHECK(capped.exit_code == 2);
  CHECK(capped.out.at("verdict") == "capped");
  unsetenv("TILEKIT_MAX_STATES");
  CHECK(run({"tiles-z", "--set", "0,2,3,5,9", "--method", "stategraph"}).exit_code == 1);
}

TEST_CASE("aperiodic command writes a coverage-checked window") {
  auto r = run({"aperiodic", "--radius", "10"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.at("verdict") == "generated");
}

TEST_CASE("usage errors") {
  CHECK(run({"no-such-command"}).exit_code == 64);
  CHECK(run({"complements", "--set", "0,1"}).exit_code == 64);  // missing --n
}

TEST_SUITE_END();
