#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run shell(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Run cli(const std::string& args) { return shell(std::string(FWCODEC_CLI) + " " + args + " 2>/dev/null"); }

std::string data(const char* name) { return std::string(FWCODEC_TEST_DATA) + "/" + name; }

const std::string kPair = "--dist1 " + data("small_first.json") + " --dist2 " + data("small_second.json");
const std::string kScheme = "--scheme " + data("small_scheme.json");

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count-codes") {
  CHECK(cli("count-codes --n 10").out == "50\n");
  auto r = cli("--json count-codes --n 4 --list");
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["vectors"].size() == 2);
}

TEST_CASE("reference scheme: eval, encode, decode") {
  auto r = cli("eval " + kScheme + " " + kPair);
  CHECK(r.status == 0);
  CHECK(r.out == "0.93\n");
  CHECK(cli("decode " + kScheme + " --word 1100").out == "d x\n");
  CHECK(cli("encode " + kScheme + " --first d --second x").out == "1100\n");
  CHECK(cli("encode " + kScheme + " --first d --second y").out == "failure\n");
  CHECK(cli("encode " + kScheme + " --first a --second x").out == "0000\n");
  auto j = nlohmann::json::parse(cli("--json decode " + kScheme + " --word 0110").out);
  CHECK(j["first"] == "b");
  CHECK(j["second"] == "y");
}

TEST_CASE("optimize-pair writes a usable scheme and the F/Q table") {
  std::string scheme = "fwcodec_cli_test_scheme.json";
  std::string table = "fwcodec_cli_test_table.csv";
  auto r = cli("--json optimize-pair " + kPair + " --width 4 -o " + scheme + " --dump-table " + table);
  REQUIRE(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["p_success"].get<double>() - 0.972) < 1e-9);
  CHECK(cli("eval --scheme " + scheme + " " + kPair).out == "0.972\n");
  CHECK(cli("decode --scheme " + scheme + " --word 0110").out == "b y\n");

  std::ifstream csv(table);
  std::string header, line, last;
  std::getline(csv, header);
  CHECK(header == "N,F_k1,Q_k1,F_k2,Q_k2,F_k3,Q_k3,F_k4,Q_k4,F_k5,Q_k5");
  int rows = 0;
  while (std::getline(csv, line)) {
    last = line;
    ++rows;
  }
  CHECK(rows == 17);
  CHECK(last == "16,,,,,,,0.94,\"(2,2,2,2)\",0.972,\"(2,2,2,3,3)\"");
  std::remove(scheme.c_str());
  std::remove(table.c_str());
}

TEST_CASE("optimize-shared, baseline, oracles") {
  auto r = cli("--json optimize-shared --dist " + data("heavy_tail.json") + " --width 6");
  auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["p_success"].get<double>() - 0.88) < 1e-9);
  CHECK(doc["codewords"][10]["bits"].is_null());

  auto b = cli("baseline " + kPair + " --width 4");
  CHECK(b.out.find("huffman 0.78\n") != std::string::npos);
  CHECK(cli("baseline --dist1 " + data("heavy_tail.json") + " --width 6").out.find("naive-fixed 0.8649") !=
        std::string::npos);

  auto o = cli("oracle-pair " + kPair + " --width 4");
  CHECK(o.status == 0);
  CHECK(o.out == "L=4 oracle 0.972 dp 0.972\n");
  auto rs = cli("oracle-shared --random 15 --seed 3");
  CHECK(rs.status == 0);
  CHECK(rs.out.find("15 instances, 0 mismatches") != std::string::npos);
  CHECK(cli("oracle-pair --random 10 --seed 9").out == cli("oracle-pair --random 10 --seed 9").out);
}

TEST_CASE("sweep output is byte-identical across runs") {
  std::string args = "sweep --mode pair --n 32 --mu 0.8 --mu2 2 --L-min 2 --L-max 7 --baseline huffman,naive-fixed";
  auto a = cli(args);
  auto b = shell("FWCODEC_THREADS=1 " + std::string(FWCODEC_CLI) + " " + args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("pair,32,32,0.8,2,2,huffman,0,\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli("").status == 1);
  CHECK(cli("frobnicate").status == 1);
  CHECK(cli("count-codes").status == 1);
  CHECK(cli("count-codes --n 0").status == 1);
  CHECK(cli("decode " + kScheme + " --word 1111").status == 1);
  CHECK(cli("eval --scheme " + data("missing.json") + " " + kPair).status == 1);
  CHECK(cli("optimize-shared --dist " + data("heavy_tail.json") + " --width 1").status == 1);
  CHECK(cli("oracle-pair --dist1 " + data("heavy_tail.json") + " --dist2 " + data("heavy_tail.json") + " --width 4").status == 2);
  CHECK(cli("optimize-pair " + kPair + " --width 63").status == 2);
  CHECK(cli("sweep --mode shared --n 4 --mu 1 --L-min 1 --L-max 2").status == 2);
  CHECK(cli("--help").status == 0);
}

}  // TEST_SUITE
