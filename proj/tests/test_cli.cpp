#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QCONG_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string last_line(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  const auto pos = t.rfind('\n');
  return pos == std::string::npos ? t : t.substr(pos + 1);
}

}  // namespace

TEST_CASE("count: R*_2(3) = 6") {
  const auto r = run("count --kind rstar --ell 2 --upto 3");
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "3 6");
  CHECK(r.out == "0 1\n1 2\n2 3\n3 6\n");
  const auto j = run("count --kind pbar --upto 3 --format json");
  CHECK(j.status == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["values"] == nlohmann::json::array({1, 2, 4, 8}));
}

TEST_CASE("expand: sparse pentagonal output") {
  const auto r = run("expand --eta 1:1 --order 8");
  CHECK(r.status == 0);
  CHECK(r.out == "0 1\n1 -1\n2 -1\n5 1\n7 1\n");
  const auto d = run("expand --eta 2:1 --order 4 --dense");
  CHECK(d.out == "0 1\n1 0\n2 -1\n3 0\n");
  const auto m = run("expand --ell 2 --order 5 --modulus 4 --format json");
  // R*_2: 1, 2, 3, 6, 9
  CHECK(m.out == "[1,2,3,2,1]\n");
  CHECK(run("expand --eta 1:1 --ell 2").status == 2);
  CHECK(run("expand --eta 0:1").status == 2);
}

TEST_CASE("verify-theorem thm3.5: every claim passes, JSON round-trips") {
  const auto r = run("verify-theorem --family thm3.5 --terms 500 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);
  for (const auto& rep : j) {
    CHECK(rep["status"] == "pass");
    CHECK(rep["terms_checked"] == 500);
    CHECK(rep["counterexamples"].empty());
  }
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("verify-theorem: failing and ineligible runs") {
  const auto fail = run("verify-theorem --family thm3.3.i --alpha 1 --variant over_two --terms 50 "
                        "--format json");
  CHECK(fail.status == 1);
  const auto j = nlohmann::ordered_json::parse(fail.out);
  CHECK(j[0]["status"] == "fail");
  CHECK(!j[0]["counterexamples"].empty());
  CHECK(j.dump(2) + "\n" == fail.out);

  CHECK(run("verify-theorem --family thm3.1.ii --p 7").status == 2);
  CHECK(run("verify-theorem --family thm3.4 --p 5").status == 2);
  CHECK(run("verify-theorem --family thm9.9").status == 2);
  CHECK(run("verify-theorem --family thm3.7.ii --p 5 --alpha 1 --terms 100 --max-order 1000")
            .status == 2);
  CHECK(run("verify-theorem --family thm3.1 --p 13 --terms 11").status == 0);
}

TEST_CASE("verify-theorem: prime families default to the smallest eligible prime") {
  const auto r = run("verify-theorem --family thm3.7.ii --terms 20 --format json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 4);
  CHECK(j[0]["params"]["p"] == 5);
  CHECK(j[0]["progression"]["step"] == 200);
  CHECK(j[0]["progression"]["offset"] == 73);
}

TEST_CASE("verify-theorem: intermediates") {
  const auto r = run("verify-theorem --intermediate all --terms 300");
  CHECK(r.status == 0);
  CHECK(r.out.find("fail") == std::string::npos);
  CHECK(run("verify-theorem --intermediate r8_2n1_exact --terms 100").status == 0);
}

TEST_CASE("verify-lemma") {
  CHECK(run("verify-lemma --id F1SQ_2DISS --order 200").status == 0);
  CHECK(run("verify-lemma --id PSI_PDISSECT --p 3 --order 200").status == 0);
  CHECK(run("verify-lemma --id PSI_PDISSECT --p 2").status == 2);
  CHECK(run("verify-lemma --id F1_PDISSECT --p 3").status == 2);
  const auto all = run("verify-lemma --all --format json");
  CHECK(all.status == 0);
  const auto j = nlohmann::ordered_json::parse(all.out);
  CHECK(j.size() >= 25);
  CHECK(j.dump(2) + "\n" == all.out);
}

TEST_CASE("output is identical across thread counts") {
  const std::string args = "verify-theorem --family thm3.6 --terms 300 --format json";
  const auto a = run(args, "QCONG_THREADS=1");
  const auto b = run(args, "QCONG_THREADS=3");
  const std::regex timing("\"wall_time_us\": [0-9]+");
  CHECK(std::regex_replace(a.out, timing, "") == std::regex_replace(b.out, timing, ""));
}

TEST_CASE("search") {
  const auto r = run("search --ell 4 --max-step 4 --max-modulus 4 --order 500");
  CHECK(r.status == 0);
  CHECK(r.out.find("4n+2 mod 4") != std::string::npos);
  CHECK(r.out.find("4n+3 mod 4") != std::string::npos);
  const auto j = run("search --ell 8 --max-step 8 --max-modulus 8 --order 500 --format json");
  const auto parsed = nlohmann::json::parse(j.out);
  int hits = 0;
  for (const auto& c : parsed) {
    if (c["progression"]["step"] == 8 && c["modulus"] == 8) {
      const auto b = c["progression"]["offset"].get<int>();
      if (b == 3 || b == 5 || b == 7) ++hits;
    }
  }
  CHECK(hits == 3);
}

TEST_CASE("verify-all restricted to one criterion") {
  const auto r = run("verify-all --criterion 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS  criterion 2", 0) == 0);
}

TEST_CASE("argument errors exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("count --kind nope").status == 2);
  CHECK(run("count --format xml").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("--output writes a file") {
  const std::string path = "qcong_cli_test_output.txt";
  std::remove(path.c_str());
  const auto r = run("count --kind p --upto 5 --output " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "0 1\n1 1\n2 2\n3 3\n4 5\n5 7\n");
  std::remove(path.c_str());
}
