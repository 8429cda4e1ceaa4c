// Runs the bqf binary and compares stdout and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run bqf(const std::string& args) {
  const std::string cmd = std::string(BQF_BINARY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) out += buf.data();
  const int status = pclose(p);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli disc") {
  const Run r = bqf(R"(disc '{"a":2,"b":1,"c":3,"ring":{"ring":"int"}}')");
  CHECK(r.code == 0);
  CHECK(r.out == R"({"classical":-23,"paper":23})");
}

TEST_CASE("cli compose") {
  const Run r = bqf("compose --proper-reduce '[2,1,3]' '[2,1,3]'");
  CHECK(r.code == 0);
  CHECK(r.out == R"({"a":2,"b":-1,"c":3,"ring":{"ring":"int"}})");
  CHECK(bqf("compose --dirichlet '[2,1,3]' '[2,1,3]'").out == R"({"a":4,"b":5,"c":3,"ring":{"ring":"int"}})");
  CHECK(bqf("compose '[1,0,1]' '[1,1,1]'").code == 2);
  CHECK(bqf("inverse --proper-reduce '[2,1,3]'").out == R"({"a":2,"b":-1,"c":3,"ring":{"ring":"int"}})");
  CHECK(bqf(R"(identity '{"t":1,"nm":6}')").out == R"({"a":1,"b":1,"c":6,"ring":{"ring":"int"}})");
}

TEST_CASE("cli similar") {
  Run r = bqf(R"(similar '{"a":1,"b":0,"c":1}' '{"a":1,"b":1,"c":1}')");
  CHECK(r.code == 2);
  CHECK(r.out == R"({"reason":"discriminant","verdict":"not_similar"})");
  r = bqf("similar '[4,5,3]' '[2,-1,3]'");
  CHECK(r.code == 0);
  // Indefinite, no obstruction and no witness in the search box.
  r = bqf("similar '[1,0,-29]' '[5,4,-5]'");
  CHECK(r.code == 3);
  CHECK(r.out == R"({"bound":12,"verdict":"unknown"})");
}

TEST_CASE("cli usage and parse errors") {
  CHECK(bqf("").code == 1);
  CHECK(bqf("frobnicate").code == 1);
  CHECK(bqf(R"(disc '{"a":2,')").code == 1);
  CHECK(bqf("disc '[1,2]'").code == 1);
  CHECK(bqf("reduce '[1,0,-1]'").code == 2);
}

TEST_CASE("cli class groups") {
  const Run r = bqf("picard -- -23");
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("oriented":3)") != std::string::npos);
  CHECK(r.out.find(R"("unoriented":2)") != std::string::npos);
  CHECK(bqf("classgroup -- -47").out.find(R"("invariant_factors":[5])") != std::string::npos);
  CHECK(bqf("classgroup -- -5").code == 2);
}

TEST_CASE("cli other verbs") {
  CHECK(bqf("wood '[2,1,3]'").out == R"({"a":3,"b":-1,"c":2,"ring":{"ring":"int"}})");
  CHECK(bqf("form2pair '[2,1,3]'").out == R"({"alg":{"nm":6,"t":1},"m":[[1,3],[-2,0]],"ring":{"ring":"int"}})");
  CHECK(bqf(R"(pair2form '{"alg":{"t":9,"nm":20},"m":[[7,6],[-1,2]]}')").out ==
        R"({"a":1,"b":5,"c":6,"ring":{"ring":"int"}})");
  CHECK(bqf(R"(traceable '{"alg":{"t":1,"nm":0},"m":[[1,0],[0,1]]}')").out == R"({"traceable":false})");
  CHECK(bqf("dualconic --ring rat '[1,4,4]'").out ==
        R"({"a":{"den":1,"num":4},"b":{"den":1,"num":-4},"c":{"den":1,"num":1},"ring":{"ring":"rat"}})");
  CHECK(bqf("quat '[1,0,1]' '[0,0,1,0]' '[0,0,0,1]'").out == "[0,1,0,0]");
  CHECK(bqf("quat --op norm '[1,0,1]' '[0,1,0,0]'").out == "1");
  CHECK(bqf("basechange --to mod:7 '[2,1,3]'").code == 0);
  CHECK(bqf("normform '[2,1,3]'").out.find(R"("universal":{"a":2,"b":1,"c":3)") != std::string::npos);
  CHECK(bqf("similar --ring mod:7 '[1,0,1]' '[2,0,2]'").code == 0);
  CHECK(bqf("verify --filter class_numbers").code == 0);
}
