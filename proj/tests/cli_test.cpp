#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + QCHOM_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qchom_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("count") {
  CHECK(run("count --family cycle --n 5 --m 3").out == "0\n");
  CHECK(run("count --family path --n 3 --m 3 --method bruteforce").out == "6\n");
  const auto j = run("count --family wheel --n 4 --m 4 --format json");
  CHECK(j.code == 0);
  CHECK(j.out == "{\"family\":\"wheel\",\"n\":4,\"m\":4,\"class\":\"hom\",\"method\":\"closed\",\"count\":\"20\"}\n");
  CHECK(run("count --family quasi-complete --n 3 --m 3 --class bij").out == "2\n");
}

TEST_CASE("methods agree") {
  for (const char* fam : {"path", "cycle", "broken-wheel", "wheel"})
    for (int n = 4; n <= 6; ++n) {
      const std::string base = std::string("count --family ") + fam + " --n " + std::to_string(n) + " --m 4";
      const auto closed = run(base);
      CHECK(closed.code == 0);
      CHECK(run(base + " --method bruteforce").out == closed.out);
      CHECK(run(base + " --method transfer").out == closed.out);
    }
}

TEST_CASE("count errors") {
  CHECK(run("count --family complete --n 3 --m 4 --method transfer").code == 2);
  CHECK(run("count --family cycle --n 3 --m 4").code == 2);
  CHECK(run("count --family path --n 3 --m 2").code == 2);
  CHECK(run("count --family star --n 3 --m 4").code == 2);
  CHECK(run("count --family wheel --n 4 --m 4 --class inj").code == 2);
  CHECK(run("count --family path --m 4").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("profile") {
  CHECK(run("profile --m 3 --families path --n-max 2").out == "family,n,m,class,method,count\npath,2,3,hom,closed,4\n");

  const auto cycles = run("profile --m 3 --families cycle --n-max 6");
  CHECK(cycles.out ==
        "family,n,m,class,method,count\ncycle,4,3,hom,closed,8\ncycle,5,3,hom,closed,0\ncycle,6,3,hom,closed,"
        + run("count --family cycle --n 6 --m 3 --method bruteforce").out);

  CHECK(run("profile --m 4 --families complete --n-max 5").out.find("complete,5,4,hom,closed,0\n") !=
        std::string::npos);

  const auto file = scratch("profile.json");
  CHECK(run("profile --m 4 --families wheel,path --n-max 4 --format json --out " + file.string()).code == 0);
  const auto text = slurp(file);
  CHECK(text.find("\"family\": \"path\"") != std::string::npos);
  CHECK(text.find("\"count\": \"20\"") != std::string::npos);

  CHECK(run("profile --m 3 --families cycle --n-max 6 --out /nonexistent-dir/x.csv").code == 3);
  CHECK(run("profile --m 3 --families cycle,nope --n-max 6").code == 2);
}

TEST_CASE("profile output is deterministic") {
  const std::string args = "profile --m 5 --families path,cycle,wheel,broken-wheel --n-max 10 --format csv";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("poly") {
  CHECK(run("poly --kind p --i 1").out == "[-2, 1]  (= -2 + 1*m)\n");
  CHECK(run("poly --kind p --i 0").out.rfind("[1]", 0) == 0);
  const auto q2 = run("poly --kind q --i 2 --eval 3");
  CHECK(q2.code == 0);
  CHECK(q2.out.substr(q2.out.size() - 4) == ": 2\n");
  CHECK(run("poly --kind p --i -1").code == 2);
  CHECK(run("poly --kind r --i 1").code == 2);
}

TEST_CASE("small verify run") {
  const auto errata = scratch("errata.csv");
  const auto v = run("verify --n-max 4 --m-max 4 --transfer-n-max 8 --transfer-m-max 6 --poly-i-max 16 --errata " +
                     errata.string());
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("all properties ok") != std::string::npos);
  const auto csv = slurp(errata);
  CHECK(csv.rfind("family,n,m,k,printed_value,normative_value,oracle_value\n", 0) == 0);
  CHECK(csv.find("\npath,4,3,1,6,10,10\n") != std::string::npos);
}
