#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Temporary cache directory, removed with the object.
struct TempDir {
  fs::path path;
  TempDir() {
    std::string tmpl = (fs::temp_directory_path() / "sqh-cli-XXXXXX").string();
    REQUIRE(mkdtemp(tmpl.data()) != nullptr);
    path = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

Run cli(const std::string& args, const fs::path& cache) {
  std::string cmd = std::string(SQH_CLI_PATH) + " " + args + " --cache-dir '" + cache.string() + "' 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("present") {
  TempDir tmp;
  Run latex = cli("present --family A --rank 3 --format latex", tmp.path);
  CHECK(latex.code == 0);
  CHECK(latex.out.find("\\chi_{1}") != std::string::npos);
  CHECK(latex.out.find("\\hbar") != std::string::npos);

  Run d2 = cli("present --family D --rank 2 --format json", tmp.path);
  REQUIRE(d2.code == 0);
  auto j = nlohmann::json::parse(d2.out);
  CHECK(j["meta"]["version"].is_string());
  CHECK(j["meta"]["config"]["family"] == "D");
  CHECK(j["meta"]["config"]["rank"] == 2);
  CHECK(d2.out.find("det A(chi)") != std::string::npos);
  CHECK(j["payload"]["chi"].size() == 2);

  CHECK(cli("present --family A --rank 0", tmp.path).code == 2);
  CHECK(cli("present --family E --rank 2", tmp.path).code == 2);
  CHECK(cli("present --family D --rank 1", tmp.path).code == 2);
}

TEST_CASE("verify") {
  TempDir tmp;
  Run m = cli("verify --suite matching --rank 4", tmp.path);
  CHECK(m.code == 0);
  CHECK(m.out.find("PASS") != std::string::npos);

  Run t = cli("verify --suite traces --family B --rank 2 --k 2", tmp.path);
  CHECK(t.code == 0);
  CHECK(t.out.find("B2 lambda=-e1 k=2") != std::string::npos);
  CHECK(t.out.find("FAIL") == std::string::npos);

  CHECK(cli("verify --suite toda --family A --rank 3", tmp.path).code == 0);

  Run j = cli("verify --suite matching --rank 3 --format json", tmp.path);
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["meta"]["config"]["suite"] == "matching");
  CHECK(doc.contains("payload"));

  CHECK(cli("verify --suite nosuch", tmp.path).code == 2);
  CHECK(cli("verify --suite traces --family A --rank 3 --weight=-e1 --max-weyl 1", tmp.path).code == 3);
}

TEST_CASE("a time cap stops the run with a partial report") {
  TempDir tmp;
  Run r = cli("verify --suite all --timeout 1", tmp.path);
  CHECK(r.code == 3);
  CHECK(r.out.find("partial") != std::string::npos);
}

TEST_CASE("matrix") {
  TempDir tmp;
  Run c2 = cli("matrix --which mchi --family C --rank 2 --format json", tmp.path);
  REQUIRE(c2.code == 0);
  auto j = nlohmann::json::parse(c2.out);
  CHECK(j["payload"]["rows"] == 4);

  Run toda = cli("matrix --which toda --family A --rank 2", tmp.path);
  CHECK(toda.code == 0);
  CHECK(toda.out.find("q1*q2^-1") != std::string::npos);

  CHECK(cli("matrix --which achi --rank 3", tmp.path).code == 0);
  CHECK(cli("matrix --which theta --family B --rank 2 --weight=-e1", tmp.path).code == 0);
}

TEST_CASE("cache") {
  TempDir tmp;
  REQUIRE(cli("matrix --which mchi --family B --rank 2", tmp.path).code == 0);
  Run stat = cli("cache stat", tmp.path);
  CHECK(stat.code == 0);
  CHECK(stat.out.find("0 entries") == std::string::npos);

  // A file from an older version is stale and goes on gc.
  fs::path stale = tmp.path / "0000.json";
  {
    std::FILE* f = std::fopen(stale.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{\"version\": \"0.0.0\"}", f);
    std::fclose(f);
  }
  CHECK(cli("cache stat", tmp.path).out.find("1 stale") != std::string::npos);
  Run gc = cli("cache gc", tmp.path);
  CHECK(gc.code == 0);
  CHECK_FALSE(fs::exists(stale));

  // A second run reads the same matrix back.
  Run a = cli("matrix --which mchi --family B --rank 2", tmp.path), b = cli("matrix --which mchi --family B --rank 2", tmp.path);
  CHECK(a.out == b.out);
}

TEST_CASE("output does not depend on the number of jobs") {
  TempDir tmp;
  Run one = cli("verify --suite matching --format json", tmp.path);
  Run four = cli("verify --suite matching --format json --jobs 4", tmp.path);
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}
