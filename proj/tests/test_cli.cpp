#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli() { return RAMSEY_CLI_PATH; }

std::string work_dir() {
  static std::string dir = [] {
    fs::path p = fs::temp_directory_path() / "ramsey_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
  }();
  return dir;
}

int run(const std::string& args) {
  std::string cmd = cli() + " " + args + " > " + work_dir() + "/out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string last_output() {
  std::ifstream in(work_dir() + "/out.txt");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long long count_lines(const std::string& path) {
  std::ifstream in(path);
  long long n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("generate writes per-order catalogue files") {
  CHECK(run("generate --s 3 --t 5 --nmax 9 --out " + work_dir() + "/cat") == 0);
  CHECK(count_lines(work_dir() + "/cat/r3_5_6.g6") == 32);
  CHECK(count_lines(work_dir() + "/cat/r3_5_9.g6") == 290);
  // a dead class still produces its (empty) file
  CHECK(run("generate --s 3 --t 3 --nmax 6 --out " + work_dir() + "/cat33") == 0);
  CHECK(fs::exists(work_dir() + "/cat33/r3_3_6.g6"));
  CHECK(count_lines(work_dir() + "/cat33/r3_3_6.g6") == 0);
}

TEST_CASE("stats prints a table") {
  CHECK(run("stats " + work_dir() + "/cat/r3_5_9.g6 --json " + work_dir() + "/stats.json") == 0);
  CHECK(last_output().find("count") != std::string::npos);
  CHECK(fs::exists(work_dir() + "/stats.json"));
}

TEST_CASE("pointed reports per-degree counts") {
  CHECK(run("pointed " + work_dir() + "/cat/r3_5_8.g6") == 0);
  CHECK(last_output().find("all") != std::string::npos);
}

TEST_CASE("ingest accepts its own output and rejects bad graphs") {
  CHECK(run("ingest " + work_dir() + "/cat --s 3 --t 5 --out " + work_dir() + "/ingested") == 0);
  CHECK(count_lines(work_dir() + "/ingested/r3_5_6.g6") == 32);
  fs::create_directories(work_dir() + "/bad");
  std::ofstream bad(work_dir() + "/bad/k5.g6", std::ios::binary);
  bad << "D~{\n";  // complete graph on 5
  bad.close();
  CHECK(run("ingest " + work_dir() + "/bad --s 3 --t 5 --out " + work_dir() + "/ignored") == 3);
}

TEST_CASE("extend reports extension counts") {
  CHECK(run("extend " + work_dir() + "/cat/r3_5_9.g6 --s 3 --t 5 --out " + work_dir() +
            "/ext.g6") == 0);
  CHECK(last_output().find("extensions") != std::string::npos);
}

TEST_CASE("campaign runs end to end") {
  CHECK(run("generate --s 3 --t 4 --nmax 6 --out " + work_dir() + "/cat34") == 0);
  CHECK(run("campaign --in " + work_dir() + "/cat34/r3_4_6.g6 --s 4 --t 4 --d 2 --out " +
            work_dir() + "/camp --jobs 2") == 0);
  CHECK(fs::exists(work_dir() + "/camp.solutions.jsonl"));
  CHECK(fs::exists(work_dir() + "/camp.report.json"));
}

TEST_CASE("glue solves an ad hoc pair") {
  CHECK(run("glue " + work_dir() + "/cat34/r3_4_6.g6 --left 0 --a 0 --right 0 --b 0 --s 4 --t 4") ==
        0);
}

TEST_CASE("check-degree and fixture succeed") {
  CHECK(run("check-degree --n 48 --s 5 --t 5") == 0);
  CHECK(last_output().find("closes: yes") != std::string::npos);
  CHECK(run("fixture") == 0);
  CHECK(last_output().find("FAIL") == std::string::npos);
}

TEST_CASE("missing files exit with the I/O code") {
  CHECK(run("stats /nonexistent/file.g6") == 4);
}
