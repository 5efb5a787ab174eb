#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CDCTOOL_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

const std::string data = TEST_DATA_DIR;

}  // namespace

TEST_CASE("bound") {
  const Run r = run("bound -q 2 -n 18 -d 8 -k 9");
  CHECK(r.status == 0);
  CHECK(has(r, ">= 18015215399116937"));
  CHECK(has(r, "(equal)"));
  CHECK(has(r, "difference: 1015379"));

  const Run t = run("bound -q 3 -n 19 -d 8 -k 9 --source th41");
  CHECK(t.status == 0);
  CHECK(has(t, "source: th41"));
  CHECK(has(t, "polynomial: "));
}

TEST_CASE("usage and argument errors") {
  CHECK(run("").status == 2);
  CHECK(run("bound -q 2 -n 18").status == 2);
  CHECK(run("bound -q 6 -n 18 -d 8 -k 9").status == 2);
  CHECK(run("frobnicate").status == 2);
  const Run r = run("bound -q 2 -n 18 -d 8 -k 9 --source example:42");
  CHECK(r.status == 2);
  CHECK(has(r, "error: "));
}

TEST_CASE("table11 reproduces the built-in registry") {
  const Run r = run("table11");
  CHECK(r.status == 0);
  CHECK(has(r, " 0 mismatches"));
  const Run c = run("table11 --format csv");
  CHECK(c.status == 0);
  CHECK(has(c, "q,n,d,k,new,old,diff,status"));
  CHECK(has(c, "2,18,8,9,18015215399116937,18015215398101558,1015379,ok"));
}

TEST_CASE("table11 reports a corrupted registry") {
  const Run r = run("table11 --registry " + data + "/corrupted_registry.txt");
  CHECK(r.status == 1);
  CHECK(has(r, "MISMATCH"));
  CHECK(has(r, "1 mismatches"));
  const Run b = run("bound -q 2 -n 18 -d 8 -k 9 --registry " + data + "/corrupted_registry.txt");
  CHECK(has(b, "(MISMATCH)"));
  const Run m = run("table11 --registry " + data + "/malformed_registry.txt");
  CHECK(m.status == 2);
  CHECK(has(m, "line 3"));
}

TEST_CASE("build then check") {
  const std::string out = "cli_multilevel.cdc";
  const Run b = run("build --multilevel 110000,001100,000011 --delta 2 --out " + out);
  CHECK(b.status == 0);
  const Run c = run("check --in " + out + " --format kv");
  CHECK(c.status == 0);
  CHECK(has(c, "passed=true"));
  const Run s = run("check --in " + out + " --mode sampled --pairs 50 --seed 3 --format kv");
  CHECK(s.status == 0);
  CHECK(has(s, "seed=3"));
  CHECK(has(s, "pairs=50"));
  std::remove(out.c_str());

  const Run big = run("build --multilevel 111100000000,000011110000 --delta 2 --max-codewords 10");
  CHECK(big.status == 2);
  CHECK(has(big, "TooLarge"));
  const Run cnt = run("build --multilevel 111100000000,000011110000 --delta 2 --max-codewords 10 --force-count-only");
  CHECK(cnt.status == 0);
  CHECK(has(cnt, "count="));
}

TEST_CASE("check rejects a low-distance file") {
  const Run r = run("check --in " + data + "/low_distance.cdc");
  CHECK(r.status == 1);
  CHECK(has(r, "FAIL"));
  const Run missing = run("check --in " + data + "/no_such_file.cdc");
  CHECK(missing.status == 2);
}

TEST_CASE("rankdist") {
  const Run r = run("rankdist -q 2 -m 3 -n 3 --delta 2");
  CHECK(r.status == 0);
  CHECK(has(r, "a(2) = 49"));
  CHECK(has(r, "a(3) = 14"));
  CHECK(has(r, "(identity holds)"));
}

TEST_CASE("audit") {
  const Run r = run("audit --diagram [1,2,4] --delta 2 -q 2 --format kv --out cli_audit.fdrm");
  CHECK(r.status == 0);
  CHECK(has(r, "optimal=yes"));
  const Run back = run("audit --in cli_audit.fdrm -q 2");
  CHECK(back.status == 0);
  CHECK(has(back, "PASS"));
  std::remove("cli_audit.fdrm");
  const Run t = run("audit --th43 15,6 -q 3 --format kv");
  CHECK(t.status == 0);
  CHECK(has(t, "min_distance_found=3"));
}
