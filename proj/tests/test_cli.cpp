#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "dpt/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Out {
  int status;
  std::string out;
  std::string err;
};

Out call(std::vector<std::string> args) {
  args.insert(args.begin(), "dpt");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  int rc = dpt::cli::main_entry(static_cast<int>(argv.size()), argv.data(), o, e);
  return {rc, o.str(), e.str()};
}

std::vector<std::string> with(std::vector<std::string> a, std::vector<std::string> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<std::string> P3241{"--K", "3", "--N", "2", "--a", "4", "--b", "1", "--no-cache"};

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("dpt_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("count") {
  auto r = call(with({"count"}, P3241));
  CHECK(r.status == 0);
  CHECK(r.out == "{\"mod_dl\":11,\"mod_pi\":11}\n");
}

TEST_CASE("verify-daha") {
  auto r = call(with({"verify-daha", "--degrees", "0"}, P3241));
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["failures"].empty());
  CHECK(j["ok"] == true);
  CHECK(j["basis_size"]["0"] == 11);
  auto two = call(with({"verify-daha", "--degrees", "-1,0,1", "--threads", "3"}, P3241));
  CHECK(two.status == 0);
  CHECK(json::parse(two.out)["basis_size"].size() == 3);
}

TEST_CASE("fusion subcommands") {
  auto d = call({"fusion", "dim", "--K", "7", "--N", "4", "--a", "3", "--b", "1", "--lambda", "4,1,1,-1", "--no-cache"});
  CHECK(d.status == 0);
  CHECK(json::parse(d.out)["dim"] == 15);
  auto p = call({"fusion", "pieri", "--K", "3", "--lambda", "0,0", "--no-cache"});
  CHECK(p.status == 0);
  CHECK(json::parse(p.out)["V"] == json::parse("[[1,0]]"));
  CHECK(json::parse(p.out)["L"] == json::parse("[3,0]"));
  auto t = call({"fusion", "theta", "--K", "3", "--lambda", "1,0", "--no-cache"});
  CHECK(json::parse(t.out)["exponent"] == 2);
  auto s = call(with({"fusion", "tscalar"}, P3241));
  CHECK(s.status == 0);
  CHECK(json::parse(s.out)["exponent"] == 10);
  CHECK(call({"fusion"}).status == 1);
}

TEST_CASE("other subcommands") {
  auto e = call(with({"enumerate", "--quotient", "pi"}, P3241));
  CHECK(e.status == 0);
  auto j = json::parse(e.out);
  CHECK(j["count"] == 11);
  CHECK(j["tableaux"][0]["word"] == "21345@(3,0)");
  auto shape = call(with({"enumerate", "--lambda", "1,-1"}, P3241));
  CHECK(json::parse(shape.out)["count"] == 8);

  auto g = call(with({"verify-group"}, P3241));
  CHECK(g.status == 0);
  CHECK(json::parse(g.out)["checked"] == 11);

  auto n = call({"naruse", "--K", "3", "--N", "2", "--a", "3", "--b", "1", "--no-cache"});
  CHECK(n.status == 0);
  CHECK(json::parse(n.out)["ok"] == true);
  CHECK(call(with({"naruse"}, P3241)).status == 1);

  auto dy = call({"dyck", "--K", "3", "--N", "2", "--a", "4", "--b", "1", "--no-cache"});
  auto dj = json::parse(dy.out);
  CHECK(dj["total"] == 11);
  CHECK(dj["paths"][0]["word"] == "NENEE");

  auto rw = call(with({"reconstruct", "--word", "13524@(1,0)"}, P3241));
  CHECK(rw.status == 0);
  auto rj = json::parse(rw.out);
  CHECK(rj["params"]["a"] == 4);
  CHECK(rj["tableau"]["word"] == "13524@(1,0)");
  auto window = rj["content"]["window"];
  std::string cs;
  for (auto& v : window) cs += (cs.empty() ? "" : ",") + std::to_string(v.get<long>());
  auto rc = call({"reconstruct", "--modulus", "5", "--drift", "0", "--content", cs, "--degree", "-1", "--no-cache"});
  CHECK(rc.status == 0);
  CHECK(json::parse(rc.out)["tableau"]["word"] == "13524@(1,0)");
  CHECK(call({"reconstruct", "--modulus", "5", "--drift", "0", "--content", "0,0,0,0,0", "--no-cache"}).status == 1);
}

TEST_CASE("validation errors exit with 1") {
  auto r = call({"count", "--K", "3", "--N", "2", "--a", "1", "--b", "1", "--no-cache"});
  CHECK(r.status == 1);
  CHECK(r.err.find("m = aN - bK") != std::string::npos);
  CHECK(call({"count", "--K", "3", "--N", "2", "--no-cache"}).status == 1);
  CHECK(call({"count", "--bogus"}).status == 1);
  CHECK(call({"frobnicate"}).status == 1);
  CHECK(call({"fusion", "dim", "--K", "3", "--N", "2", "--a", "4", "--b", "1", "--lambda", "1,2", "--no-cache"}).status == 1);
  CHECK(call({"dyck", "--K", "2", "--N", "2", "--a", "2", "--b", "1", "--no-cache"}).status == 1);
  CHECK(call(with({"enumerate", "--threads", "0"}, P3241)).status == 1);
  CHECK(call({"--help"}).status == 0);
}

TEST_CASE("output is independent of the thread count") {
  for (auto cmd : {std::vector<std::string>{"enumerate"}, {"count"}, {"verify-daha", "--degrees", "-1,0"}}) {
    auto one = call(with(with(cmd, P3241), {"--threads", "1"}));
    auto four = call(with(with(cmd, P3241), {"--threads", "4"}));
    CHECK(one.out == four.out);
  }
}

TEST_CASE("pretty output") {
  auto r = call(with({"enumerate", "--pretty"}, P3241));
  CHECK(r.status == 0);
  CHECK(r.out.find("13245@(2,0)  x=0..3\n . . 1 3\n 2 4 5 .\n") != std::string::npos);
  auto c = call(with({"count", "--pretty"}, P3241));
  CHECK(json::parse(c.out)["mod_dl"] == 11);
}

TEST_CASE("cache") {
  TempDir dir("cache");
  std::vector<std::string> base{"verify-daha", "--K", "3", "--N", "2", "--a", "4", "--b", "1", "--cache-dir", dir.path.string()};
  auto first = call(with(base, {"--degrees", "0"}));
  REQUIRE(first.status == 0);
  auto files = [&] {
    std::vector<fs::path> v;
    for (auto& e : fs::directory_iterator(dir.path)) v.push_back(e.path());
    return v;
  };
  REQUIRE(files().size() == 1);
  fs::path entry = files()[0];
  CHECK(entry.filename().string().size() == 64 + 5);

  // A hit emits the same bytes; the stored result is what gets printed.
  auto second = call(with(base, {"--degrees", "0", "--threads", "2"}));
  CHECK(second.out == first.out);
  CHECK(second.err.empty());
  auto stored = json::parse(std::ifstream(entry));
  stored["result"]["marker"] = 1;
  std::ofstream(entry) << stored.dump();
  CHECK(json::parse(call(with(base, {"--degrees", "0"})).out).contains("marker"));

  // Changing the degrees misses.
  call(with(base, {"--degrees", "1"}));
  CHECK(files().size() == 2);

  // Corrupt entries are recomputed and overwritten.
  std::ofstream(entry) << "{not json";
  auto fixed = call(with(base, {"--degrees", "0"}));
  CHECK(fixed.out == first.out);
  CHECK(fixed.err.find("warning: corrupt cache entry") != std::string::npos);
  CHECK(json::parse(std::ifstream(entry))["status"] == 0);

  // --no-cache ignores the stored entry.
  stored["result"]["marker"] = 2;
  std::ofstream(entry) << stored.dump();
  CHECK(call(with(base, {"--degrees", "0", "--no-cache"})).out == first.out);

  // The environment variable is the default directory.
  TempDir env("env");
  ::setenv("DPT_CACHE_DIR", env.path.string().c_str(), 1);
  call({"count", "--K", "3", "--N", "2", "--a", "4", "--b", "1"});
  ::unsetenv("DPT_CACHE_DIR");
  CHECK(fs::exists(env.path));
  CHECK_FALSE(fs::is_empty(env.path));
}

TEST_CASE("sha256") {
  CHECK(dpt::cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("config keys") {
  dpt::cli::RunConfig a;
  a.command = "count";
  a.K = 3;
  auto b = a;
  b.threads = 8;
  b.pretty = true;
  CHECK(a.key() == b.key());
  b.degrees = {1};
  CHECK(a.key() == b.key());
  b.command = "verify-daha";
  a.command = "verify-daha";
  CHECK_FALSE(a.key() == b.key());
}
