// Copyright 2026 The ffv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ffv/cli.hpp"
#include "ffv/desk_scenarios.hpp"
#include "ffv/error.hpp"
#include "ffv/vault_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace ffv;

namespace {

const fs::path kData = FFV_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("ffv-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::vector<std::string> lock_args(const std::string& out, std::uint64_t seed = 42, const std::string& r = "300") {
  return {"lock",    "--key-hex",     "00112233445566778899aabbccdd",
          "--locking-set", (kData / "locking_set.json").string(),
          "--field-partition", (kData / "field_partition.json").string(),
          "--k",     "8",             "--r",
          r,         "--subset-index", "1",
          "--seed",  std::to_string(seed), "--out",
          out};
}

std::vector<std::string> unlock_args(const std::string& vault, const std::string& probes) {
  return {"unlock", "--vault", vault, "--probe-set", probes, "--subset-index", "1", "--key-len", "14"};
}

std::string hex(const Bytes& b) {
  std::string s;
  char buf[3];
  for (auto v : b) {
    std::snprintf(buf, sizeof buf, "%02x", v);
    s += buf;
  }
  return s;
}

}  // namespace

TEST_CASE("lock then unlock through files") {
  TempDir dir;
  const auto v = dir.file("vault.json");
  const Run l = run(lock_args(v));
  REQUIRE(l.code == kExitOk);
  CHECK(l.out.find("r=300") != std::string::npos);
  CHECK(parse_vault(read_text_file(v)).r() == 300);

  const Run u = run(unlock_args(v, (kData / "locking_set.json").string()));
  CHECK(u.code == kExitOk);
  CHECK(u.out == "00112233445566778899aabbccdd\n");
  CHECK(u.err.find("matched=12") != std::string::npos);

  const Run w = run(unlock_args(v, (kData / "probe_wrong_family.json").string()));
  CHECK(w.code == kExitNullUnlock);
  CHECK(w.out == "null\n");
}

TEST_CASE("same seed gives byte-identical vault files") {
  TempDir dir;
  REQUIRE(run(lock_args(dir.file("a.json"), 7)).code == kExitOk);
  REQUIRE(run(lock_args(dir.file("b.json"), 7)).code == kExitOk);
  REQUIRE(run(lock_args(dir.file("c.json"), 8)).code == kExitOk);
  CHECK(read_text_file(dir.file("a.json")) == read_text_file(dir.file("b.json")));
  CHECK(read_text_file(dir.file("a.json")) != read_text_file(dir.file("c.json")));
}

TEST_CASE("lock validation errors") {
  TempDir dir;
  const Run big = run(lock_args(dir.file("v.json"), 1, "70000"));
  CHECK(big.code == kExitValidation);
  CHECK(big.err.find("r exceeds field size") != std::string::npos);
  CHECK_FALSE(fs::exists(dir.file("v.json")));

  auto bad_hex = lock_args(dir.file("v.json"));
  bad_hex[2] = "0g";
  CHECK(run(bad_hex).code == kExitValidation);

  auto bad_q = lock_args(dir.file("v.json"));
  bad_q.insert(bad_q.end(), {"--q", "65521"});
  CHECK(run(bad_q).code == kExitValidation);

  auto bad_index = lock_args(dir.file("v.json"));
  bad_index[12] = "5";
  CHECK(run(bad_index).code == kExitValidation);

  auto missing = lock_args(dir.file("v.json"));
  missing[4] = dir.file("missing.json");
  CHECK(run(missing).code == kExitFailure);
}

TEST_CASE("unlock edge cases") {
  TempDir dir;
  const auto v = dir.file("vault.json");
  REQUIRE(run(lock_args(v)).code == kExitOk);

  write_text_file(dir.file("empty.json"), "");
  const Run e = run(unlock_args(v, dir.file("empty.json")));
  CHECK(e.code == kExitNullUnlock);
  CHECK(e.out == "null\n");
  CHECK(e.err.find("matched=0") != std::string::npos);

  write_text_file(dir.file("nosubsets.json"), R"({"q": 65537, "subsets": []})");
  CHECK(run(unlock_args(v, dir.file("nosubsets.json"))).code == kExitNullUnlock);

  std::string text = read_text_file(v);
  write_text_file(dir.file("truncated.json"), text.substr(0, text.size() / 2));
  CHECK(run(unlock_args(dir.file("truncated.json"), (kData / "locking_set.json").string())).code ==
        kExitValidation);
  const auto pos = text.find("\"r\": 300");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "\"r\": 301");
  write_text_file(dir.file("bad_r.json"), text);
  CHECK(run(unlock_args(dir.file("bad_r.json"), (kData / "locking_set.json").string())).code == kExitValidation);

  auto no_cap = unlock_args(v, (kData / "locking_set.json").string());
  no_cap.insert(no_cap.end(), {"--effort-cap", "0"});
  CHECK(run(no_cap).code == kExitValidation);
  CHECK(run(unlock_args(dir.file("absent.json"), (kData / "locking_set.json").string())).code == kExitFailure);
}

TEST_CASE("analyze") {
  const Run p1 = run({"analyze", "--preset", "movie-k16-t20"});
  CHECK(p1.code == kExitOk);
  CHECK(p1.out.find("125-bit") != std::string::npos);
  CHECK(p1.out.find("DISCREPANCY") != std::string::npos);

  const Run preset = run({"analyze", "--preset", "movie-k18-t22", "--format", "json"});
  REQUIRE(preset.code == kExitOk);
  char mu[64];
  std::snprintf(mu, sizeof mu, "%.17g", std::ldexp(1.0, -138));
  const Run expl = run({"analyze", "--q", "10000", "--k", "18", "--r", "10000", "--t", "22", "--t-mfj", "22",
                        "--m-a", "5", "--m-f", "5", "--n", "17", "--mu", mu, "--format", "json"});
  REQUIRE(expl.code == kExitOk);
  const auto a = nlohmann::json::parse(preset.out), b = nlohmann::json::parse(expl.out);
  for (const char* key : {"log2_N", "log2_N_classical", "log2_family_bound", "log2_family_count", "attacker_prob",
                          "security_bits"}) {
    CHECK(a.at(key) == b.at(key));
  }
  CHECK(b.at("reported_claims").is_null());

  const Run missing = run({"analyze", "--q", "10000", "--k", "18", "--r", "10000", "--t", "22", "--t-mfj", "22",
                           "--m-a", "5", "--n", "17"});
  CHECK(missing.code == kExitValidation);
  CHECK(missing.err.find("--m-f") != std::string::npos);
  CHECK(run({"analyze", "--preset", "movie-k1"}).code == kExitValidation);
  CHECK(run({"analyze", "--preset", "movie-k16-t20", "--q", "5"}).code == kExitValidation);
  CHECK(run({"analyze", "--preset", "movie-k16-t20", "--format", "xml"}).code == kExitValidation);
}

TEST_CASE("flag handling") {
  CHECK(run({}).code == kExitValidation);
  CHECK(run({"frobnicate"}).code == kExitValidation);
  CHECK(run({"analyze", "--preset", "movie-k16-t20", "--bogus"}).code == kExitValidation);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("unlock") != std::string::npos);
  CHECK(run({"lock", "--help"}).code == kExitOk);
}

TEST_CASE("minutiae demo") {
  const std::string file = (kData / "minutiae.txt").string();
  const Run ok = run({"minutiae-demo", "--minutiae", file, "--key-hex", "cafe", "--seed", "3"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out == "cafe\n");
  const Run far = run({"minutiae-demo", "--minutiae", file, "--key-hex", "cafe", "--jitter-min", "0.3",
                       "--jitter-max", "0.45"});
  CHECK(far.code == kExitNullUnlock);
  CHECK(far.out == "null\n");
}

TEST_CASE("selftest and fault injection") {
  const Run clean = run({"selftest"});
  CHECK(clean.code == kExitOk);
  CHECK(clean.out.find("FAIL") == std::string::npos);
  const Run crc = run({"selftest", "--inject-fault", "crc"});
  CHECK(crc.code != kExitOk);
  CHECK(crc.out.find("FAIL crc16-arc") != std::string::npos);
  const Run census = run({"selftest", "--inject-fault", "census"});
  CHECK(census.code != kExitOk);
  CHECK(census.out.find("FAIL census") != std::string::npos);
}

TEST_CASE("property: vault files from lock always re-parse over 100 configurations") {
  TempDir dir;
  Rng rng(91);
  write_text_file(dir.file("field.json"), read_text_file(kData / "field_partition.json"));
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = desk::desk_setup(1000 + trial);
    write_text_file(dir.file("lock.json"), serialize_set_description(s.locking));
    const std::size_t k = 2 + rng.below(11);  // 2..12 coefficients, at most t_MFk
    const std::size_t capacity = (16 * k - 16) / 8;
    if (capacity == 0) continue;
    const Bytes key = desk::random_key(rng, 1 + rng.below(capacity));
    const std::size_t r = 24 + rng.below(400);
    char rho[32];
    std::snprintf(rho, sizeof rho, "%.3f", rng.uniform(0, 1));
    const std::string v = dir.file("v.json");
    const Run l = run({"lock", "--key-hex", hex(key), "--locking-set", dir.file("lock.json"), "--field-partition",
                       dir.file("field.json"), "--k", std::to_string(k), "--r", std::to_string(r), "--rho", rho,
                       "--subset-index", "1", "--seed", std::to_string(rng()), "--out", v});
    INFO("trial " << trial << ": " << l.err);
    REQUIRE(l.code == kExitOk);
    const Vault parsed = parse_vault(read_text_file(v));
    REQUIRE(parsed.r() == r);
    REQUIRE_NOTHROW(validate_vault(parsed));
    REQUIRE(serialize_vault(parsed) == read_text_file(v));
    const Run u = run({"unlock", "--vault", v, "--probe-set", dir.file("lock.json"), "--subset-index", "1",
                       "--key-len", std::to_string(key.size())});
    REQUIRE(u.code == kExitOk);
    REQUIRE(u.out == hex(key) + "\n");
  }
}
