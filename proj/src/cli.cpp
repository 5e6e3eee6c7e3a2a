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

#include "ffv/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ffv/error.hpp"
#include "ffv/minutiae.hpp"
#include "ffv/security.hpp"
#include "ffv/selftest.hpp"
#include "ffv/vault.hpp"
#include "ffv/vault_io.hpp"

namespace ffv {

namespace {

Bytes parse_hex(const std::string& hex) {
  if (hex.empty() || hex.size() % 2 != 0) throw ValidationError("key: expected a nonempty even-length hex string");
  Bytes out;
  out.reserve(hex.size() / 2);
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ValidationError("key: invalid hex digit '" + std::string(1, c) + "'");
  };
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return out;
}

std::string to_hex(const Bytes& bytes) {
  std::ostringstream s;
  s << std::hex << std::setfill('0');
  for (auto b : bytes) s << std::setw(2) << static_cast<int>(b);
  return s.str();
}

void print_unlock_diagnostics(std::ostream& err, const UnlockResult& u) {
  err << "matched=" << u.matched << " subsets_tried=" << u.subsets_tried << " effort=" << u.effort
      << (u.effort_exhausted ? " (effort cap reached)" : "") << "\n";
}

struct LockOptions {
  std::string key_hex;
  std::string locking_set;
  std::string field_partition;
  std::size_t k = 0;
  std::size_t r = 0;
  double rho = 0.2;
  double delta = 0.25;
  std::size_t subset_index = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> q;
  std::string out;
};

int cmd_lock(const LockOptions& o, std::ostream& out) {
  const Bytes key = parse_hex(o.key_hex);
  const MultiFuzzySet field = parse_set_description(read_text_file(o.field_partition), SetKind::kField);
  const MultiFuzzySet locking = parse_set_description(read_text_file(o.locking_set), SetKind::kLocking);
  if (o.q && *o.q != field.q()) {
    throw ValidationError("lock: --q " + std::to_string(*o.q) + " does not match the field partition (q = " +
                          std::to_string(field.q()) + ")");
  }
  LockParams params;
  params.k_subset = o.subset_index;
  params.k = o.k;
  params.r = o.r;
  params.rho = o.rho;
  params.delta = o.delta;
  params.seed = o.seed;
  if (o.subset_index >= locking.subset_count()) {
    throw ValidationError("lock: --subset-index " + std::to_string(o.subset_index) + " out of range (" +
                          std::to_string(locking.subset_count()) + " subsets)");
  }
  const LockResult res = fuzzy_lock(key, locking, field, params);
  write_text_file(o.out, serialize_vault(res.vault));
  out << "q=" << res.vault.q << " n=" << res.vault.n << " r=" << res.vault.r() << " crc=" << res.vault.crc_variant
      << "\n";
  out << "vault written to " << o.out << "\n";
  return kExitOk;
}

struct UnlockOptions {
  std::string vault;
  std::string probe_set;
  std::size_t subset_index = 0;
  double delta = 0.25;
  std::size_t key_len = 0;
  std::uint64_t effort_cap = 100000;
};

int cmd_unlock(const UnlockOptions& o, std::ostream& out, std::ostream& err) {
  const Vault vault = parse_vault(read_text_file(o.vault));
  const auto probes_set = parse_optional_set_description(read_text_file(o.probe_set), SetKind::kUnlocking);
  if (o.key_len == 0) throw ValidationError("unlock: --key-len must be positive");
  UnlockResult u;
  if (probes_set) {
    if (probes_set->q() != vault.q) throw ValidationError("unlock: probe set q does not match the vault");
    u = fuzzy_unlock(vault, *probes_set, o.subset_index, o.delta, o.key_len, o.effort_cap);
  } else {
    u = unlock_with_probes(vault, {}, o.delta, o.key_len, o.effort_cap);
  }
  print_unlock_diagnostics(err, u);
  if (!u.key) {
    out << "null\n";
    return kExitNullUnlock;
  }
  out << to_hex(*u.key) << "\n";
  return kExitOk;
}

struct AnalyzeOptions {
  std::string preset;
  std::optional<std::uint64_t> q, k, r, t, t_mfj, m_a, m_f, n;
  double mu = 0.5;
  std::uint64_t family_card = 1;
  std::string format = "text";
};

int cmd_analyze(const AnalyzeOptions& o, bool explicit_mu, std::ostream& out) {
  SecurityReport report;
  const bool any_explicit = o.q || o.k || o.r || o.t || o.t_mfj || o.m_a || o.m_f || o.n || explicit_mu;
  if (!o.preset.empty()) {
    if (any_explicit) throw ValidationError("analyze: --preset cannot be combined with explicit parameters");
    report = scenario_report(o.preset);
  } else {
    const std::pair<const char*, const std::optional<std::uint64_t>*> required[] = {
        {"--q", &o.q}, {"--k", &o.k},     {"--r", &o.r},     {"--t", &o.t},
        {"--t-mfj", &o.t_mfj}, {"--m-a", &o.m_a}, {"--m-f", &o.m_f}, {"--n", &o.n}};
    for (const auto& [flag, value] : required) {
      if (!value->has_value()) throw ValidationError(std::string("analyze: missing ") + flag + " (or use --preset)");
    }
    ScenarioParams p;
    p.q = *o.q;
    p.k = *o.k;
    p.r = *o.r;
    p.t = *o.t;
    p.t_MFj = *o.t_mfj;
    p.m_A = *o.m_a;
    p.m_F = *o.m_f;
    p.n = *o.n;
    p.mu = o.mu;
    p.family_cardinality = o.family_card;
    report = scenario_report(p);
  }
  out << (o.format == "json" ? format_report_json(report) : format_report_text(report));
  return kExitOk;
}

struct DemoOptions {
  std::string minutiae;
  std::string key_hex;
  MinutiaeDemoParams params;
  std::string out;
};

int cmd_minutiae_demo(const DemoOptions& o, std::ostream& out, std::ostream& err) {
  const Bytes key = parse_hex(o.key_hex);
  const std::vector<Minutia> minutiae = parse_minutiae(read_text_file(o.minutiae));
  const MinutiaeDemoResult res = minutiae_vault_demo(minutiae, key, o.params);
  if (!o.out.empty()) write_text_file(o.out, serialize_vault(res.vault));
  err << "minutiae=" << minutiae.size() << " r=" << res.vault.r() << " ";
  print_unlock_diagnostics(err, res.unlock);
  if (!res.unlock.key) {
    out << "null\n";
    return kExitNullUnlock;
  }
  out << to_hex(*res.unlock.key) << "\n";
  return kExitOk;
}

int cmd_selftest(const std::string& fault, std::ostream& out) {
  SelftestOptions opt;
  if (fault == "crc") opt.crc_variant = kCrc16CcittFalse;
  if (fault == "census") opt.corrupt_census = true;
  bool all = true;
  for (const CheckResult& c : run_selftest(opt)) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    all = all && c.passed;
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-family fuzzy vault: lock, unlock and analyse vault files", "ffv"};
  app.require_subcommand(1);

  LockOptions lock;
  CLI::App* lock_cmd = app.add_subcommand("lock", "Lock a key into a vault file");
  lock_cmd->add_option("--key-hex", lock.key_hex, "Key bytes as hex")->required();
  lock_cmd->add_option("--locking-set", lock.locking_set, "Locking set description (JSON)")->required();
  lock_cmd->add_option("--field-partition", lock.field_partition, "Field partition description (JSON)")->required();
  lock_cmd->add_option("--k", lock.k, "Coefficient count (degree k-1)")->required();
  lock_cmd->add_option("--r", lock.r, "Total vault points")->required();
  lock_cmd->add_option("--rho", lock.rho, "Share of chaff on the polynomial under a wrong family")->capture_default_str();
  lock_cmd->add_option("--delta", lock.delta, "Matching tolerance")->capture_default_str();
  lock_cmd->add_option("--subset-index", lock.subset_index, "Locking subset index")->required();
  lock_cmd->add_option("--seed", lock.seed, "Randomness seed")->capture_default_str();
  lock_cmd->add_option("--q", lock.q, "Expected field size (checked against the partition)");
  lock_cmd->add_option("--out", lock.out, "Vault file to write")->required();

  UnlockOptions unlock;
  CLI::App* unlock_cmd = app.add_subcommand("unlock", "Try to recover a key from a vault file");
  unlock_cmd->add_option("--vault", unlock.vault, "Vault file")->required();
  unlock_cmd->add_option("--probe-set", unlock.probe_set, "Unlocking set description (JSON)")->required();
  unlock_cmd->add_option("--subset-index", unlock.subset_index, "Probe subset index")->required();
  unlock_cmd->add_option("--delta", unlock.delta, "Matching tolerance")->capture_default_str();
  unlock_cmd->add_option("--key-len", unlock.key_len, "Key length in bytes")->required();
  unlock_cmd->add_option("--effort-cap", unlock.effort_cap, "Maximum k-subsets tried")->capture_default_str();

  AnalyzeOptions analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Spurious-polynomial and attacker estimates");
  analyze_cmd->add_option("--preset", analyze.preset, "movie-k16-t20 or movie-k18-t22");
  analyze_cmd->add_option("--q", analyze.q, "Field size");
  analyze_cmd->add_option("--k", analyze.k, "Coefficient count");
  analyze_cmd->add_option("--r", analyze.r, "Vault size");
  analyze_cmd->add_option("--t", analyze.t, "Genuine elements");
  analyze_cmd->add_option("--t-mfj", analyze.t_mfj, "Elements in the agreeing family subset");
  analyze_cmd->add_option("--m-a", analyze.m_a, "Families in the locking set");
  analyze_cmd->add_option("--m-f", analyze.m_f, "Families in the field partition");
  analyze_cmd->add_option("--n", analyze.n, "Polynomial degree");
  CLI::Option* mu_opt = analyze_cmd->add_option("--mu", analyze.mu, "Fraction mu in (0, 1) scaling the family bound")->capture_default_str();
  analyze_cmd->add_option("--family-card", analyze.family_card, "Size of the agreeing family")->capture_default_str();
  analyze_cmd->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  DemoOptions demo;
  CLI::App* demo_cmd = app.add_subcommand("minutiae-demo", "Lock and unlock with minutiae orientations");
  demo_cmd->add_option("--minutiae", demo.minutiae, "Minutiae text file")->required();
  demo_cmd->add_option("--key-hex", demo.key_hex, "Key bytes as hex")->required();
  demo_cmd->add_option("--seed", demo.params.seed, "Randomness seed")->capture_default_str();
  demo_cmd->add_option("--q", demo.params.q, "Field size")->capture_default_str();
  demo_cmd->add_option("--k", demo.params.k, "Coefficient count")->capture_default_str();
  demo_cmd->add_option("--r", demo.params.r, "Vault size")->capture_default_str();
  demo_cmd->add_option("--rho", demo.params.rho, "Wrong-family chaff share")->capture_default_str();
  demo_cmd->add_option("--delta", demo.params.delta, "Matching tolerance")->capture_default_str();
  demo_cmd->add_option("--jitter-min", demo.params.jitter_min, "Smallest orientation jitter, in grid steps")
      ->capture_default_str();
  demo_cmd->add_option("--jitter-max", demo.params.jitter_max, "Largest orientation jitter, in grid steps")
      ->capture_default_str();
  demo_cmd->add_option("--effort-cap", demo.params.effort_cap, "Maximum k-subsets tried")->capture_default_str();
  demo_cmd->add_option("--out", demo.out, "Optional vault file to write");

  std::string fault;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the fast consistency checks");
  selftest_cmd->add_option("--inject-fault", fault, "Deliberately break a check (crc or census)")
      ->check(CLI::IsMember({"crc", "census"}))
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*lock_cmd) return cmd_lock(lock, out);
    if (*unlock_cmd) return cmd_unlock(unlock, out, err);
    if (*analyze_cmd) return cmd_analyze(analyze, mu_opt->count() > 0, out);
    if (*demo_cmd) return cmd_minutiae_demo(demo, out, err);
    if (*selftest_cmd) return cmd_selftest(fault, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitValidation;
}

}  // namespace ffv
