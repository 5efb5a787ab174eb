#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grass/code.hpp"
#include "grass/ferrers.hpp"

namespace grass {

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 20240601;
  std::uint64_t sample_pairs = 100000;
  std::uint64_t max_pairs = 1000000;  // exhaustive cap
  unsigned threads = 0;               // 0: hardware concurrency
  std::size_t keep_violations = 32;   // stored; all are counted
};

struct Violation {
  std::size_t i = 0, j = 0;  // 0-based member indices
  int distance = 0;
};

struct VerifyReport {
  std::string target;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t pairs = 0;
  int declared = 0;
  int min_distance_found = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, std::string>> extra;
  bool passed = false;
};

/// Pairwise subspace distance certification against the declared d.
VerifyReport check_cdc(const Cdc& code, const VerifyOptions& opt = {});
/// Same on a raw member list, which may contain repeats.
VerifyReport check_members(const Field& f, const std::vector<Subspace>& members, int declared, std::string target,
                           const VerifyOptions& opt = {});

/// Exact A_q(n, d, k) by maximum clique over G_q(n, k); at most `cap` subspaces.
std::size_t brute_force_optimum(int q, int n, int k, int d, std::size_t cap = 2000);

/// Support containment, true minimum rank, dimension against the bound.
VerifyReport audit_fdrmc(const Field& f, const FdrmCode& code, int max_log2 = 20);

std::string to_text(const VerifyReport& r);
/// One `key=value` per line.
std::string to_kv(const VerifyReport& r);

}  // namespace grass
