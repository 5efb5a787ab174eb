#include "grass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "grass/errors.hpp"
#include "grass/rankmetric.hpp"

namespace grass {

namespace {

// Distance oracle over a fixed member list. q = 2 with n <= 64 goes through
// packed rows; everything else stacks generators and eliminates.
class DistanceOracle {
 public:
  DistanceOracle(const Field& f, const std::vector<Subspace>& m) : f_(f), m_(m) {
    packed_ = f.q() == 2 && !m.empty() && m.front().n() <= 64;
    if (packed_) {
      rows_.reserve(m.size());
      for (const auto& s : m) rows_.push_back(pack_rows(s.gen()));
    }
  }

  int operator()(std::size_t i, std::size_t j, std::vector<std::uint64_t>& scratch) const {
    const int ki = m_[i].k(), kj = m_[j].k();
    int r;
    if (packed_) {
      scratch.assign(rows_[i].begin(), rows_[i].end());
      scratch.insert(scratch.end(), rows_[j].begin(), rows_[j].end());
      r = packed_rank(scratch);
    } else {
      Matrix s(ki + kj, m_[i].n());
      s << m_[i].gen(), m_[j].gen();
      r = rank(f_, s);
    }
    return 2 * r - ki - kj;
  }

 private:
  static int packed_rank(std::vector<std::uint64_t>& rows) {
    int r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i]) continue;
      const std::uint64_t low = rows[i] & (~rows[i] + 1);
      ++r;
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (rows[j] & low) rows[j] ^= rows[i];
    }
    return r;
  }

  const Field& f_;
  const std::vector<Subspace>& m_;
  bool packed_ = false;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct Partial {
  int min_d = 1 << 30;
  std::uint64_t pairs = 0, bad = 0;
  std::vector<Violation> kept;
};

unsigned worker_count(const VerifyOptions& opt, std::uint64_t work) {
  unsigned t = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  if (work < 4096) t = 1;
  return t;
}

void note(Partial& p, std::size_t i, std::size_t j, int d, int declared, std::size_t keep) {
  ++p.pairs;
  p.min_d = std::min(p.min_d, d);
  if (d < declared) {
    ++p.bad;
    if (p.kept.size() < keep) p.kept.push_back({i, j, d});
  }
}

// Runs `body(chunk, partial)` for chunk = 0..chunks-1 on up to `t` threads;
// partials come back in chunk order so the merge does not depend on timing.
template <class Body>
std::vector<Partial> run_chunks(std::size_t chunks, unsigned t, Body body) {
  std::vector<Partial> parts(chunks);
  if (t <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c, parts[c]);
    return parts;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += t) body(c, parts[c]);
    });
  for (auto& th : pool) th.join();
  return parts;
}

}  // namespace

VerifyReport check_members(const Field& f, const std::vector<Subspace>& members, int declared, std::string target,
                           const VerifyOptions& opt) {
  VerifyReport rep;
  rep.target = std::move(target);
  rep.mode = opt.mode;
  rep.declared = declared;
  const std::uint64_t m = members.size();
  const std::uint64_t all = m * (m ? m - 1 : 0) / 2;
  if (opt.mode == VerifyMode::Exhaustive && all > opt.max_pairs)
    throw Error(Errc::TooLarge, std::to_string(all) + " pairs exceed the exhaustive cap of " +
                                    std::to_string(opt.max_pairs) + "; use sampled mode");
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].n() != members[0].n())
      throw Error(Errc::AmbientMismatch, "members live in different ambient spaces");

  DistanceOracle dist(f, members);
  std::vector<Partial> parts;
  if (opt.mode == VerifyMode::Exhaustive) {
    // rows i in interleaved chunks keep the triangular work balanced
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(m, 64));
    parts = run_chunks(chunks, worker_count(opt, all), [&](std::size_t c, Partial& p) {
      std::vector<std::uint64_t> scratch;
      for (std::size_t i = c; i < m; i += chunks)
        for (std::size_t j = i + 1; j < m; ++j) note(p, i, j, dist(i, j, scratch), declared, opt.keep_violations);
    });
  } else {
    rep.seed = opt.seed;
    std::vector<std::pair<std::size_t, std::size_t>> sample;
    if (m >= 2) {
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
      sample.reserve(opt.sample_pairs);
      while (sample.size() < opt.sample_pairs) {
        std::uint64_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        sample.emplace_back(a, b);
      }
    }
    const std::size_t chunks = 64;
    parts = run_chunks(chunks, worker_count(opt, sample.size()), [&](std::size_t c, Partial& p) {
      std::vector<std::uint64_t> scratch;
      const std::size_t lo = sample.size() * c / chunks, hi = sample.size() * (c + 1) / chunks;
      for (std::size_t s = lo; s < hi; ++s)
        note(p, sample[s].first, sample[s].second, dist(sample[s].first, sample[s].second, scratch), declared,
             opt.keep_violations);
    });
  }

  int min_d = 1 << 30;
  for (auto& p : parts) {
    rep.pairs += p.pairs;
    rep.violation_count += p.bad;
    min_d = std::min(min_d, p.min_d);
    rep.violations.insert(rep.violations.end(), p.kept.begin(), p.kept.end());
  }
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const Violation& a, const Violation& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
  if (rep.violations.size() > opt.keep_violations) rep.violations.resize(opt.keep_violations);
  // a single codeword has no pairs; report the largest possible distance
  rep.min_distance_found = rep.pairs ? min_d : (m ? 2 * std::min(members[0].k(), members[0].n() - members[0].k()) : 0);
  rep.passed = rep.violation_count == 0 && rep.min_distance_found >= declared;
  return rep;
}

VerifyReport check_cdc(const Cdc& code, const VerifyOptions& opt) {
  std::ostringstream t;
  t << "(" << code.n() << "," << code.size() << "," << code.d() << "," << code.k() << ")_" << code.q() << " CDC";
  if (!code.provenance().empty()) t << " [" << code.provenance() << "]";
  return check_members(Field(code.q()), code.members(), code.d(), t.str(), opt);
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSearch {
  std::size_t n, words;
  std::vector<Bits> adj;
  std::size_t best = 0;

  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static void clear(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  static bool none(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Greedy colouring of the candidate set; colour classes bound the clique.
  void colour(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bits left = cand;
    std::size_t c = 0;
    while (!none(left)) {
      ++c;
      Bits q = left;
      while (!none(q)) {
        std::size_t w = 0;
        while (!q[w]) ++w;
        const std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(q[w]));
        clear(q, v);
        clear(left, v);
        for (std::size_t k = 0; k < words; ++k) q[k] &= ~adj[v][k];
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand(std::size_t size, Bits cand) {
    std::vector<std::size_t> order, bound;
    colour(cand, order, bound);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (size + bound[idx] <= best) return;
      const std::size_t v = order[idx];
      Bits next(words);
      for (std::size_t k = 0; k < words; ++k) next[k] = cand[k] & adj[v][k];
      if (none(next)) best = std::max(best, size + 1);
      else expand(size + 1, std::move(next));
      clear(cand, v);
    }
  }
};

}  // namespace

std::size_t brute_force_optimum(int q, int n, int k, int d, std::size_t cap) {
  const BigCount total = gaussian_binomial(n, k, q);
  if (total > cap) throw Error(Errc::TooLarge, "|G_q(n,k)| = " + total.str() + " exceeds " + std::to_string(cap));
  const Field f(q);
  const std::vector<Subspace> g = enumerate_grassmannian(f, n, k);
  if (g.size() <= 1 || d <= 2) return g.size();
  if (d > 2 * std::min(k, n - k)) return 1;

  CliqueSearch s;
  s.n = g.size();
  s.words = (s.n + 63) / 64;
  s.adj.assign(s.n, Bits(s.words, 0));
  DistanceOracle dist(f, g);
  std::vector<std::uint64_t> scratch;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j)
      if (dist(i, j, scratch) >= d) {
        CliqueSearch::set(s.adj[i], j);
        CliqueSearch::set(s.adj[j], i);
      }
  // high degree first
  std::vector<std::size_t> perm(s.n);
  for (std::size_t i = 0; i < s.n; ++i) perm[i] = i;
  auto degree = [&](std::size_t v) {
    std::size_t c = 0;
    for (auto w : s.adj[v]) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree(a) > degree(b); });
  CliqueSearch r;
  r.n = s.n;
  r.words = s.words;
  r.adj.assign(s.n, Bits(s.words, 0));
  std::vector<std::size_t> pos(s.n);
  for (std::size_t i = 0; i < s.n; ++i) pos[perm[i]] = i;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      if (CliqueSearch::test(s.adj[i], j)) CliqueSearch::set(r.adj[pos[i]], pos[j]);
  Bits all(r.words, 0);
  for (std::size_t i = 0; i < r.n; ++i) CliqueSearch::set(all, i);
  r.best = 1;
  r.expand(0, all);
  return r.best;
}

VerifyReport audit_fdrmc(const Field& f, const FdrmCode& code, int max_log2) {
  VerifyReport rep;
  const LinearMatrixCode& c = code.code;
  rep.target = "[" + code.diagram.str() + ", " + std::to_string(c.dim()) + ", " + std::to_string(c.delta) +
               "]_" + std::to_string(f.q()) + " FDRMC";
  rep.mode = VerifyMode::Exhaustive;
  rep.declared = c.delta;
  if (c.dim() * std::log2(f.q()) > max_log2 + 1e-9)
    throw Error(Errc::TooLarge, "q^dim = " + ipow(f.q(), c.dim()).str() + " codewords is too many to enumerate");

  bool support = true;
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    if (!support_ok(code.diagram, c.basis[i])) {
      support = false;
      rep.extra.emplace_back("support_violation", "basis " + std::to_string(i + 1));
    }

  int min_rank = std::min(c.m, c.n);
  std::size_t idx = 0;
  std::uint64_t bad = 0;
  for_each_codeword(f, c, [&](const Matrix& w) {
    const std::size_t at = idx++;
    if (!w.any()) return;
    ++rep.pairs;
    const int r = rank(f, w);
    min_rank = std::min(min_rank, r);
    if (r < c.delta) {
      ++bad;
      if (rep.violations.size() < 32) rep.violations.push_back({at, 0, r});
    }
  });
  const int bound = singleton_bound(code.diagram, c.delta);
  rep.min_distance_found = rep.pairs ? min_rank : 0;
  rep.violation_count = bad;
  rep.extra.emplace_back("dim", std::to_string(c.dim()));
  rep.extra.emplace_back("bound", std::to_string(bound));
  rep.extra.emplace_back("optimal", c.dim() == bound ? "yes" : "no");
  rep.extra.emplace_back("support", support ? "ok" : "violated");
  rep.passed = support && bad == 0 && (rep.pairs == 0 || min_rank >= c.delta);
  return rep;
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream o;
  o << r.target << "\n";
  o << "  mode: " << (r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled (seed " + std::to_string(r.seed) + ")")
    << ", " << r.pairs << " pairs checked\n";
  o << "  minimum found " << r.min_distance_found << ", declared " << r.declared << "\n";
  for (const auto& [k, v] : r.extra) o << "  " << k << ": " << v << "\n";
  if (r.violation_count) {
    o << "  " << r.violation_count << " violation(s)";
    for (const auto& v : r.violations) o << " (" << v.i + 1 << "," << v.j + 1 << "):" << v.distance;
    o << "\n";
  }
  o << "  " << (r.passed ? "PASS" : "FAIL") << "\n";
  return o.str();
}

std::string to_kv(const VerifyReport& r) {
  std::ostringstream o;
  o << "target=" << r.target << "\n";
  o << "mode=" << (r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled") << "\n";
  if (r.mode == VerifyMode::Sampled) o << "seed=" << r.seed << "\n";
  o << "pairs=" << r.pairs << "\n";
  o << "declared=" << r.declared << "\n";
  o << "min_distance_found=" << r.min_distance_found << "\n";
  o << "violations=" << r.violation_count << "\n";
  for (const auto& v : r.violations) o << "violation=" << v.i + 1 << "," << v.j + 1 << "," << v.distance << "\n";
  for (const auto& [k, v] : r.extra) o << k << "=" << v << "\n";
  o << "passed=" << (r.passed ? "true" : "false") << "\n";
  return o.str();
}

}  // namespace grass
