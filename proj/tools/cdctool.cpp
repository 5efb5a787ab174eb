// cdctool: bounds, registry reproduction, tiny builds and verification.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "grass/errors.hpp"
#include "grass/io.hpp"
#include "grass/theorems.hpp"
#include "grass/verify.hpp"

using namespace grass;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

std::vector<RegistryRow> load_registry(const std::string& path) {
  return path.empty() ? builtin_registry() : parse_registry(read_file(path));
}

void print_bound(const BoundResult& b, const std::vector<RegistryRow>& rows) {
  std::cout << "A_" << b.q << "(" << b.n << "," << b.d << "," << b.k << ") >= " << b.value << "\n";
  std::cout << "source: " << b.source << "\n";
  if (b.polynomial) std::cout << "polynomial: " << to_string(*b.polynomial) << "\n";
  for (const auto& n : b.notes) std::cout << "note: " << n << "\n";
  auto it = std::find_if(rows.begin(), rows.end(),
                         [&](const RegistryRow& r) { return r.q == b.q && r.n == b.n && r.d == b.d && r.k == b.k; });
  if (it == rows.end()) return;
  std::cout << "registry new: " << it->printed << (it->printed == b.value ? " (equal)" : " (MISMATCH)") << "\n";
  if (it->old_bound)
    std::cout << "registry old: " << *it->old_bound << "\ndifference: " << BigCount(b.value - *it->old_bound) << "\n";
}

FdrmCode code_for(const Field& f, const IdVec& v, int delta) {
  const FerrersDiagram d = ferrers_of(v).diagram;
  if (d.dots() == 0) return FdrmCode{d, zero_code(f, d.rows(), d.columns(), delta), true};
  return optimal_fdrmc(f, d, delta);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-dimension subspace codes: bounds, builds, verification"};
  app.require_subcommand(1);

  int q = 2, n = 0, d = 0, k = 0, m = 0, delta = 0;
  std::string source = "auto", registry, format = "text", out, in, mode = "exhaustive", multilevel, recipe, diagram;
  std::uint64_t seed = VerifyOptions{}.seed, pairs = VerifyOptions{}.sample_pairs, max_pairs = VerifyOptions{}.max_pairs;
  std::uint64_t max_codewords = 1000000;
  bool count_only = false, consistency = false;
  std::string th43;

  auto* bound = app.add_subcommand("bound", "evaluate a lower bound on A_q(n,d,k)");
  bound->add_option("-q", q, "field order")->required();
  bound->add_option("-n", n, "ambient dimension")->required();
  bound->add_option("-d", d, "subspace distance (even)")->required();
  bound->add_option("-k", k, "subspace dimension")->required();
  bound->add_option("--source", source, "auto | th41 | th44 | table11 | example:<3|4|5|6|8>");
  bound->add_option("--registry", registry, "registry file instead of the built-in one");

  auto* table = app.add_subcommand("table11", "evaluate every registry row against its printed value");
  table->add_option("--format", format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  table->add_option("--registry", registry, "registry file instead of the built-in one");
  table->add_flag("--consistency", consistency, "also compare each row with the generic construction");

  auto* build = app.add_subcommand("build", "materialize a small code in the cdc v1 format");
  build->add_option("--multilevel", multilevel, "comma-separated identifying vectors, e.g. 1100,0011");
  build->add_option("--recipe", recipe, "tiny-parallel")->check(CLI::IsMember({"tiny-parallel"}));
  build->add_option("-q", q, "field order");
  build->add_option("--delta", delta, "rank distance on each diagram (d = 2 delta)");
  build->add_option("--out", out, "output file (default stdout)");
  build->add_option("--max-codewords", max_codewords, "refuse larger codes");
  build->add_flag("--force-count-only", count_only, "print the size instead of refusing large codes");

  auto* check = app.add_subcommand("check", "verify the minimum distance of a cdc v1 file");
  check->add_option("--in", in, "input file")->required();
  check->add_option("--mode", mode, "exhaustive | sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  check->add_option("--seed", seed, "sampling seed");
  check->add_option("--pairs", pairs, "sampled pairs");
  check->add_option("--max-pairs", max_pairs, "exhaustive cap");
  check->add_option("--format", format, "text | kv")->check(CLI::IsMember({"text", "kv"}));

  auto* rankdist = app.add_subcommand("rankdist", "rank distribution of an MRD code");
  rankdist->add_option("-q", q, "field order")->required();
  rankdist->add_option("-m", m, "rows")->required();
  rankdist->add_option("-n", n, "columns")->required();
  rankdist->add_option("--delta", delta, "minimum rank distance")->required();

  auto* audit = app.add_subcommand("audit", "audit a Ferrers diagram rank-metric code");
  audit->add_option("--in", in, "fdrm v1 file");
  audit->add_option("--diagram", diagram, "construct optimal_fdrmc on this diagram, e.g. [1,2,4]");
  audit->add_option("--th43", th43, "construct the n,k code of the th43 diagram");
  audit->add_option("-q", q, "field order");
  audit->add_option("--delta", delta, "rank distance for --diagram");
  audit->add_option("--out", out, "also write the code as fdrm v1");
  audit->add_option("--format", format, "text | kv")->check(CLI::IsMember({"text", "kv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*bound) {
      const auto rows = load_registry(registry);
      const BoundResult b = source == "table11" ? table11_bound(q, n, d, k, rows) : bound_by_source(source, q, n, d, k);
      print_bound(b, rows);
      return kOk;
    }

    if (*table) {
      const auto rows = load_registry(registry);
      int bad = 0;
      if (format == "csv") std::cout << "q,n,d,k,new,old,diff,status\n";
      for (const auto& r : rows) {
        const BoundResult b = table11_bound(r.q, r.n, r.d, r.k, rows);
        std::string status = b.value == r.printed ? "ok" : "MISMATCH";
        if (r.old_bound && !(r.printed > *r.old_bound)) status = status == "ok" ? "NOT-NEW" : status + "+NOT-NEW";
        if (status != "ok") ++bad;
        const std::string old = r.old_bound ? r.old_bound->str() : "";
        const std::string diff = r.old_bound ? BigCount(b.value - *r.old_bound).str() : "";
        if (format == "csv")
          std::cout << r.q << "," << r.n << "," << r.d << "," << r.k << "," << b.value << "," << old << "," << diff
                    << "," << status << "\n";
        else
          std::cout << "A_" << r.q << "(" << r.n << "," << r.d << "," << r.k << ") >= " << b.value
                    << (old.empty() ? "" : "  old " + old) << "  " << status << "\n";
      }
      if (consistency) {
        std::cout << (format == "csv" ? "q,n,d,k,registry,generic,source,agree\n" : "\ngeneric constructions:\n");
        for (const auto& c : consistency_report(rows)) {
          if (format == "csv")
            std::cout << c.q << "," << c.n << "," << c.d << "," << c.k << "," << c.registry_value << ","
                      << c.generic_value << "," << c.generic_source << "," << (c.agree ? "yes" : "no") << "\n";
          else if (!c.agree)
            std::cout << "A_" << c.q << "(" << c.n << "," << c.d << "," << c.k << "): registry " << c.registry_value
                      << ", " << c.generic_source << " " << c.generic_value << "\n";
        }
      }
      if (format == "text") std::cout << rows.size() << " rows, " << bad << " mismatches\n";
      return bad ? kFailed : kOk;
    }

    if (*build) {
      const Field f(q);
      Cdc code;
      if (!recipe.empty()) {
        Thm32Build b = thm32_build(f, tiny_parallel_recipe());
        if (BigCount(b.code.size()) != b.predicted)
          throw Error(Errc::BadArguments, "build size differs from the count prediction");
        code = std::move(b.code);
      } else {
        if (multilevel.empty() || delta < 1) throw Error(Errc::BadArguments, "build needs --multilevel and --delta, or --recipe");
        std::vector<IdVec> vs;
        for (const auto& s : split(multilevel, ',')) vs.push_back(IdVec::parse(s));
        const CwcSet cwc = make_cwc(vs, 2 * delta);
        std::vector<std::pair<IdVec, FdrmCode>> entries;
        BigCount total = 0;
        for (const auto& v : cwc.vectors) {
          entries.emplace_back(v, code_for(f, v, delta));
          total += entries.back().second.code.size();
        }
        if (total > max_codewords) {
          if (count_only) {
            std::cout << "count=" << total << "\n";
            return kOk;
          }
          throw Error(Errc::TooLarge, total.str() + " codewords; pass --force-count-only for the size alone");
        }
        code = grass::multilevel(f, entries, delta);
      }
      emit(format_cdc(code), out);
      if (!out.empty() && out != "-") std::cerr << "wrote " << code.size() << " codewords to " << out << "\n";
      return kOk;
    }

    if (*check) {
      const Cdc code = parse_cdc(read_file(in));
      VerifyOptions opt;
      opt.mode = mode == "sampled" ? VerifyMode::Sampled : VerifyMode::Exhaustive;
      opt.seed = seed;
      opt.sample_pairs = pairs;
      opt.max_pairs = max_pairs;
      const VerifyReport r = check_cdc(code, opt);
      std::cout << (format == "kv" ? to_kv(r) : to_text(r));
      return r.passed ? kOk : kFailed;
    }

    if (*rankdist) {
      BigCount sum = 0;
      for (int r = 0; r <= std::min(m, n); ++r) {
        const BigCount a = rank_distribution(q, m, n, delta, r);
        sum += a;
        std::cout << "a(" << r << ") = " << a << "\n";
      }
      const BigCount size = mrd_size(q, m, n, delta);
      std::cout << "sum = " << sum << ", |code| = " << size << (sum == size ? " (identity holds)" : " (IDENTITY FAILS)")
                << "\n";
      return sum == size ? kOk : kFailed;
    }

    if (*audit) {
      const Field f(q);
      FdrmCode code;
      if (!in.empty()) {
        code = parse_fdrm(read_file(in));
        if (code.code.q != q) throw Error(Errc::BadArguments, "file is over GF(" + std::to_string(code.code.q) + "); pass -q");
      } else if (!th43.empty()) {
        const auto p = split(th43, ',');
        if (p.size() != 2) throw Error(Errc::BadArguments, "--th43 takes n,k");
        code = th43_optimal_fdrmc(f, std::stoi(p[0]), std::stoi(p[1]));
      } else if (!diagram.empty() && delta > 0) {
        code = optimal_fdrmc(f, FerrersDiagram::parse(diagram), delta);
      } else {
        throw Error(Errc::BadArguments, "audit needs --in, --th43 or --diagram with --delta");
      }
      const VerifyReport r = audit_fdrmc(f, code);
      std::cout << (format == "kv" ? to_kv(r) : to_text(r));
      if (!out.empty()) write_file(out, format_fdrm(code));
      return r.passed ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
