#include <CLI11.hpp>
#include <json.hpp>

#include "sqtile/contfrac.hpp"
#include "sqtile/epsilon_tiler.hpp"
#include "sqtile/greedy.hpp"
#include "sqtile/io.hpp"
#include "sqtile/kenyon.hpp"
#include "sqtile/network.hpp"
#include "sqtile/oracle.hpp"
#include "sqtile/stats.hpp"
#include "sqtile/svg.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

using namespace sqtile;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitConstruction = 3;

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json bounds_json(const Int& p, const Int& q, const Int& count) {
  json b;
  b["q_over_p"] = fraction_str(Rational(q, p));
  b["count_ge_q_over_p"] = count * p >= q;
  Int pw = 1;
  Int cnt = count;
  bool ok = false;
  for (Int i = 0; i < cnt; ++i) {
    pw <<= 1;
    if (pw >= q) {
      ok = true;
      break;
    }
  }
  b["two_pow_count_ge_q"] = ok || pw >= q;
  b["log2_q"] = std::log2(static_cast<double>(q));
  return b;
}

json verify_complete(const Tiling& t) {
  json v;
  ResistorNetwork g = tiling_to_network(t);
  Rational r = effective_resistance(g);
  Int kappa = spanning_tree_count(g, false);
  Int kappa_ab = spanning_tree_count(g, true);
  v["effective_resistance"] = fraction_str(r);
  v["height_over_width"] = fraction_str(Rational(t.height / t.width));
  v["kappa"] = kappa.str();
  v["kappa_ab"] = kappa_ab.str();
  bool ratio_ok = r * kappa == Rational(kappa_ab);
  bool hw_ok = r == t.height / t.width;
  v["resistance_matches_aspect"] = hw_ok;
  v["kappa_ratio_matches"] = ratio_ok;
  v["edges"] = g.edges.size();
  v["pass"] = ratio_ok && hw_ok;
  return v;
}

struct BenchRow {
  long p, q;
  long greedy_count = 0;
  long kenyon_count = 0;
  bool kenyon_valid = false;
};

BenchRow bench_row(long p, long q) {
  BenchRow row;
  row.p = p;
  row.q = q;
  row.greedy_count = static_cast<long>(greedy_cost(Int(p), Int(q)).convert_to<long>());
  KenyonResult kr = kenyon_tile(Int(p), Int(q));
  row.kenyon_count = static_cast<long>(kr.tiling.squares.size());
  row.kenyon_valid = validate_tiling(kr.tiling).valid;
  return row;
}

double fit_constant(const std::vector<BenchRow>& rows) {
  double c = 0;
  for (const auto& r : rows) {
    if (r.p < 2) continue;
    double excess = static_cast<double>(r.kenyon_count) - static_cast<double>(r.q) / r.p;
    double denom = std::log2(static_cast<double>(r.p));
    if (denom > 0) c = std::max(c, excess / denom);
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square tilings of integer rectangles: constructions and verification"};
  app.require_subcommand(1);

  // ---- tile ----
  auto* tile = app.add_subcommand("tile", "tile a rectangle and report bounds");
  std::string p_str, q_str, x_str, eps_str, algo = "greedy", out_path, svg_path;
  bool want_trace = false;
  tile->add_option("--p", p_str, "height (integer)");
  tile->add_option("--q", q_str, "width (integer)");
  tile->add_option("--x", x_str, "aspect ratio for the epsilon tiler (fraction)");
  tile->add_option("--epsilon", eps_str, "corner neighborhood size (fraction)");
  tile->add_option("--algorithm", algo, "greedy|kenyon|kenyon-baseline|epsilon");
  tile->add_option("--out", out_path, "write the tiling JSON here");
  tile->add_option("--svg", svg_path, "write an SVG rendering here");
  tile->add_flag("--trace", want_trace, "include construction trace counters");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "validate a tiling file and check the network laws");
  std::string verify_path;
  verify->add_option("file", verify_path, "tiling JSON file")->required();

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "counts for coprime pairs; optional constant fit");
  long bench_max_q = 100;
  long bench_stride = 1;
  std::string bench_csv;
  bool bench_fit = false;
  int bench_threads = 4;
  bench->add_option("--max-q", bench_max_q, "largest q");
  bench->add_option("--stride", bench_stride, "take every k-th coprime pair");
  bench->add_option("--csv", bench_csv, "write rows here");
  bench->add_flag("--fit", bench_fit, "fit C with count <= q/p + C log2 p");
  bench->add_option("--threads", bench_threads, "worker threads");

  // ---- oracle ----
  auto* oracle_cmd = app.add_subcommand("oracle", "exact minimal counts for small rectangles");
  int oracle_max_q = 8;
  std::string oracle_csv;
  oracle_cmd->add_option("--max-q", oracle_max_q, "largest side (<= 13 recommended)");
  oracle_cmd->add_option("--csv", oracle_csv, "write the table here");

  // ---- stats ----
  auto* stats_cmd = app.add_subcommand("stats", "corner-cost statistics for random aspect ratios");
  int stats_samples = 1000;
  std::string stats_eps = "1e-3,1e-6,1e-9";
  std::uint64_t stats_seed = 0;
  bool seed_given = false;
  std::string stats_csv, stats_json;
  stats_cmd->add_option("--samples", stats_samples, "sample count");
  stats_cmd->add_option("--epsilons", stats_eps, "comma-separated epsilon list");
  stats_cmd->add_option("--seed", stats_seed, "RNG seed (default from SQTILE_SEED or 1)")
      ->each([&](const std::string&) { seed_given = true; });
  stats_cmd->add_option("--csv", stats_csv, "write per-sample costs here");
  stats_cmd->add_option("--json", stats_json, "write the summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tile->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      json report;
      Tiling tiling;
      if (algo == "epsilon") {
        if (x_str.empty() || eps_str.empty()) {
          std::cerr << "epsilon algorithm needs --x and --epsilon\n";
          return kExitUsage;
        }
        auto x = parse_fraction(x_str);
        auto eps = parse_fraction(eps_str);
        if (!x || !eps) {
          std::cerr << "bad --x or --epsilon\n";
          return kExitUsage;
        }
        EpsilonResult er = epsilon_tile(*x, *eps);
        tiling = er.tiling;
        report["input"] = {{"x", fraction_str(*x)}, {"epsilon", fraction_str(*eps)}};
        report["trivial"] = er.trivial;
        report["strip_squares"] = er.strip_squares;
      } else {
        if (p_str.empty() || q_str.empty()) {
          std::cerr << "this algorithm needs --p and --q\n";
          return kExitUsage;
        }
        auto pr = parse_fraction(p_str);
        auto qr = parse_fraction(q_str);
        if (!pr || !qr || denominator(*pr) != 1 || denominator(*qr) != 1 || *pr < 1 || *qr < 1) {
          std::cerr << "--p and --q must be positive integers\n";
          return kExitUsage;
        }
        Int p = numerator(*pr), q = numerator(*qr);
        if (p > q) std::swap(p, q);
        report["input"] = {{"p", p.str()}, {"q", q.str()}};
        if (algo == "greedy") {
          tiling = greedy_tile(q, p);  // width q, height p
        } else if (algo == "kenyon" || algo == "kenyon-baseline") {
          KenyonResult kr = kenyon_tile(p, q,
                                        algo == "kenyon" ? KenyonStrategy::Refined
                                                         : KenyonStrategy::Baseline);
          tiling = std::move(kr.tiling);
          if (want_trace) {
            json stages = json::array();
            for (const auto& sc : kr.trace.stage_counts())
              stages.push_back({{"stage", sc.stage},
                                {"ells", sc.ells},
                                {"rects", sc.rects},
                                {"clean", sc.clean}});
            report["trace"] = stages;
          }
        } else {
          std::cerr << "unknown algorithm " << algo << "\n";
          return kExitUsage;
        }
        report["bounds"] = bounds_json(p, q, Int(tiling.squares.size()));
      }
      report["algorithm"] = algo;
      report["square_count"] = tiling.squares.size();

      ValidationReport vr = validate_tiling(tiling);
      report["valid"] = vr.valid;
      if (!vr.valid) report["violations"] = vr.violations;
      if (tiling.complete() && vr.valid) report["resistance_check"] = verify_complete(tiling);
      report["elapsed_ms"] = ms_since(t0);

      if (!out_path.empty()) atomic_write_file(out_path, tiling_to_json(tiling));
      if (!svg_path.empty()) atomic_write_file(svg_path, svg_render(tiling));
      std::cout << report.dump(2) << "\n";
      return vr.valid ? kExitOk : kExitInvalid;
    }

    if (verify->parsed()) {
      Tiling t = tiling_from_json(read_file(verify_path));
      ValidationReport vr = validate_tiling(t);
      json report;
      report["file"] = verify_path;
      report["square_count"] = t.squares.size();
      report["valid"] = vr.valid;
      if (!vr.valid) {
        report["violations"] = vr.violations;
        std::cout << report.dump(2) << "\n";
        return kExitInvalid;
      }
      if (t.complete()) {
        report["resistance_check"] = verify_complete(t);
        if (denominator(t.width) == 1 && denominator(t.height) == 1) {
          Int w = numerator(t.width), h = numerator(t.height);
          Int g = boost::multiprecision::gcd(w, h);
          LowerBoundCheck lb = lower_bound_check(h / g, w / g, Int(t.squares.size()));
          report["lower_bound"] = {{"pass", lb.pass}, {"area_ok", lb.area_ok}, {"log_ok", lb.log_ok}};
        }
        bool pass = report["resistance_check"]["pass"].get<bool>();
        std::cout << report.dump(2) << "\n";
        return pass ? kExitOk : kExitInvalid;
      }
      std::cout << report.dump(2) << "\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      std::vector<std::pair<long, long>> pairs;
      long counter = 0;
      for (long q = 2; q <= bench_max_q; ++q)
        for (long p = 1; p < q; ++p) {
          if (std::gcd(p, q) != 1) continue;
          if (counter++ % bench_stride != 0) continue;
          pairs.emplace_back(p, q);
        }
      std::vector<BenchRow> rows(pairs.size());
      std::size_t next = 0;
      std::mutex mtx;
      auto worker = [&]() {
        while (true) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lk(mtx);
            if (next >= pairs.size()) return;
            i = next++;
          }
          rows[i] = bench_row(pairs[i].first, pairs[i].second);
        }
      };
      std::vector<std::thread> threads;
      for (int i = 0; i < std::max(1, bench_threads); ++i) threads.emplace_back(worker);
      for (auto& th : threads) th.join();

      std::ostringstream csv;
      csv << "p,q,greedy,kenyon,kenyon_valid\n";
      for (const auto& r : rows)
        csv << r.p << "," << r.q << "," << r.greedy_count << "," << r.kenyon_count << ","
            << (r.kenyon_valid ? 1 : 0) << "\n";
      if (!bench_csv.empty())
        atomic_write_file(bench_csv, csv.str());
      else if (!bench_fit)
        std::cout << csv.str();
      json report;
      report["pairs"] = rows.size();
      bool all_valid = true;
      for (const auto& r : rows) all_valid = all_valid && r.kenyon_valid;
      report["all_valid"] = all_valid;
      if (bench_fit) report["fitted_C"] = fit_constant(rows);
      std::cout << report.dump(2) << "\n";
      return all_valid ? kExitOk : kExitInvalid;
    }

    if (oracle_cmd->parsed()) {
      auto rows = optimal_table(oracle_max_q);
      std::ostringstream csv;
      csv << "p,q,min_count,witness_json\n";
      for (const auto& r : rows) {
        json w = json::array();
        for (const auto& s : r.witness.squares)
          w.push_back({{"x", fraction_str(s.x)}, {"y", fraction_str(s.y)}, {"side", fraction_str(s.side)}});
        std::string esc;
        for (char ch : w.dump()) {
          if (ch == '"') esc += "\"\"";
          else esc += ch;
        }
        csv << r.p << "," << r.q << "," << r.min_count << ",\"" << esc << "\"\n";
      }
      std::string text = csv.str();
      if (!oracle_csv.empty())
        atomic_write_file(oracle_csv, text);
      else
        std::cout << text;
      return kExitOk;
    }

    if (stats_cmd->parsed()) {
      if (!seed_given) {
        const char* env = std::getenv("SQTILE_SEED");
        stats_seed = env ? std::strtoull(env, nullptr, 10) : 1;
      }
      std::vector<Rational> eps;
      std::stringstream ss(stats_eps);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto e = parse_fraction(tok);
        if (!e || *e <= 0 || *e >= 1) {
          std::cerr << "bad epsilon " << tok << "\n";
          return kExitUsage;
        }
        eps.push_back(*e);
      }
      McSummary mc = peres_mc(stats_samples, eps, stats_seed);
      json report;
      report["seed"] = mc.seed;
      report["samples"] = mc.samples;
      json per = json::array();
      for (const auto& es : mc.per_eps)
        per.push_back({{"epsilon", fraction_str(es.epsilon)},
                       {"median", es.median},
                       {"q1", es.q1},
                       {"q3", es.q3},
                       {"iqr", es.iqr}});
      report["per_epsilon"] = per;
      if (!stats_csv.empty()) {
        std::ostringstream csv;
        csv << "sample,epsilon,T\n";
        for (std::size_t e = 0; e < mc.costs.size(); ++e)
          for (std::size_t i = 0; i < mc.costs[e].size(); ++i)
            csv << i << "," << fraction_str(mc.per_eps[e].epsilon) << "," << mc.costs[e][i].str()
                << "\n";
        atomic_write_file(stats_csv, csv.str());
      }
      if (!stats_json.empty()) atomic_write_file(stats_json, report.dump(2) + "\n");
      std::cout << report.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstruction;
  }
  return kExitUsage;
}
