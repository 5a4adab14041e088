#include "ospd/cli/commands.hpp"

#include "ospd/decomp/decomposition.hpp"
#include "ospd/superalg/constructors.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace ospd::cli {

namespace {

using Clock = std::chrono::steady_clock;

json timing_json(bool enabled, Clock::time_point start) {
  if (!enabled) return nullptr;
  return {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
}

void check_verify_params(std::size_t k, std::size_t n) {
  if (k < 2) throw UsageError("verify: need k >= 2");
  if (n < 1) throw UsageError("verify: need n >= 1");
  if (k == n) throw UsageError("verify: k = n rejected: sl(n,n) is not basic simple");
}

std::string point_file(std::size_t k, std::size_t n) {
  return "verify_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json";
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("OSPDECOMP_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("OSPDECOMP_SEED is not an unsigned integer: ") + env);
  }
}

CommandResult cmd_verify(const VerifyParams& p) {
  check_verify_params(p.k, p.n);
  const auto start = Clock::now();
  const decomp::ExampleDecomposition ex = decomp::build_example_decomposition(p.k, p.n);
  const decomp::DecompositionReport r = decomp::verify_sum(ex.s, ex.k, ex.l, {.fingerprints = true, .seed = p.seed});
  const decomp::ModuleTable modules = decomp::analyze_modules(ex.l, p.seed);

  const bool match_k = r.fingerprint_k == superalg::expected_fingerprint(ex.k.label());
  const bool match_l = r.fingerprint_l == superalg::expected_fingerprint(ex.l.label());
  json results = {{"report", report_json(r)},
                  {"modules", module_table_json(modules)},
                  {"fingerprintMatch", {{"K", match_k}, {"L", match_l}}}};
  json command = {{"name", "verify"}, {"k", p.k}, {"n", p.n}, {"seed", p.seed}};
  const bool ok = r.verdict == decomp::Verdict::exact_sum && match_k && match_l;
  return {document(command, results, timing_json(p.timing, start)), ok ? kOk : kMathFailure};
}

CommandResult cmd_screen(const ScreenParams& p) {
  if (p.m < 3) throw UsageError("screen: need m >= 3");
  if (p.n < 1) throw UsageError("screen: need n >= 1");
  json table = json::array();
  json survivors = json::array();
  for (const auto& row : decomp::screen_all(p.m, p.n)) {
    table.push_back(screen_row_json(row));
    if (row.verdict.status == decomp::ScreenStatus::survives)
      survivors.push_back({{"K", row.pair.k.str()}, {"L", row.pair.l.str()}});
  }
  json results = {{"candidates", table.size()}, {"survivors", std::move(survivors)}, {"table", std::move(table)}};
  return {document({{"name", "screen"}, {"m", p.m}, {"n", p.n}}, results), kOk};
}

superalg::Superalgebra build_named(const BuildParams& p) {
  using namespace superalg;
  const std::string& a = p.algebra;
  OrthoForm form;
  try {
    form = parse_ortho_form(p.form);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  try {
    if (a == "gl") return build_gl(p.m, 2 * p.n);
    if (a == "sl") return build_sl(p.m, p.n);
    if (a == "osp") return build_osp(p.m, p.n, form);
    if (a == "o") return build_o(p.m, form);
    if (a == "sp") return build_sp(p.n);
    if (a == "example-s" || a == "example-k" || a == "example-l") {
      check_verify_params(p.k, p.n);
      auto ex = decomp::build_example_decomposition(p.k, p.n);
      return a == "example-s" ? ex.s : a == "example-k" ? ex.k : ex.l;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown algebra '" + a + "'");
}

namespace {

json build_echo(const std::string& name, const BuildParams& p) {
  return {{"name", name}, {"algebra", p.algebra}, {"m", p.m}, {"n", p.n}, {"k", p.k}, {"form", p.form}};
}

}  // namespace

CommandResult cmd_build(const BuildParams& p) {
  const superalg::Superalgebra a = build_named(p);
  return {document(build_echo("build", p), algebra_dump(a)), kOk};
}

CommandResult cmd_modules(const ModulesParams& p) {
  const superalg::Superalgebra a = build_named(p.algebra);
  if (a.sizes().odd == 0) throw UsageError("modules: need a superalgebra with two coordinate blocks");
  const decomp::ModuleTable t = decomp::analyze_modules(a, p.seed);
  json command = build_echo("modules", p.algebra);
  command["seed"] = p.seed;
  json results = module_table_json(t);
  results["label"] = a.label().str();
  return {document(command, results), kOk};
}

CommandResult cmd_sweep(const SweepParams& p) {
  if (p.k_max < 2) throw UsageError("sweep: need k-max >= 2");
  if (p.n_max < 1) throw UsageError("sweep: need n-max >= 1");
  if (p.jobs < 1) throw UsageError("sweep: need jobs >= 1");
  const auto start = Clock::now();
  struct Point {
    std::size_t k, n;
    std::string status, reason;
  };
  std::vector<Point> points;
  for (std::size_t k = 2; k <= p.k_max; ++k)
    for (std::size_t n = 1; n <= p.n_max; ++n) points.push_back({k, n, k == n ? "skipped" : "", k == n ? "k = n" : ""});
  if (p.out_dir) std::filesystem::create_directories(*p.out_dir);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      Point& pt = points[i];
      if (pt.status == "skipped") continue;
      try {
        CommandResult r = cmd_verify({pt.k, pt.n, p.seed, p.timing});
        pt.status = r.doc["results"]["report"]["verdict"].get<std::string>();
        if (r.exit_code != kOk) {
          pt.status = "failed";
          pt.reason = r.doc["results"]["report"]["reason"].get<std::string>();
          if (pt.reason.empty()) pt.reason = "fingerprint mismatch";
        }
        if (p.out_dir) write_atomic(std::filesystem::path(*p.out_dir) / point_file(pt.k, pt.n), canonical_dump(r.doc));
      } catch (const std::exception& e) {
        pt.status = "failed";
        pt.reason = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::min(p.jobs, points.size()); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json list = json::array();
  std::size_t verified = 0, failed = 0, skipped = 0;
  for (const auto& pt : points) {
    list.push_back({{"k", pt.k}, {"n", pt.n}, {"status", pt.status}, {"reason", pt.reason}});
    if (pt.status == "skipped") ++skipped;
    else if (pt.status == "failed") ++failed;
    else ++verified;
  }
  json results = {{"points", std::move(list)},
                  {"counts", {{"verified", verified}, {"failed", failed}, {"skipped", skipped}}}};
  json command = {{"name", "sweep"}, {"kMax", p.k_max}, {"nMax", p.n_max}, {"seed", p.seed}};
  CommandResult out{document(command, results, timing_json(p.timing, start)), failed ? kMathFailure : kOk};
  if (p.out_dir) write_atomic(std::filesystem::path(*p.out_dir) / "summary.json", canonical_dump(out.doc));
  return out;
}

namespace {

void print_summary(const json& doc, std::ostream& out) {
  const std::string name = doc["command"]["name"];
  const json& r = doc["results"];
  if (name == "verify") {
    const json& rep = r["report"];
    out << "verify k=" << doc["command"]["k"] << " n=" << doc["command"]["n"] << ": " << rep["verdict"].get<std::string>()
        << "\n  dims S=" << rep["dims"]["S"].dump() << " K=" << rep["dims"]["K"].dump() << " L=" << rep["dims"]["L"].dump()
        << "\n  sum rank " << rep["sumRank"] << ", intersection " << rep["intersectionDim"] << "\n  fingerprints K "
        << (r["fingerprintMatch"]["K"].get<bool>() ? "match" : "MISMATCH") << ", L "
        << (r["fingerprintMatch"]["L"].get<bool>() ? "match" : "MISMATCH") << "\n";
    if (!rep["reason"].get<std::string>().empty()) out << "  reason: " << rep["reason"].get<std::string>() << "\n";
  } else if (name == "screen") {
    out << "screen osp(" << doc["command"]["m"] << "," << 2 * doc["command"]["n"].get<std::size_t>() << "): "
        << r["candidates"] << " candidates, " << r["survivors"].size() << " survivors\n";
    for (const auto& s : r["survivors"]) out << "  " << s["K"].get<std::string>() << " + " << s["L"].get<std::string>() << "\n";
  } else if (name == "sweep") {
    for (const auto& pt : r["points"])
      out << "  (" << pt["k"] << "," << pt["n"] << ") " << pt["status"].get<std::string>() << "\n";
    out << "sweep: " << r["counts"]["verified"] << " verified, " << r["counts"]["failed"] << " failed, "
        << r["counts"]["skipped"] << " skipped\n";
  } else if (name == "build") {
    std::size_t even = 0;
    for (const auto& b : r["basis"]) even += b["parity"] == "even";
    out << r["label"].get<std::string>() << ": dim " << r["basis"].size() << " (even " << even << ", odd "
        << r["basis"].size() - even << ")\n";
  } else if (name == "modules") {
    out << r["label"].get<std::string>() << "\n";
    for (const char* side : {"V", "W"})
      for (const auto& c : r[side])
        out << "  " << side << ": dim " << c["dim"] << ", type " << c["type"].get<std::string>() << ", weight "
            << c["highestWeight"].dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of osp(2k,2n) = osp(2k-1,2n) + sl(k,n)", "ospdecomp"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
  bool as_json = false;
  bool timing = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "seed for randomized splitting (default: $OSPDECOMP_SEED or 0)");
    sub->add_option("--out", out_path, "write the JSON report here (a directory for sweep)");
    sub->add_flag("--json", as_json, "print the JSON report on stdout");
  };

  VerifyParams vp;
  auto* verify = app.add_subcommand("verify", "build and verify the sum decomposition at (k, n)");
  verify->add_option("--k", vp.k)->required();
  verify->add_option("--n", vp.n)->required();
  verify->add_flag("--timing", timing, "record wall-clock time in the report");
  common(verify);

  ScreenParams sp;
  auto* screen = app.add_subcommand("screen", "screen candidate pairs for osp(m, 2n)");
  screen->add_option("--m", sp.m)->required();
  screen->add_option("--n", sp.n)->required();
  common(screen);

  BuildParams bp;
  auto algebra_opts = [&](CLI::App* sub) {
    sub->add_option("--algebra", bp.algebra, "gl, sl, osp, o, sp, example-s, example-k, example-l")->required();
    sub->add_option("--m", bp.m, "first block size (gl, sl, osp, o)");
    sub->add_option("--n", bp.n, "second parameter: sl(m,n), osp(m,2n), sp(2n), example n");
    sub->add_option("--k", bp.k, "example k");
    sub->add_option("--form", bp.form, "ortho form: identity or split");
  };
  auto* build = app.add_subcommand("build", "dump the basis of an algebra");
  algebra_opts(build);
  common(build);
  auto* modules = app.add_subcommand("modules", "split V and W over the even part");
  algebra_opts(modules);
  common(modules);

  SweepParams wp;
  auto* sweep = app.add_subcommand("sweep", "verify every (k, n) with k <= k-max, n <= n-max");
  sweep->add_option("--k-max", wp.k_max)->required();
  sweep->add_option("--n-max", wp.n_max)->required();
  sweep->add_option("--jobs", wp.jobs, "parallel workers");
  sweep->add_flag("--timing", timing, "record wall-clock time in the report");
  common(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    seed = default_seed();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    CommandResult r;
    if (verify->parsed()) {
      vp.seed = seed;
      vp.timing = timing;
      r = cmd_verify(vp);
    } else if (screen->parsed()) {
      r = cmd_screen(sp);
    } else if (build->parsed()) {
      r = cmd_build(bp);
    } else if (modules->parsed()) {
      r = cmd_modules({bp, seed});
    } else {
      wp.seed = seed;
      wp.timing = timing;
      wp.out_dir = out_path;
      r = cmd_sweep(wp);
      if (as_json) out << canonical_dump(r.doc);
      else print_summary(r.doc, out);
      return r.exit_code;
    }
    if (out_path) write_atomic(*out_path, canonical_dump(r.doc));
    if (as_json) out << canonical_dump(r.doc);
    else print_summary(r.doc, out);
    return r.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace ospd::cli
