// hornwb: enumerate Horn triples, compute Littlewood-Richardson
// coefficients, run TT-reductions, check Horn inequalities on sampled
// Hermitian pairs, and build exact flag witnesses in rational matrix models.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <random>

#include "horn/disk_cache.hpp"
#include "horn/fillings.hpp"
#include "horn/reduction.hpp"
#include "horn/spectra.hpp"
#include "horn/triple_io.hpp"
#include "horn/witness.hpp"

using namespace horn;
using nlohmann::json;

namespace {

std::string elements_str(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.elements().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.elements()[i]);
  }
  return out;
}

void print_triples(const std::vector<HornTriple>& triples, Variant v, const std::string& format) {
  if (format == "json") {
    for (const auto& t : triples) std::cout << triple_to_json(t, v).dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,r,I,J,K,variant\n";
    for (const auto& t : triples)
      std::cout << t.n << ',' << t.r() << ',' << elements_str(t.I) << ',' << elements_str(t.J)
                << ',' << elements_str(t.K) << ',' << to_string(v) << "\n";
  } else {
    for (const auto& t : triples)
      std::cout << "(" << t.I.str() << "," << t.J.str() << "," << t.K.str() << ")\n";
  }
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return rat(std::stol(text));
  return rat(std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1)));
}

json report_to_json(const VerifyReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back(json{{"check", row.label},
                        {"value", rat_str(row.value)},
                        {"bound", rat_str(row.bound)},
                        {"ok", row.ok()}});
  return rows;
}

json basis_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct TripleArgs {
  int n = 0;
  std::vector<int> I, J, K;
  HornTriple make() const {
    return HornTriple(n, IndexSet(I, n), IndexSet(J, n), IndexSet(K, n));
  }
  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "ambient size")->required();
    cmd->add_option("--I", I, "elements of I, e.g. 2,4,6")->required()->delimiter(',');
    cmd->add_option("--J", J, "elements of J")->required()->delimiter(',');
    cmd->add_option("--K", K, "elements of K")->required()->delimiter(',');
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn triple workbench"};
  app.set_config("--config", "", "key=value config file; flags override");
  app.require_subcommand(1);

  std::string cache_dir = DiskCache::default_dir().string();
  app.add_option("--cache-dir", cache_dir, "triple-set cache directory")
      ->envname("HORNWB_CACHE_DIR");

  TripleCache memo;

  // enum
  auto* cmd_enum = app.add_subcommand("enum", "enumerate a Horn triple set");
  int en = 0, er = 0;
  std::string evariant = "tilde", eformat = "table";
  bool no_cache = false;
  cmd_enum->add_option("--n", en, "ambient size")->required();
  cmd_enum->add_option("--r", er, "cardinality")->required();
  cmd_enum->add_option("--variant", evariant, "classic|tilde")
      ->check(CLI::IsMember({"classic", "tilde"}));
  cmd_enum->add_option("--format", eformat, "json|table|csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  cmd_enum->add_flag("--no-cache", no_cache, "skip the on-disk cache");

  // table
  auto* cmd_table = app.add_subcommand("table", "LR-minimal irreducible orbit representatives");
  int tmin = 4, tmax = 9, tr = 4;
  std::string tformat = "table";
  cmd_table->add_option("--n-min", tmin, "first ambient size");
  cmd_table->add_option("--n-max", tmax, "last ambient size");
  cmd_table->add_option("--r", tr, "cardinality");
  cmd_table->add_option("--format", tformat, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  // lr
  auto* cmd_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient of a triple");
  TripleArgs lr_args;
  lr_args.attach(cmd_lr);
  std::string lrformat = "table";
  cmd_lr->add_option("--format", lrformat, "json|table")->check(CLI::IsMember({"json", "table"}));

  // reduce
  auto* cmd_reduce = app.add_subcommand("reduce", "reduction chain to an irreducible triple");
  TripleArgs red_args;
  red_args.attach(cmd_reduce);
  std::string rformat = "table";
  cmd_reduce->add_option("--format", rformat, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  // verify-horn
  auto* cmd_verify = app.add_subcommand("verify-horn", "sampled Horn inequality sweep");
  int vn = 4, vsamples = 200, vthreads = 1;
  std::uint64_t vseed = 1;
  double vtol = 1e-9, vtrace_tol = 1e-10;
  std::string vformat = "table";
  cmd_verify->add_option("--n", vn, "matrix size")->required();
  cmd_verify->add_option("--samples", vsamples, "sampled pairs");
  cmd_verify->add_option("--seed", vseed, "base RNG seed");
  cmd_verify->add_option("--tol", vtol, "scaled slack tolerance");
  cmd_verify->add_option("--trace-tol", vtrace_tol, "scaled trace identity tolerance");
  cmd_verify->add_option("--threads", vthreads, "worker threads");
  cmd_verify->add_option("--format", vformat, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  // flag-witness
  auto* cmd_witness = app.add_subcommand("flag-witness",
                                         "build and verify a flag witness projection");
  TripleArgs wit_args;
  wit_args.attach(cmd_witness);
  int wdim = 0;
  std::uint64_t wseed = 1;
  std::string wformat = "table";
  cmd_witness->add_option("--dim", wdim, "ambient dimension (default: smallest feasible)");
  cmd_witness->add_option("--seed", wseed, "flag RNG seed");
  cmd_witness->add_option("--format", wformat, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  // wheel
  auto* cmd_wheel = app.add_subcommand("wheel", "six-spoke construction on a random configuration");
  int hdim = 12;
  std::uint64_t hseed = 1;
  std::string heps, hformat = "table";
  cmd_wheel->add_option("--dim", hdim, "ambient dimension, multiple of 6");
  cmd_wheel->add_option("--seed", hseed, "configuration RNG seed");
  cmd_wheel->add_option("--eps", heps, "trace slack as a fraction, default 1/dim");
  cmd_wheel->add_option("--format", hformat, "json|table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_enum) {
      const Variant v = variant_from_string(evariant);
      std::shared_ptr<const TripleCache::Set> set;
      if (no_cache) {
        set = enumerate_t(en, er, v, memo);
      } else {
        DiskCache disk{std::filesystem::path(cache_dir)};
        set = disk.fetch(en, er, v, memo);
      }
      print_triples(*set, v, eformat);
      return 0;
    }

    if (*cmd_table) {
      DiskCache disk{std::filesystem::path(cache_dir)};
      json out = json::array();
      for (int n = tmin; n <= tmax; ++n) {
        disk.fetch(n, tr, Variant::tilde, memo);  // warm the memo from disk
        const auto reps = lr_minimal_irreducible(n, tr, memo);
        if (tformat == "json") {
          json row{{"n", n}, {"triples", json::array()}};
          for (const auto& t : reps) row["triples"].push_back(triple_to_json(t, Variant::tilde));
          out.push_back(std::move(row));
        } else {
          std::cout << n << " | ";
          if (reps.empty()) std::cout << "∅";
          for (std::size_t i = 0; i < reps.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << "(" << reps[i].I.str() << "," << reps[i].J.str() << ","
                      << reps[i].K.str() << ")";
          }
          std::cout << "\n";
        }
      }
      if (tformat == "json") std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_lr) {
      const HornTriple t = lr_args.make();
      const long c = lr_of_triple(t);
      if (lrformat == "json") {
        json out = triple_to_json(t, Variant::tilde);
        out["lr"] = c;
        const auto pt = partition_triple(t);
        out["lambda"] = pt.lambda.parts();
        out["mu"] = pt.mu.parts();
        out["nu"] = pt.nu.parts();
        std::cout << out.dump() << "\n";
      } else {
        std::cout << c << "\n";
      }
      return 0;
    }

    if (*cmd_reduce) {
      const HornTriple t = red_args.make();
      const auto set = enumerate_t(t.n, t.r(), Variant::tilde, memo);
      if (!contains_triple(*set, t)) {
        std::cerr << "triple is not in the tilde set for (n,r)\n";
        return 1;
      }
      const auto chain = reduce_to_irreducible(t, memo);
      if (rformat == "json") {
        std::cout << chain_to_json(chain, Variant::tilde).dump(2) << "\n";
      } else {
        for (const auto& step : chain.steps)
          std::cout << step.witness.str() << " -> " << step.result.str() << "\n";
        std::cout << "irreducible: " << chain.end().str() << "\n";
      }
      return 0;
    }

    if (*cmd_verify) {
      const auto report = sweep(vn, vsamples, vseed, vtol, vtrace_tol, memo, vthreads);
      if (vformat == "json") {
        std::cout << slack_report_to_json(report).dump(2) << "\n";
      } else {
        std::cout << "n=" << report.n << " samples=" << report.samples
                  << " min scaled slack=" << report.min_scaled_slack
                  << " max scaled trace error=" << report.max_scaled_trace_error << "\n";
        std::size_t width = 0;
        for (const auto& row : report.rows)
          width = std::max(width, row.triple.str().size());
        for (const auto& row : report.rows)
          std::cout << std::left << std::setw(static_cast<int>(width) + 2) << row.triple.str()
                    << std::right << std::setw(14) << row.min_slack << "  seed "
                    << row.argmin_seed << (row.beyond_theorem_range ? "  [r=n]" : "") << "\n";
        std::cout << (report.ok() ? "PASS" : "FAIL") << "\n";
      }
      return report.ok() ? 0 : 1;
    }

    if (*cmd_witness) {
      const HornTriple t = wit_args.make();
      const int dim = wdim > 0 ? wdim : min_dimension(t, memo);
      if (dim % t.n != 0) {
        std::cerr << "dimension " << dim << " is not divisible by n=" << t.n << "\n";
        return 1;
      }
      std::mt19937_64 rng(wseed);
      const Subspace w = Subspace::full(dim);
      const Flag e = Flag::random(w, rng), f = Flag::random(w, rng), g = Flag::random(w, rng);
      const Subspace p = witness_pn(t, e, f, g, memo);
      const auto report = verify_pn(p, t, e, f, g, rat(0));
      if (wformat == "json") {
        json out{{"N", dim},
                 {"triple", triple_to_json(t, Variant::tilde)},
                 {"seed", wseed},
                 {"tau_p", rat_str(p.trace())},
                 {"p_basis", basis_to_json(p.basis())},
                 {"checks", report_to_json(report)},
                 {"verified", report.ok()}};
        json levels = json::object();
        const int d = dim / t.n;
        const std::array<std::pair<const Flag*, const IndexSet*>, 3> flags = {
            std::pair{&e, &t.I}, std::pair{&f, &t.J}, std::pair{&g, &t.K}};
        const std::array<std::string, 3> names = {"e", "f", "g"};
        for (std::size_t a = 0; a < 3; ++a) {
          json per = json::object();
          for (int l = 1; l <= t.r(); ++l) {
            const int idx = flags[a].second->entry(l);
            per[std::to_string(idx) + "/" + std::to_string(t.n)] =
                basis_to_json(flags[a].first->level(idx * d).basis());
          }
          levels[names[a]] = std::move(per);
        }
        out["flag_levels"] = std::move(levels);
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& row : report.rows)
          std::cout << row.label << ": " << rat_str(row.value) << " (bound " << rat_str(row.bound)
                    << ") " << (row.ok() ? "ok" : "VIOLATED") << "\n";
        if (report.ok())
          std::cout << "P_" << t.n << " verified (exact) at N=" << dim << "\n";
        else
          std::cout << "P_" << t.n << " verification FAILED\n";
      }
      return report.ok() ? 0 : 1;
    }

    if (*cmd_wheel) {
      const Rat eps = heps.empty() ? rat(1, hdim) : parse_rat(heps);
      const auto [e, f] = wheel_configuration(hdim, hseed);
      const auto res = wheel_construction(e, f, eps);
      if (hformat == "json") {
        json out{{"N", hdim},
                 {"seed", hseed},
                 {"eps", rat_str(eps)},
                 {"tau_p", rat_str(res.p.trace())},
                 {"p_basis", basis_to_json(res.p.basis())},
                 {"checks", report_to_json(res.report)},
                 {"verified", res.report.ok()}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& row : res.report.rows)
          std::cout << row.label << ": " << rat_str(row.value) << " (bound " << rat_str(row.bound)
                    << ") " << (row.ok() ? "ok" : "VIOLATED") << "\n";
        std::cout << (res.report.ok() ? "wheel verified (exact)" : "wheel FAILED") << "\n";
      }
      return res.report.ok() ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
