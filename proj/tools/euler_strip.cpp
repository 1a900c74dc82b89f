// euler-strip: command line front end for the prime-product library.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "estrip/errors.hpp"
#include "estrip/euler.hpp"
#include "estrip/io.hpp"
#include "estrip/lfunc.hpp"
#include "estrip/parallel.hpp"
#include "estrip/primes.hpp"
#include "estrip/repro.hpp"
#include "estrip/rwp.hpp"
#include "estrip/zeros.hpp"

using namespace estrip;
using nlohmann::json;

namespace {

struct CharacterArgs {
  std::uint32_t modulus = 1;
  std::uint32_t index = 1;
  void add(CLI::App* app) {
    app->add_option("--modulus", modulus, "character modulus k")->capture_default_str();
    app->add_option("--index", index, "character index j (1 = principal)")->capture_default_str();
  }
  DirichletCharacter get() const { return modulus == 1 ? DirichletCharacter::trivial() : character(modulus, index); }
};

// Enough primes to hold N contributing primes for chi.
PrimeTable table_for(std::size_t N, const DirichletCharacter& chi) {
  std::size_t count = std::max<std::size_t>(N, 1);
  if (!chi.is_trivial()) {
    // at most omega(k) primes divide k
    std::uint32_t k = chi.modulus();
    for (std::uint32_t p = 2; p * p <= k; ++p) {
      if (k % p == 0) {
        ++count;
        while (k % p == 0) k /= p;
      }
    }
    if (k > 1) ++count;
  }
  return PrimeTable::generate(count);
}

std::string fmt(double x) { return io::format_double(x); }

json zero_json(const ZeroResult& r) {
  return {{"n", r.n},
          {"t_n", r.t_n},
          {"residual", r.residual},
          {"iterations", r.iterations},
          {"delta", r.delta},
          {"primes_used", r.primes_used},
          {"newton_polished", r.newton_polished}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Euler products, Cesaro means and prime sums in the critical strip"};
  app.set_config("--config", "", "TOML-style key = value file pinning defaults; flags override it");
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_help_all_flag("--help-all");

  std::string out = "-";
  auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("--out", out, what)->capture_default_str();
  };

  // primes
  auto* primes = app.add_subcommand("primes", "first N primes with gaps and logs");
  std::size_t prime_count = 100;
  primes->add_option("--count", prime_count, "number of primes")->capture_default_str();
  add_out(primes, "CSV n,p,gap,log_p");

  // character
  auto* chr = app.add_subcommand("character", "values of chi_{k,j} over one period");
  CharacterArgs chr_args;
  chr_args.add(chr);
  add_out(chr, "CSV n,re,im,numerator,order");

  // eval
  auto* eval = app.add_subcommand("eval", "zeta(s) or L(s, chi) by analytic continuation");
  double sigma = 0.5, t = 0.0;
  CharacterArgs eval_chi;
  eval->add_option("--sigma", sigma)->required();
  eval->add_option("--t", t)->required();
  eval_chi.add(eval);
  add_out(eval, "CSV re,im,abs,arg,est_error");

  // euler-product
  auto* ep = app.add_subcommand("euler-product", "truncated Euler product and its Cesaro mean");
  std::uint64_t ep_n = 0;
  double cutoff_c = 1.0;
  bool enforce = false;
  std::vector<std::uint64_t> checkpoints;
  CharacterArgs ep_chi;
  ep->add_option("--sigma", sigma)->required();
  ep->add_option("--t", t)->required();
  ep->add_option("--n", ep_n, "number of primes")->required();
  ep_chi.add(ep);
  ep->add_option("--cutoff-c", cutoff_c, "constant c in N_c = c t^2")->capture_default_str();
  ep->add_flag("--enforce-cutoff", enforce, "truncate principal characters at N_c");
  ep->add_option("--checkpoints", checkpoints, "emit only these N (streamed, no table)")->delimiter(',');
  add_out(ep, "CSV n,re_P,im_P,abs_P,re_avg,im_avg,abs_avg");

  // rwp
  auto* rwp = app.add_subcommand("rwp", "random walk of the primes B_N");
  std::size_t rwp_n = 0;
  double u = 1.0;
  bool degraded = false;
  CharacterArgs rwp_chi;
  rwp->add_option("--t", t)->required();
  rwp->add_option("--n", rwp_n, "contributing primes")->required();
  rwp_chi.add(rwp);
  rwp->add_option("--u", u)->capture_default_str();
  rwp->add_flag("--degraded", degraded, "replace p_n by n log n (n >= 2)");
  add_out(rwp, "CSV n,b,B");

  // rwp-ensemble
  auto* ens = app.add_subcommand("rwp-ensemble", "ensemble of B_N(u_i)/sqrt(N) with u_i uniform on [0, 2 pi]");
  std::size_t ens_n = 30'000, ens_e = 80'000;
  std::uint64_t seed = 20240521;
  bool uniform = false;
  std::string hist_out;
  CharacterArgs ens_chi;
  ens->add_option("--t", t)->required();
  ens->add_option("--n", ens_n)->capture_default_str();
  ens->add_option("--e", ens_e, "ensemble size")->capture_default_str();
  ens->add_option("--seed", seed)->capture_default_str();
  ens_chi.add(ens);
  ens->add_flag("--degraded", degraded, "replace p_n by n log n (n >= 2)");
  ens->add_flag("--uniform", uniform, "iid uniform[-1,1] steps instead of primes");
  ens->add_option("--hist", hist_out, "histogram CSV bin_lo,bin_hi,count");
  add_out(ens, "stats JSON");

  // zero / zeros
  double delta = kDefaultZeroDelta, tol = 1e-9;
  std::size_t zero_primes = 0;
  auto* zero = app.add_subcommand("zero", "n-th zero ordinate from the prime-sum equation");
  std::uint64_t zero_n = 1;
  zero->add_option("--n", zero_n)->required();
  zero->add_option("--delta", delta)->capture_default_str();
  zero->add_option("--primes", zero_primes, "prime truncation; 0 = min(1e4, t0^2)")->capture_default_str();
  zero->add_option("--tol", tol)->capture_default_str();
  add_out(zero, "ZeroResult JSON");

  auto* zeros = app.add_subcommand("zeros", "batch of zeros n = from..to");
  std::uint64_t from = 1, to = 10;
  zeros->add_option("--from", from)->capture_default_str();
  zeros->add_option("--to", to)->capture_default_str();
  zeros->add_option("--delta", delta)->capture_default_str();
  zeros->add_option("--primes", zero_primes, "prime truncation; 0 = min(1e4, t0^2)")->capture_default_str();
  zeros->add_option("--tol", tol)->capture_default_str();
  add_out(zeros, "CSV n,t_n,residual,iterations,delta,primes_used");

  // counting
  auto* counting = app.add_subcommand("counting", "smoothed zero-counting staircase");
  double t_max = 100.0, step = 0.1;
  std::size_t counting_primes = 100;
  bool exact = false;
  counting->add_option("--t-max", t_max)->capture_default_str();
  counting->add_option("--step", step)->capture_default_str();
  counting->add_option("--delta", delta)->capture_default_str();
  counting->add_option("--primes", counting_primes)->capture_default_str();
  counting->add_flag("--exact", exact, "add the column computed from the continued arg of zeta");
  add_out(counting, "CSV T,N_delta[,N_exact]");

  // repro
  auto* rep = app.add_subcommand("repro", "regenerate a table or figure with pass/fail rows");
  std::string target;
  std::string budget = "small";
  ReproSettings rs;
  std::string out_dir = rs.out_dir.string();
  rep->add_option("target", target, "table1 table2 fig1 ... fig8")->required();
  rep->add_option("--budget", budget, "zero | small | full")->capture_default_str();
  rep->add_option("--seed", rs.seed)->capture_default_str();
  rep->add_option("--out-dir", out_dir)->capture_default_str();
  rep->add_option("--band-trivial", rs.band_trivial)->capture_default_str();
  rep->add_option("--band-character", rs.band_character)->capture_default_str();
  rep->add_option("--variance-lo", rs.variance_lo)->capture_default_str();
  rep->add_option("--variance-hi", rs.variance_hi)->capture_default_str();
  rep->add_option("--mean-max", rs.mean_max)->capture_default_str();
  rep->add_option("--sdelta-sup", rs.sdelta_sup)->capture_default_str();
  rep->add_option("--counting-delta", rs.counting_delta)->capture_default_str();
  rep->add_option("--counting-primes", rs.counting_primes)->capture_default_str();
  rep->add_option("--counting-step", rs.counting_step)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*primes) {
      const auto table = PrimeTable::generate(prime_count);
      io::Csv csv({"n", "p", "gap", "log_p"});
      for (std::size_t i = 0; i < table.size(); ++i) {
        csv.row({std::to_string(i + 1), std::to_string(table[i]),
                 i + 1 < table.size() ? std::to_string(table.gaps()[i]) : "", fmt(table.logs()[i])});
      }
      io::emit(out, csv.str());
    } else if (*chr) {
      const auto chi = chr_args.get();
      io::Csv csv({"n", "re", "im", "numerator", "order"});
      for (std::uint32_t n = 0; n < chi.modulus(); ++n) {
        const auto v = chi(n);
        const auto a = chi.phase_numerator(n);
        csv.row({std::to_string(n), fmt(v.real()), fmt(v.imag()), a ? std::to_string(*a) : "",
                 std::to_string(chi.order())});
      }
      io::emit(out, csv.str());
    } else if (*eval) {
      const auto r = l_function(ComplexPoint{sigma, t}, eval_chi.get());
      io::Csv csv({"re", "im", "abs", "arg", "est_error"});
      csv.row({r.value.real(), r.value.imag(), std::abs(r.value), std::arg(r.value), r.est_error});
      io::emit(out, csv.str());
    } else if (*ep) {
      const auto chi = ep_chi.get();
      const ComplexPoint s{sigma, t};
      io::Csv csv({"n", "re_P", "im_P", "abs_P", "re_avg", "im_avg", "abs_avg"});
      auto row = [&](std::uint64_t n, cplx p, cplx a) {
        csv.row({std::to_string(n), fmt(p.real()), fmt(p.imag()), fmt(std::abs(p)), fmt(a.real()),
                 fmt(a.imag()), fmt(std::abs(a))});
      };
      if (!checkpoints.empty()) {
        std::uint64_t n_max = ep_n;
        if (enforce && chi.principal() && t != 0.0) n_max = std::min(n_max, cutoff(t, cutoff_c));
        std::vector<std::uint64_t> cps;
        for (auto c : checkpoints) {
          if (c <= n_max) cps.push_back(c);
        }
        if (enforce && chi.principal() && t == 0.0 && sigma <= 1.0) {
          throw DomainError("euler-product: the product diverges at t = 0, sigma <= 1 for a principal character");
        }
        for (const auto& c : stream_product(s, chi, cps)) row(c.n, c.product, c.average);
      } else {
        if (chi.principal() && t != 0.0 && ep_n > cutoff(t, cutoff_c) && !enforce) {
          std::cerr << "warning: N = " << ep_n << " exceeds the cutoff N_c = " << cutoff(t, cutoff_c)
                    << " for a principal character\n";
        }
        const auto table = table_for(ep_n, DirichletCharacter::trivial());
        const auto tr = partial_product(s, chi, ep_n, table, enforce, cutoff_c);
        for (std::size_t i = 0; i < tr.N; ++i) row(i + 1, tr.partial_products[i], tr.cesaro[i]);
      }
      io::emit(out, csv.str());
    } else if (*rwp) {
      const auto chi = rwp_chi.get();
      const auto tr = rwp_series(t, chi, rwp_n, u, degraded, table_for(rwp_n, chi));
      io::Csv csv({"n", "b", "B"});
      for (std::size_t i = 0; i < tr.terms.size(); ++i) csv.row({static_cast<double>(i + 1), tr.terms[i], tr.partials[i]});
      io::emit(out, csv.str());
    } else if (*ens) {
      const auto chi = ens_chi.get();
      const EnsembleStats st = uniform ? uniform_walk(ens_n, ens_e, seed)
                                       : prime_ensemble(t, chi, ens_n, ens_e, seed, degraded, table_for(ens_n, chi));
      const json j{{"kind", uniform ? "uniform" : (degraded ? "degraded" : "prime")},
                   {"t", t},
                   {"N", st.N},
                   {"E", st.E},
                   {"seed", st.seed},
                   {"modulus", chi.modulus()},
                   {"index", chi.index()},
                   {"degraded_rule", "p_1 = 2, p_n -> n log n for n >= 2"},
                   {"mean", st.mean},
                   {"variance", st.variance},
                   {"iqr_variance", st.iqr_variance},
                   {"anderson_darling", st.normality.statistic},
                   {"anderson_darling_critical_1pct", st.normality.critical_1pct},
                   {"normality_rejected_1pct", st.normality.rejected_1pct},
                   {"histogram", {{"edges", st.histogram.edges}, {"counts", st.histogram.counts}}},
                   {"threads", thread_count()}};
      io::emit(out, j.dump(2) + "\n");
      if (!hist_out.empty()) {
        io::Csv csv({"bin_lo", "bin_hi", "count"});
        for (std::size_t i = 0; i < st.histogram.counts.size(); ++i) {
          csv.row({st.histogram.edges[i], st.histogram.edges[i + 1], static_cast<double>(st.histogram.counts[i])});
        }
        io::emit(hist_out, csv.str());
      }
    } else if (*zero) {
      const std::size_t need = zero_primes == 0 ? auto_zero_primes(zero_n) : zero_primes;
      const auto r = solve_zero(zero_n, delta, zero_primes, tol, PrimeTable::generate(need));
      io::emit(out, zero_json(r).dump(2) + "\n");
    } else if (*zeros) {
      if (from == 0 || to < from) throw DomainError("zeros: need 1 <= from <= to");
      std::size_t need = zero_primes;
      if (need == 0) need = auto_zero_primes(to);
      const auto table = PrimeTable::generate(need);
      std::vector<ZeroResult> res(to - from + 1);
      parallel_for(res.size(), [&](std::size_t i) { res[i] = solve_zero(from + i, delta, zero_primes, tol, table); });
      io::Csv csv({"n", "t_n", "residual", "iterations", "delta", "primes_used"});
      for (const auto& r : res) {
        csv.row({std::to_string(r.n), fmt(r.t_n), fmt(r.residual), std::to_string(r.iterations), fmt(r.delta),
                 std::to_string(r.primes_used)});
      }
      io::emit(out, csv.str());
    } else if (*counting) {
      if (!(step > 0.0)) throw DomainError("counting: step must be positive");
      const auto table = PrimeTable::generate(std::max<std::size_t>(counting_primes, 1));
      std::vector<std::string> header{"T", "N_delta"};
      if (exact) header.push_back("N_exact");
      io::Csv csv(header);
      for (long k = 1;; ++k) {
        const double T = static_cast<double>(k) * step;
        if (T > t_max + 1e-9 * step) break;
        std::vector<std::string> r{fmt(T), fmt(counting_function(T, delta, counting_primes, table).n_of_T)};
        if (exact) r.push_back(fmt(counting_function_exact(T, delta).n_of_T));
        csv.row(r);
      }
      io::emit(out, csv.str());
    } else if (*rep) {
      rs.budget = parse_budget(budget);
      rs.out_dir = out_dir;
      const auto report = repro(target, rs);
      std::cout << to_json(report).dump(2) << "\n";
      return report.overall ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
