#include "estrip/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "estrip/euler.hpp"
#include "estrip/io.hpp"
#include "estrip/lfunc.hpp"
#include "estrip/parallel.hpp"
#include "estrip/rwp.hpp"
#include "estrip/specfun.hpp"
#include "estrip/zeros.hpp"

namespace estrip {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSmallCap = 1'000'000;

std::string sci(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

class Builder {
 public:
  Builder(std::string target, const ReproSettings& st) : st_(st) {
    rep_.target = std::move(target);
    rep_.config = {{"target", rep_.target},
                   {"budget", to_string(st.budget)},
                   {"seed", st.seed},
                   {"band_trivial", st.band_trivial},
                   {"band_character", st.band_character},
                   {"variance_lo", st.variance_lo},
                   {"variance_hi", st.variance_hi},
                   {"mean_max", st.mean_max},
                   {"sdelta_sup", st.sdelta_sup},
                   {"counting_delta", st.counting_delta},
                   {"counting_primes", st.counting_primes},
                   {"counting_step", st.counting_step},
                   {"threads", thread_count()}};
  }

  void near(std::string label, double expected, double computed, double tol) {
    add(std::move(label), expected, computed, tol, "|computed - expected| <= tolerance",
        std::abs(computed - expected) <= tol);
  }
  void at_most(std::string label, double bound, double computed) {
    add(std::move(label), bound, computed, 0.0, "computed <= expected", computed <= bound);
  }
  void at_least(std::string label, double bound, double computed) {
    add(std::move(label), bound, computed, 0.0, "computed >= expected", computed >= bound);
  }
  void deviates(std::string label, double expected, double computed, double tol) {
    add(std::move(label), expected, computed, tol, "|computed - expected| > tolerance",
        std::abs(computed - expected) > tol);
  }
  void rounds_to(std::string label, double expected, double computed) {
    add(std::move(label), expected, computed, 0.5, "round(computed) == expected",
        std::round(computed) == expected);
  }
  void skipped(std::string label, double expected, double tol) {
    rep_.rows.push_back({std::move(label), expected, kNaN, tol, "skipped under budget", "skipped"});
  }
  void info(std::string label, double computed) {
    rep_.rows.push_back({std::move(label), kNaN, computed, kNaN, "diagnostic", "info"});
  }

  void artifact(const std::string& name, const std::string& content) {
    if (!st_.write_files) return;
    const auto path = st_.out_dir / name;
    io::write_atomic(path, content);
    rep_.artifacts.push_back(path.string());
  }

  nlohmann::json& config() { return rep_.config; }
  ReproReport take() { return std::move(rep_); }

 private:
  void add(std::string label, double e, double c, double tol, const char* rel, bool ok) {
    rep_.rows.push_back({std::move(label), e, c, tol, rel, ok ? "pass" : "fail"});
    if (!ok) rep_.overall = false;
  }

  const ReproSettings& st_;
  ReproReport rep_;
};

std::uint64_t n_cap(Budget b) { return b == Budget::full ? std::numeric_limits<std::uint64_t>::max() : kSmallCap; }

const PrimeTable& shared_table(std::size_t count) {
  static std::map<std::size_t, PrimeTable> cache;
  auto it = cache.lower_bound(count);
  if (it != cache.end()) return it->second;
  return cache.emplace(count, PrimeTable::generate(count)).first->second;
}

double rel_dev(double value, double ref) { return std::abs(value - ref) / ref; }

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (long k = 0;; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    if (x > hi + 1e-9 * step) break;
    g.push_back(x);
  }
  return g;
}

// --- tables ---------------------------------------------------------------

struct TableColumn {
  ComplexPoint s;
  double reference;  // printed |zeta| or |L|
  std::vector<std::pair<double, double>> printed;  // (|<P>|, |P|) per row
};

void reproduce_table(Builder& b, const ReproSettings& st, const std::string& name,
                     const DirichletCharacter& chi, const std::vector<std::uint64_t>& rows,
                     std::vector<TableColumn> cols, double tol, double ref_tol,
                     std::uint64_t first_grey) {
  if (st.budget == Budget::zero) return;
  const std::uint64_t cap = n_cap(st.budget);
  std::vector<std::uint64_t> todo;
  for (auto n : rows) {
    if (n <= cap) todo.push_back(n);
  }
  std::vector<ComplexPoint> points;
  for (const auto& c : cols) points.push_back(c.s);
  const auto got = stream_products(points, chi, todo);

  io::Csv csv({"sigma", "t", "N", "abs_avg", "abs_P", "printed_abs_avg", "printed_abs_P", "status"});
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& col = cols[k];
    const double ref = std::abs(l_function(col.s, chi).value);
    const std::string at = "s = " + sci(col.s.sigma) + (col.s.t != 0.0 ? "+" + sci(col.s.t) + "i" : "");
    b.near("|L| reference, " + at, col.reference, ref, ref_tol);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto n = rows[r];
      const auto [p_avg, p_abs] = col.printed[r];
      const std::string where = at + ", N = " + sci(static_cast<double>(n));
      if (n > cap) {
        b.skipped("|<P_N>| " + where, p_avg, tol);
        b.skipped("|P_N| " + where, p_abs, tol);
        csv.row({io::format_double(col.s.sigma), io::format_double(col.s.t), std::to_string(n), "", "",
                 io::format_double(p_avg), io::format_double(p_abs), "skipped"});
        continue;
      }
      const auto it = std::find_if(got[k].begin(), got[k].end(), [n](const Checkpoint& c) { return c.n == n; });
      const double avg = std::abs(it->average), abs_p = std::abs(it->product);
      std::string status;
      if (n >= first_grey) {
        // past the usable range the mean should drift away from |zeta|
        b.deviates("|<P_N>| drifts from |L|, " + where, ref, avg, 0.01);
        b.info("|P_N| " + where, abs_p);
        status = std::abs(avg - ref) > 0.01 ? "pass" : "fail";
      } else {
        b.near("|<P_N>| " + where, p_avg, avg, tol);
        b.near("|P_N| " + where, p_abs, abs_p, tol);
        status = std::abs(avg - p_avg) <= tol && std::abs(abs_p - p_abs) <= tol ? "pass" : "fail";
      }
      csv.row({io::format_double(col.s.sigma), io::format_double(col.s.t), std::to_string(n),
               io::format_double(avg), io::format_double(abs_p), io::format_double(p_avg),
               io::format_double(p_abs), status});
    }
  }
  b.artifact(name + ".csv", csv.str());
}

void table1(Builder& b, const ReproSettings& st) {
  const std::vector<std::uint64_t> rows{1000, 2000, 3000, 4000, 5000, 6000, 7000, 8000, 9000,
                                        10'000, 100'000, 1'000'000, 10'000'000, 100'000'000,
                                        200'000'000, 300'000'000};
  TableColumn c20{{0.95, 20.0}, 0.977848,
                  {{0.976752, 0.972210}, {0.976690, 0.981506}, {0.977653, 0.976654},
                   {0.977865, 0.975735}, {0.977926, 0.984674}, {0.977463, 0.977893},
                   {0.978208, 0.976510}, {0.977593, 0.978773}, {0.978290, 0.981781},
                   {0.977900, 0.971017}, {0.977703, 0.971203}, {0.977925, 0.971491},
                   {0.978168, 0.978027}, {0.977823, 0.984481}, {0.956304, 0.885545},
                   {0.924928, 0.794254}}};
  TableColumn c100{{0.95, 100.0}, 1.691397,
                   {{1.690988, 1.694894}, {1.692350, 1.694156}, {1.692590, 1.690354},
                    {1.692399, 1.688480}, {1.691996, 1.687150}, {1.691666, 1.689158},
                    {1.691508, 1.688145}, {1.691400, 1.691700}, {1.691381, 1.692973},
                    {1.691345, 1.690480}, {1.691373, 1.692136}, {1.691429, 1.691577},
                    {1.691414, 1.691703}, {1.691385, 1.693287}, {1.745257, 1.923738},
                    {1.852499, 2.203470}}};
  reproduce_table(b, st, "table1", DirichletCharacter::trivial(), rows, {c20, c100}, 1e-5, 1e-6,
                  200'000'000);
}

void table2(Builder& b, const ReproSettings& st) {
  const std::vector<std::uint64_t> rows{1000, 2000, 3000, 4000, 5000, 6000,
                                        7000, 8000, 9000, 10'000, 100'000};
  TableColumn c0{{0.95, 0.0}, 0.89492570,
                 {{0.8940791, 0.8949042}, {0.8947639, 0.8951913}, {0.8948319, 0.8946522},
                  {0.8947869, 0.8950135}, {0.8948144, 0.8946950}, {0.8947834, 0.8945271},
                  {0.8947674, 0.8948700}, {0.8947783, 0.8947044}, {0.8947768, 0.8948476},
                  {0.8947921, 0.8950163}, {0.8949043, 0.8949518}}};
  TableColumn c100{{0.95, 100.0}, 0.62101132,
                   {{0.6183514, 0.6208759}, {0.6195137, 0.6202016}, {0.6199206, 0.6211404},
                    {0.6201229, 0.6205615}, {0.6202306, 0.6207769}, {0.6202884, 0.6205089},
                    {0.6203365, 0.6207366}, {0.6203860, 0.6207027}, {0.6204248, 0.6207634},
                    {0.6204524, 0.6207338}, {0.6207878, 0.6209509}}};
  reproduce_table(b, st, "table2", character(7, 2), rows, {c0, c100}, 1e-6, 1e-7,
                  std::numeric_limits<std::uint64_t>::max());
}

// --- figures --------------------------------------------------------------

double max_ratio(const std::vector<double>& partials) {
  double worst = 0.0;
  for (std::size_t n = 0; n < partials.size(); ++n) {
    worst = std::max(worst, std::abs(partials[n]) / std::sqrt(static_cast<double>(n + 1)));
  }
  return worst;
}

void fig1(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto& table = shared_table(1'200'000);
  const auto walk = rwp_series(1000.0, DirichletCharacter::trivial(), 30'000, 1.0, false, table);
  io::Csv csv({"n", "B", "abs_B", "sqrt_n"});
  for (std::size_t n = 0; n < walk.partials.size(); ++n) {
    csv.row({static_cast<double>(n + 1), walk.partials[n], std::abs(walk.partials[n]),
             std::sqrt(static_cast<double>(n + 1))});
  }
  b.artifact("fig1.csv", csv.str());
  b.at_most("max |B_N|/sqrt(N), t = 1e3, N <= 3e4, trivial character", st.band_trivial,
            max_ratio(walk.partials));

  const auto chi = character(7, 2);
  io::Csv csv_chi({"n", "B_t0", "B_t50", "B_t500"});
  std::vector<RwpTrace> walks;
  for (double t : {0.0, 50.0, 500.0}) {
    walks.push_back(rwp_series(t, chi, 1'000'000, 1.0, false, table));
    b.at_most("max |B_N|/sqrt(N), chi_{7,2}, t = " + sci(t) + ", N <= 1e6", st.band_character,
              max_ratio(walks.back().partials));
  }
  for (std::size_t n = 99; n < 1'000'000; n += 100) {
    csv_chi.row({static_cast<double>(n + 1), walks[0].partials[n], walks[1].partials[n], walks[2].partials[n]});
  }
  b.artifact("fig1_character.csv", csv_chi.str());
}

void fig2(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  constexpr double t = 1000.0;
  constexpr std::size_t N = 30'000, E = 80'000;
  const auto& table = shared_table(N);
  const auto triv = DirichletCharacter::trivial();
  const auto uni = uniform_walk(N, E, st.seed);
  const auto prime = prime_ensemble(t, triv, N, E, st.seed, false, table);
  const auto degraded = prime_ensemble(t, triv, N, E, st.seed, true, table);
  b.config()["t"] = t;
  b.config()["N"] = N;
  b.config()["E"] = E;

  const double mid = 0.5 * (st.variance_lo + st.variance_hi);
  b.near("variance of B_N/sqrt(N)", mid, prime.variance, 0.5 * (st.variance_hi - st.variance_lo));
  b.at_most("|mean| of B_N/sqrt(N)", st.mean_max, std::abs(prime.mean));
  b.at_least("degraded ensemble: Anderson-Darling A^2 reaches the 1% critical value",
             degraded.normality.critical_1pct, degraded.normality.statistic);
  b.near("variance of R_N/sqrt(N), uniform steps", 1.0 / 3.0, uni.variance, 0.05 / 3.0);
  b.info("prime ensemble: Anderson-Darling A^2", prime.normality.statistic);
  b.info("prime ensemble: IQR-based variance", prime.iqr_variance);
  b.info("prime ensemble: mean", prime.mean);
  b.info("degraded ensemble: variance", degraded.variance);
  b.info("uniform walk: Anderson-Darling A^2", uni.normality.statistic);

  io::Csv csv({"bin_lo", "bin_hi", "uniform", "prime", "degraded"});
  for (std::size_t i = 0; i < kHistogramBins; ++i) {
    csv.row({prime.histogram.edges[i], prime.histogram.edges[i + 1],
             static_cast<double>(uni.histogram.counts[i]), static_cast<double>(prime.histogram.counts[i]),
             static_cast<double>(degraded.histogram.counts[i])});
  }
  b.artifact("fig2_histogram.csv", csv.str());
}

void fig3(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto& table = shared_table(std::max<std::size_t>(st.counting_primes, 1));
  const auto ts = grid(st.counting_step, 100.0, st.counting_step);
  io::Csv csv({"T", "N_delta_primes", "N_delta_exact"});
  for (double T : ts) {
    csv.row({T, counting_function(T, st.counting_delta, st.counting_primes, table).n_of_T,
             counting_function_exact(T, st.counting_delta).n_of_T});
  }
  b.artifact("fig3.csv", csv.str());
  for (double T : {10.0, 20.0, 50.0, 100.0}) {
    const double exact = std::round(counting_function_exact(T, st.counting_delta).n_of_T);
    b.rounds_to("N_delta(" + sci(T) + ") with " + std::to_string(st.counting_primes) + " primes", exact,
                counting_function(T, st.counting_delta, st.counting_primes, table).n_of_T);
  }
}

struct Sweep {
  std::vector<double> ref, prod, avg;
};

// |L|, |P_N| and |<P_N>| along a list of points, all with the same N.
Sweep sweep(const std::vector<ComplexPoint>& pts, const DirichletCharacter& chi, std::size_t N,
            const PrimeTable& table) {
  Sweep sw;
  sw.ref.resize(pts.size());
  sw.prod.resize(pts.size());
  sw.avg.resize(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    sw.ref[i] = std::abs(l_function(pts[i], chi).value);
    EulerAccumulator acc(pts[i], chi);
    for (std::size_t k = 0; k < N; ++k) acc.push(table[k]);
    sw.prod[i] = std::abs(acc.product());
    sw.avg[i] = std::abs(acc.average());
  });
  return sw;
}

double mean_dev(const std::vector<double>& v, const std::vector<double>& ref) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += rel_dev(v[i], ref[i]);
  return s / static_cast<double>(v.size());
}

std::vector<ComplexPoint> line(double sigma, const std::vector<double>& ts) {
  std::vector<ComplexPoint> p;
  for (double t : ts) p.push_back({sigma, t});
  return p;
}

void fig4(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto& table = shared_table(10'000);
  const auto ts = grid(100.0, 150.0, 0.5);
  const auto pts = line(0.75, ts);
  const auto triv = DirichletCharacter::trivial();
  const std::vector<std::size_t> Ns{10, 100, 1000, 10'000};
  std::vector<Sweep> sw;
  double prev = kNaN;
  for (auto N : Ns) {
    sw.push_back(sweep(pts, triv, N, table));
    const double d = mean_dev(sw.back().prod, sw.back().ref);
    const std::string label = "mean |P_N|/|zeta| - 1 on sigma = 3/4, t in [100, 150], N = " + std::to_string(N);
    if (std::isnan(prev)) {
      b.info(label, d);
    } else {
      b.at_most(label + " (not above the previous N)", prev, d);
    }
    prev = d;
  }
  io::Csv csv({"t", "abs_zeta", "abs_P_10", "abs_P_100", "abs_P_1000", "abs_P_10000"});
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv.row({ts[i], sw[0].ref[i], sw[0].prod[i], sw[1].prod[i], sw[2].prod[i], sw[3].prod[i]});
  }
  b.artifact("fig4.csv", csv.str());
}

void fig5(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto& table = shared_table(10'000);
  const auto triv = DirichletCharacter::trivial();

  // left: sigma sweep at t = 500, N = 1e4
  const auto sigmas = grid(0.05, 0.95, 0.05);
  std::vector<ComplexPoint> pts;
  for (double s : sigmas) pts.push_back({s, 500.0});
  const auto left = sweep(pts, triv, 10'000, table);
  io::Csv csv_l({"sigma", "abs_zeta", "abs_P", "abs_avg"});
  double worst_right = 0.0, best_left = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    csv_l.row({sigmas[i], left.ref[i], left.prod[i], left.avg[i]});
    const double d = rel_dev(left.prod[i], left.ref[i]);
    if (sigmas[i] >= 0.6 - 1e-9) worst_right = std::max(worst_right, d);
    if (sigmas[i] <= 0.4 + 1e-9) best_left = std::min(best_left, d);
  }
  b.artifact("fig5_sigma.csv", csv_l.str());
  b.at_most("t = 500, N = 1e4: max relative deviation of |P_N| for sigma >= 0.6", 0.05, worst_right);
  b.at_least("t = 500, N = 1e4: min relative deviation of |P_N| for sigma <= 0.4", 0.1, best_left);

  // right: t sweep at sigma = 0.4, N = 8e3
  const auto ts = grid(400.0, 600.0, 1.0);
  const auto right = sweep(line(0.4, ts), triv, 8000, table);
  io::Csv csv_r({"t", "abs_zeta", "abs_P", "abs_avg"});
  for (std::size_t i = 0; i < ts.size(); ++i) csv_r.row({ts[i], right.ref[i], right.prod[i], right.avg[i]});
  b.artifact("fig5_t.csv", csv_r.str());

  // the trace at s = 0.4 + 500i
  const ComplexPoint s{0.4, 500.0};
  const double z = std::abs(zeta(s).value);
  EulerAccumulator acc(s, triv);
  double worst = 0.0, block_lo = 0.0, block_hi = 0.0;
  for (std::size_t n = 1; n <= 10'000; ++n) {
    acc.push(table[n - 1]);
    const double d = rel_dev(std::abs(acc.product()), z);
    worst = std::max(worst, d);
    if (n > 100 && n <= 1000) block_lo = std::max(block_lo, d);
    if (n > 1000) block_hi = std::max(block_hi, d);
  }
  b.at_least("s = 0.4+500i: max over N <= 1e4 of ||P_N| - |zeta||/|zeta|", 0.5, worst);
  b.at_least("s = 0.4+500i: worst deviation on N in (1e3, 1e4] vs (1e2, 1e3]", block_lo, block_hi);
}

void fig6(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  constexpr std::size_t N = 100'000;
  constexpr double delta = 0.1;
  const auto& table = shared_table(N);
  const auto ts = grid(0.0, 100.0, 0.05);
  const auto triv = DirichletCharacter::trivial();
  std::vector<double> raw(ts.size()), ces(ts.size()), exact(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) {
    const auto both = s_delta_both(ts[i], delta, triv, N, table);
    raw[i] = both.raw;
    ces[i] = both.cesaro;
    exact[i] = arg_continuous(triv, ts[i], delta) / pi;
  });
  io::Csv csv({"t", "S_primes", "S_cesaro", "S_exact"});
  double sup = 0.0, sup10 = 0.0, sup_c = 0.0, sup_c10 = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv.row({ts[i], raw[i], ces[i], exact[i]});
    const double d = std::abs(raw[i] - exact[i]), dc = std::abs(ces[i] - exact[i]);
    sup = std::max(sup, d);
    sup_c = std::max(sup_c, dc);
    if (ts[i] >= 10.0) {
      sup10 = std::max(sup10, d);
      sup_c10 = std::max(sup_c10, dc);
    }
  }
  b.artifact("fig6.csv", csv.str());
  b.at_most("sup over t in [0, 100] of |S_delta primes - arg zeta/pi|, delta = 0.1, N = 1e5", st.sdelta_sup, sup);
  b.info("same sup restricted to t >= 10", sup10);
  b.info("Cesaro mean over N of the prime sum: sup over t in [0, 100]", sup_c);
  b.info("Cesaro mean over N of the prime sum: sup over t >= 10", sup_c10);
}

void fig7(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto& table = shared_table(40'000);
  const auto triv = DirichletCharacter::trivial();
  struct Panel {
    double sigma, lo, hi, step;
    std::size_t N;
    const char* file;
  };
  for (const Panel& p : {Panel{0.8, 0.5, 40.0, 0.25, 100, "fig7_left.csv"},
                         Panel{0.55, 200.0, 260.0, 0.5, 40'000, "fig7_right.csv"}}) {
    const auto ts = grid(p.lo, p.hi, p.step);
    const auto sw = sweep(line(p.sigma, ts), triv, p.N, table);
    io::Csv csv({"t", "abs_zeta", "abs_P", "abs_avg"});
    for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], sw.ref[i], sw.prod[i], sw.avg[i]});
    b.artifact(p.file, csv.str());
    const std::string where = "sigma = " + sci(p.sigma) + ", N = " + std::to_string(p.N);
    b.at_most("mean relative deviation: Cesaro mean not above the product, " + where,
              mean_dev(sw.prod, sw.ref), mean_dev(sw.avg, sw.ref));
  }
}

void fig8(Builder& b, const ReproSettings& st) {
  if (st.budget == Budget::zero) return;
  const auto chi = character(7, 2);
  const auto& table = shared_table(10'000);
  const auto ts = grid(0.0, 40.0, 0.25);
  const auto pts = line(0.6, ts);
  const auto few = sweep(pts, chi, 5, table);
  const auto many = sweep(pts, chi, 10'000, table);
  io::Csv csv({"t", "abs_L", "abs_P_5", "abs_P_10000"});
  for (std::size_t i = 0; i < ts.size(); ++i) csv.row({ts[i], few.ref[i], few.prod[i], many.prod[i]});
  b.artifact("fig8_left.csv", csv.str());
  b.at_most("s = 0.6+it, chi_{7,2}: mean relative deviation with N = 1e4 not above N = 5",
            mean_dev(few.prod, few.ref), mean_dev(many.prod, many.ref));

  const std::uint64_t N = std::min<std::uint64_t>(5'000'000, n_cap(st.budget));
  b.config()["fig8_right_N"] = N;
  const auto ts_r = grid(0.0, 40.0, 0.5);
  const auto pts_r = line(0.55, ts_r);
  const auto got = stream_products(pts_r, chi, {N});
  io::Csv csv_r({"t", "abs_L", "abs_avg"});
  std::vector<double> ref(ts_r.size()), avg(ts_r.size());
  for (std::size_t i = 0; i < ts_r.size(); ++i) {
    ref[i] = std::abs(l_function(pts_r[i], chi).value);
    avg[i] = std::abs(got[i].back().average);
    csv_r.row({ts_r[i], ref[i], avg[i]});
  }
  b.artifact("fig8_right.csv", csv_r.str());
  b.at_most("s = 0.55+it, chi_{7,2}: mean relative deviation of |<P_N>|, N = " + sci(static_cast<double>(N)),
            0.1, mean_dev(avg, ref));
}

const std::map<std::string, std::function<void(Builder&, const ReproSettings&)>>& registry() {
  static const std::map<std::string, std::function<void(Builder&, const ReproSettings&)>> r{
      {"table1", table1}, {"table2", table2}, {"fig1", fig1}, {"fig2", fig2}, {"fig3", fig3},
      {"fig4", fig4},     {"fig5", fig5},     {"fig6", fig6}, {"fig7", fig7}, {"fig8", fig8}};
  return r;
}

}  // namespace

Budget parse_budget(const std::string& s) {
  if (s == "zero") return Budget::zero;
  if (s == "small") return Budget::small;
  if (s == "full") return Budget::full;
  throw UsageError("unknown budget '" + s + "' (expected zero, small or full)");
}

std::string to_string(Budget b) {
  switch (b) {
    case Budget::zero: return "zero";
    case Budget::small: return "small";
    case Budget::full: return "full";
  }
  return "?";
}

const std::vector<std::string>& repro_targets() {
  static const std::vector<std::string> t{"table1", "table2", "fig1", "fig2", "fig3",
                                          "fig4",   "fig5",   "fig6", "fig7", "fig8"};
  return t;
}

ReproReport repro(const std::string& target, const ReproSettings& settings) {
  const auto it = registry().find(target);
  if (it == registry().end()) throw UsageError("unknown repro target '" + target + "'");
  const auto start = std::chrono::steady_clock::now();
  Builder b(target, settings);
  it->second(b, settings);
  ReproReport rep = b.take();
  rep.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (settings.write_files) {
    const auto path = settings.out_dir / (target + ".json");
    io::write_atomic(path, to_json(rep).dump(2) + "\n");
    rep.artifacts.push_back(path.string());
  }
  return rep;
}

nlohmann::json to_json(const ReproReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  auto num = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
  for (const auto& r : report.rows) {
    rows.push_back({{"label", r.label},
                    {"expected", num(r.expected)},
                    {"computed", num(r.computed)},
                    {"tolerance", num(r.tolerance)},
                    {"relation", r.relation},
                    {"status", r.status}});
  }
  return {{"target", report.target},
          {"overall", report.overall},
          {"runtime_seconds", report.runtime},
          {"config", report.config},
          {"rows", rows},
          {"artifacts", report.artifacts}};
}

}  // namespace estrip
