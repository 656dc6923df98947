#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "sturmian/embedding.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/interval.hpp"

namespace sturmian {

/// Weight m({R}) = p of the Bernoulli measure on codings.
struct MeasureParams {
  QuadNumber p;

  explicit MeasureParams(QuadNumber p_) : p(std::move(p_)) {
    if (p.sign() <= 0 || p >= QuadNumber(1)) throw std::invalid_argument("p must lie in (0,1)");
  }
  static MeasureParams lebesgue() { return MeasureParams(QuadNumber::inv_golden()); }

  QuadNumber q() const { return QuadNumber(1) - p; }
  long double p_approx() const { return p.approx(); }
  bool is_lebesgue() const { return p == QuadNumber::inv_golden(); }
};

struct WeightedInterval {
  ExactInterval interval;
  QuadNumber mass;
  std::int64_t k = 0;  // number of R
  std::int64_t l = 0;  // number of L
  std::int64_t depth() const { return k + l; }
};

inline WeightedInterval cylinder_mass(const OpSeq& ops, const MeasureParams& params) {
  if (ops.empty()) throw EmptyOpSeq("cylinder_mass needs at least one operation");
  auto k = static_cast<std::int64_t>(ops.count(Op::R));
  auto l = static_cast<std::int64_t>(ops.count(Op::L));
  return {theta_from_opseq(ops), params.p.pow(k) * params.q().pow(l), k, l};
}

/// All 2^depth cylinders in lexicographic order of their codings (R before L).
inline std::vector<std::pair<OpSeq, WeightedInterval>> cylinders_at_depth(const MeasureParams& params, int depth) {
  if (depth < 1 || depth > 24) throw std::invalid_argument("depth must be in 1..24");
  std::vector<std::pair<OpSeq, WeightedInterval>> out;
  std::vector<QuadNumber> ppow{QuadNumber(1)}, qpow{QuadNumber(1)};
  for (int i = 1; i <= depth; ++i) {
    ppow.push_back(ppow.back() * params.p);
    qpow.push_back(qpow.back() * params.q());
  }
  // depth-first walk of the subdivision tree
  std::vector<std::pair<OpSeq, CodingCell>> stack{{OpSeq(), CodingCell{}}};
  while (!stack.empty()) {
    auto [ops, cell] = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(ops.size()) == depth) {
      out.push_back({ops, {cell.interval, ppow[static_cast<std::size_t>(cell.r_count)] * qpow[static_cast<std::size_t>(cell.l_count)], cell.r_count, cell.l_count}});
      continue;
    }
    for (Op o : {Op::L, Op::R}) {
      OpSeq next = ops;
      next.ops.push_back(o);
      stack.push_back({std::move(next), cell.child(o)});
    }
  }
  return out;
}

struct CdfEnclosure {
  QuadNumber lo;
  QuadNumber hi;
  int depth = 0;
};

/// mu([0, x)) enclosed to within eps, by refining the cylinder that straddles x.
inline CdfEnclosure cdf(const QuadNumber& x, const MeasureParams& params, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (x <= QuadNumber(0)) return {QuadNumber(0), QuadNumber(0), 0};
  if (x >= QuadNumber(1)) return {QuadNumber(1), QuadNumber(1), 0};
  QuadNumber acc(0), mass(1);
  QuadNumber eps_q(eps);
  CodingCell cell;
  int depth = 0;
  while (true) {
    if (mass <= eps_q) return {acc, acc + mass, depth};
    std::optional<std::pair<CodingCell, QuadNumber>> straddle;
    for (Op o : {Op::R, Op::L}) {
      CodingCell c = cell.child(o);
      QuadNumber m = mass * (o == Op::R ? params.p : params.q());
      if (c.interval.hi <= x)
        acc += m;
      else if (c.interval.lo < x)
        straddle = std::make_pair(c, m);
    }
    ++depth;
    if (!straddle) return {acc, acc, depth};
    cell = straddle->first;
    mass = straddle->second;
  }
}

/// mass / width of the cylinder.
inline QuadNumber density_ratio(const OpSeq& ops, const MeasureParams& params) {
  WeightedInterval w = cylinder_mass(ops, params);
  return w.mass / w.interval.width();
}

struct ExponentResult {
  long double value = 0;
  bool in_regime = false;  // p in (1/tau^2, 1/2)
  long double residual = 0;
};

/// alpha with (tau/x)(tau - x) = x^(-alpha), x = p tau.
inline ExponentResult singularity_exponent(const MeasureParams& params) {
  if (params.is_lebesgue()) throw DegenerateExponent("p = 1/tau gives x = 1");
  const long double tau = QuadNumber::golden().approx();
  long double p = params.p_approx();
  long double x = p * tau;
  if (std::fabs(x - 1.0L) < 1e-15L) throw DegenerateExponent("x = p tau is 1");
  long double lhs = (tau / x) * (tau - x);
  ExponentResult r;
  r.value = -std::log(lhs) / std::log(x);
  r.residual = std::fabs(lhs * std::pow(x, r.value) - 1.0L);
  QuadNumber inv_tau2 = QuadNumber::inv_golden() * QuadNumber::inv_golden();
  r.in_regime = params.p > inv_tau2 && params.p < QuadNumber(Rational(1, 2));
  return r;
}

/// (pt)^n ((1-p)t/p)^l written as x^n x^(-alpha l); fails at p = 1/tau.
inline long double density_ratio_power_form(const OpSeq& ops, const MeasureParams& params) {
  const long double tau = QuadNumber::golden().approx();
  long double x = params.p_approx() * tau;
  long double a = singularity_exponent(params).value;
  auto n = static_cast<long double>(ops.size());
  auto l = static_cast<long double>(ops.count(Op::L));
  return std::pow(x, n) * std::pow(x, -a * l);
}

/// Almost-sure limit of log mu(I_n) / log |I_n| under the Bernoulli measure.
inline long double local_dimension_limit(const MeasureParams& params) {
  long double p = params.p_approx(), q = 1.0L - p;
  long double log_tau = std::log(QuadNumber::golden().approx());
  return (p * std::log(p) + q * std::log(q)) / (-(p + 2 * q) * log_tau);
}

struct MonteCarloSummary {
  std::int64_t trials = 0;
  std::int64_t depth = 0;
  std::uint64_t seed = 0;
  double mean = 0;
  double stddev = 0;
  double ci_lo = 0, ci_hi = 0;  // 95% normal interval for the mean
  double mean_l_fraction = 0;   // mean of l_n / n
  std::optional<double> fraction_l_above;  // share of samples with l_n > n / alpha_exp
  std::optional<double> exponent;
};

/// Samples codings of length `depth` from the Bernoulli(p) product measure and records
/// log mu(I_n) / log |I_n|. Trial t draws from mt19937_64 seeded with (seed, t), so results
/// do not depend on the number of worker threads.
inline MonteCarloSummary mc_local_dimension(const MeasureParams& params, std::int64_t depth, std::int64_t trials,
                                            std::uint64_t seed, unsigned threads = 0) {
  if (depth < 1 || trials < 1) throw std::invalid_argument("depth and trials must be >= 1");
  const long double p = params.p_approx();
  const long double log_p = std::log(p), log_q = std::log(1.0L - p);
  const long double log_inv_tau = -std::log(QuadNumber::golden().approx());
  // R iff the top 53 bits fall below p * 2^53
  const auto cut = static_cast<std::uint64_t>(std::ldexp(p, 53));
  std::vector<std::int64_t> l_counts(static_cast<std::size_t>(trials));
  auto run = [&](std::int64_t from, std::int64_t to) {
    for (std::int64_t t = from; t < to; ++t) {
      std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t) >> 32)};
      std::mt19937_64 gen(ss);
      std::int64_t l = 0;
      for (std::int64_t i = 0; i < depth; ++i)
        if ((gen() >> 11) >= cut) ++l;
      l_counts[static_cast<std::size_t>(t)] = l;
    }
  };
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::int64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::int64_t from = w * chunk, to = std::min(trials, from + chunk);
    if (from < to) pool.emplace_back(run, from, to);
  }
  for (auto& th : pool) th.join();

  MonteCarloSummary s;
  s.trials = trials;
  s.depth = depth;
  s.seed = seed;
  std::optional<long double> a;
  if (!params.is_lebesgue()) a = singularity_exponent(params).value;
  long double sum = 0, sum2 = 0, lsum = 0;
  std::int64_t above = 0;
  for (std::int64_t l : l_counts) {
    auto k = static_cast<long double>(depth - l), ll = static_cast<long double>(l);
    long double dim = (k * log_p + ll * log_q) / ((k + 2 * ll) * log_inv_tau);
    sum += dim;
    sum2 += dim * dim;
    lsum += ll / static_cast<long double>(depth);
    if (a && ll > static_cast<long double>(depth) / *a) ++above;
  }
  auto nt = static_cast<long double>(trials);
  long double mean = sum / nt;
  long double var = trials > 1 ? (sum2 - nt * mean * mean) / (nt - 1) : 0;
  if (var < 0) var = 0;
  long double half = 1.96L * std::sqrt(var / nt);
  s.mean = static_cast<double>(mean);
  s.stddev = static_cast<double>(std::sqrt(var));
  s.ci_lo = static_cast<double>(mean - half);
  s.ci_hi = static_cast<double>(mean + half);
  s.mean_l_fraction = static_cast<double>(lsum / nt);
  if (a) {
    s.fraction_l_above = static_cast<double>(above) / static_cast<double>(trials);
    s.exponent = static_cast<double>(*a);
  }
  return s;
}

}  // namespace sturmian
