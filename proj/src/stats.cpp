#include "schneider/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>

#include "schneider/cf.hpp"
#include "schneider/padic.hpp"
#include "schneider/parallel.hpp"
#include "schneider/rng.hpp"

namespace schneider {

namespace {

constexpr std::uint64_t kBlock = 1024;

// digit budget for an orbit of the given expected cost: mean consumption
// n p/(p-1) plus a 12-sigma cushion (Var a = p/(p-1)^2).
std::size_t orbit_precision(const Prime& p, std::uint64_t steps) {
  const double pv = static_cast<double>(p.value());
  const double mean = pv / (pv - 1.0);
  const double sd = std::sqrt(pv) / (pv - 1.0);
  const double need = static_cast<double>(steps) * mean + 12.0 * sd * std::sqrt(static_cast<double>(steps));
  return static_cast<std::size_t>(need) + 64;
}

double sq(double x) { return x * x; }

}  // namespace

double chi_square_pvalue(double stat, double dof) {
  if (dof <= 0) return 1.0;
  return boost::math::gamma_q(dof / 2.0, stat / 2.0);
}

double exact_inverse_power_mean(const Prime& p, double t) {
  const double pv = static_cast<double>(p.value());
  double sum = 0.0;
  for (int k = 1;; ++k) {
    sum += std::pow(static_cast<double>(k), -t) * (pv - 1.0) * std::pow(pv, -k);
    // remaining mass <= sum_{j>k} (p-1) p^{-j} = p^{-k}, and k^{-t} <= 1
    if (std::pow(pv, -k) < 1e-12 * 0.5) return sum;
  }
}

// ---------------------------------------------------------------------------
// digit law

ExperimentReport digit_law_experiment(Prime p, std::uint64_t samples, std::uint64_t seed, StatsOptions opt) {
  const std::size_t precision = opt.precision ? opt.precision : 48;
  const std::size_t amax = precision;  // a_1 < precision
  const std::int64_t pv = p.value();

  struct Partial {
    std::vector<std::uint64_t> a_hist;
    std::vector<std::uint64_t> b_hist;
    std::uint64_t dropped = 0;
  };
  const std::size_t nblocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  std::vector<Partial> partials(nblocks);
  parallel_blocks(samples, kBlock, opt.threads, [&](std::size_t blk, std::uint64_t begin, std::uint64_t end) {
    Partial& part = partials[blk];
    part.a_hist.assign(amax + 1, 0);
    part.b_hist.assign(static_cast<std::size_t>(pv), 0);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(seed, i);
      DigitStream stream(p, haar_value(p, precision, rng), precision);
      const auto pair = stream.next();
      if (!pair) {
        ++part.dropped;
        continue;
      }
      ++part.a_hist[static_cast<std::size_t>(std::min<std::int64_t>(pair->a, static_cast<std::int64_t>(amax)))];
      ++part.b_hist[static_cast<std::size_t>(pair->b)];
    }
  });

  std::vector<std::uint64_t> a_hist(amax + 1, 0), b_hist(static_cast<std::size_t>(pv), 0);
  std::uint64_t dropped = 0;
  for (const auto& part : partials) {
    for (std::size_t k = 0; k <= amax; ++k) a_hist[k] += part.a_hist[k];
    for (std::size_t j = 0; j < b_hist.size(); ++j) b_hist[j] += part.b_hist[j];
    dropped += part.dropped;
  }
  const double n = static_cast<double>(samples - dropped);

  ExperimentReport r;
  r.name = "digit_law";
  r.p = pv;
  r.samples = samples;
  r.seed = seed;
  r.table_header = {"series", "k", "observed", "expected", "z"};

  bool a_ok = true, tail_ok = true, b_ok = true;
  const int kmax = 10;
  for (int k = 1; k <= kmax; ++k) {
    const double q = (static_cast<double>(pv) - 1.0) * std::pow(static_cast<double>(pv), -k);
    const double expct = n * q;
    const double sigma = std::sqrt(n * q * (1.0 - q));
    const double obs = static_cast<double>(a_hist[static_cast<std::size_t>(k)]);
    const double z = (obs - expct) / sigma;
    a_ok = a_ok && std::abs(z) <= 3.0;
    r.statistics["P(a1=" + std::to_string(k) + ")"] = obs / n;
    r.statistics["z(a1=" + std::to_string(k) + ")"] = z;
    r.table.push_back({"a", std::to_string(k), format_double(obs), format_double(expct), format_double(z)});
  }
  // cumulative tail P(a_1 >= k) = p^{1-k}
  for (int k = 2; k <= kmax; ++k) {
    const double q = std::pow(static_cast<double>(pv), 1 - k);
    double obs = 0;
    for (std::size_t j = static_cast<std::size_t>(k); j <= amax; ++j) obs += static_cast<double>(a_hist[j]);
    const double sigma = std::sqrt(n * q * (1.0 - q));
    const double z = (obs - n * q) / sigma;
    tail_ok = tail_ok && std::abs(z) <= 3.0;
    r.statistics["z(a1>=" + std::to_string(k) + ")"] = z;
    r.table.push_back({"a_tail", std::to_string(k), format_double(obs), format_double(n * q), format_double(z)});
  }
  // chi-square over k = 1..K with a tail bucket, K chosen so expected >= 5
  {
    int K = 1;
    while (K + 1 <= static_cast<int>(amax) &&
           n * (static_cast<double>(pv) - 1.0) * std::pow(static_cast<double>(pv), -(K + 1)) >= 5.0) {
      ++K;
    }
    double chi2 = 0.0;
    for (int k = 1; k <= K; ++k) {
      const double expct = n * (static_cast<double>(pv) - 1.0) * std::pow(static_cast<double>(pv), -k);
      chi2 += sq(static_cast<double>(a_hist[static_cast<std::size_t>(k)]) - expct) / expct;
    }
    double tail_obs = 0;
    for (std::size_t j = static_cast<std::size_t>(K) + 1; j <= amax; ++j) tail_obs += static_cast<double>(a_hist[j]);
    const double tail_expct = n * std::pow(static_cast<double>(pv), -K);
    chi2 += sq(tail_obs - tail_expct) / tail_expct;
    const double pval = chi_square_pvalue(chi2, static_cast<double>(K));  // K+1 bins
    r.statistics["chi2_a"] = chi2;
    r.statistics["chi2_a_pvalue"] = pval;
    r.criteria["a1_chi2_p_gt_0.01"] = pval > 0.01;
  }
  // b_1 uniform on [1, p-1]
  {
    const double q = 1.0 / (static_cast<double>(pv) - 1.0);
    double chi2 = 0.0;
    for (std::int64_t j = 1; j <= pv - 1; ++j) {
      const double obs = static_cast<double>(b_hist[static_cast<std::size_t>(j)]);
      const double expct = n * q;
      r.statistics["P(b1=" + std::to_string(j) + ")"] = obs / n;
      if (pv > 2) {
        const double sigma = std::sqrt(n * q * (1.0 - q));
        const double z = (obs - expct) / sigma;
        b_ok = b_ok && std::abs(z) <= 3.0;
        chi2 += sq(obs - expct) / expct;
        r.table.push_back({"b", std::to_string(j), format_double(obs), format_double(expct), format_double(z)});
      }
    }
    if (pv > 2) {
      const double pval = chi_square_pvalue(chi2, static_cast<double>(pv - 2));
      r.statistics["chi2_b"] = chi2;
      r.statistics["chi2_b_pvalue"] = pval;
      r.criteria["b1_chi2_p_gt_0.01"] = pval > 0.01;
    }
  }
  r.statistics["dropped"] = static_cast<double>(dropped);
  r.criteria["a1_within_3sigma"] = a_ok;
  r.criteria["a1_tail_within_3sigma"] = tail_ok;
  r.criteria["b1_within_3sigma"] = b_ok;
  return r;
}

// ---------------------------------------------------------------------------
// independence

ExperimentReport independence_experiment(Prime p, std::uint64_t samples, std::uint64_t lag,
                                         std::uint64_t seed, StatsOptions opt) {
  const std::int64_t pv = p.value();
  ExperimentReport r;
  r.name = "independence";
  r.p = pv;
  r.samples = samples;
  r.seed = seed;
  r.statistics["lag"] = static_cast<double>(lag);
  if (lag == 0) {
    r.statistics["skipped_degenerate_lag"] = 1.0;
    r.criteria["skipped_degenerate_lag"] = true;
    return r;
  }
  const std::size_t precision = opt.precision ? opt.precision : 8 * (lag + 1) + 40;
  // tail-truncate a at the first k with P(a >= k) < 2%
  const std::size_t abins = 1 + static_cast<std::size_t>(std::floor(std::log(50.0) / std::log(static_cast<double>(pv))));
  const std::size_t bbins = static_cast<std::size_t>(pv - 1);

  struct Partial {
    std::vector<std::uint64_t> a_joint;  // abins x abins
    std::vector<std::uint64_t> b_joint;  // bbins x bbins
    std::uint64_t dropped = 0;
  };
  const std::size_t nblocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  std::vector<Partial> partials(nblocks);
  parallel_blocks(samples, kBlock, opt.threads, [&](std::size_t blk, std::uint64_t begin, std::uint64_t end) {
    Partial& part = partials[blk];
    part.a_joint.assign(abins * abins, 0);
    part.b_joint.assign(bbins * bbins, 0);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(seed, i);
      DigitStream stream(p, haar_value(p, precision, rng), precision);
      DigitPair first{0, 0}, second{0, 0};
      bool ok = true;
      for (std::uint64_t step = 0; step <= lag; ++step) {
        const auto pr = stream.next();
        if (!pr) {
          ok = false;
          break;
        }
        if (step == 0) first = *pr;
        if (step == lag) second = *pr;
      }
      if (!ok) {
        ++part.dropped;
        continue;
      }
      const auto cell = [&](std::int64_t a) {
        return std::min<std::size_t>(static_cast<std::size_t>(a), abins) - 1;
      };
      ++part.a_joint[cell(first.a) * abins + cell(second.a)];
      ++part.b_joint[static_cast<std::size_t>(first.b - 1) * bbins + static_cast<std::size_t>(second.b - 1)];
    }
  });

  std::vector<double> a_joint(abins * abins, 0.0), b_joint(bbins * bbins, 0.0);
  std::uint64_t dropped = 0;
  for (const auto& part : partials) {
    for (std::size_t c = 0; c < a_joint.size(); ++c) a_joint[c] += static_cast<double>(part.a_joint[c]);
    for (std::size_t c = 0; c < b_joint.size(); ++c) b_joint[c] += static_cast<double>(part.b_joint[c]);
    dropped += part.dropped;
  }
  const double n = static_cast<double>(samples - dropped);
  r.statistics["dropped"] = static_cast<double>(dropped);

  const auto independence_chi2 = [n](const std::vector<double>& joint, std::size_t bins, double& chi2_out) {
    std::vector<double> row(bins, 0.0), col(bins, 0.0);
    for (std::size_t i = 0; i < bins; ++i) {
      for (std::size_t j = 0; j < bins; ++j) {
        row[i] += joint[i * bins + j];
        col[j] += joint[i * bins + j];
      }
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
      for (std::size_t j = 0; j < bins; ++j) {
        const double expct = row[i] * col[j] / n;
        if (expct > 0) chi2 += sq(joint[i * bins + j] - expct) / expct;
      }
    }
    chi2_out = chi2;
    return chi_square_pvalue(chi2, static_cast<double>((bins - 1) * (bins - 1)));
  };

  double chi2_a = 0.0;
  const double pa = independence_chi2(a_joint, abins, chi2_a);
  r.statistics["chi2_a"] = chi2_a;
  r.statistics["chi2_a_pvalue"] = pa;
  r.criteria["a_joint_chi2_p_gt_0.01"] = pa > 0.01;
  if (pv > 2) {
    double chi2_b = 0.0;
    const double pb = independence_chi2(b_joint, bbins, chi2_b);
    r.statistics["chi2_b"] = chi2_b;
    r.statistics["chi2_b_pvalue"] = pb;
    r.criteria["b_joint_chi2_p_gt_0.01"] = pb > 0.01;
  } else {
    r.statistics["b_degenerate"] = 1.0;  // single unit digit when p = 2
  }
  return r;
}

// ---------------------------------------------------------------------------
// birkhoff

ExperimentReport birkhoff_experiment(Prime p, BirkhoffKind kind, double t, std::uint64_t orbit_len,
                                     std::uint64_t samples, std::uint64_t seed, StatsOptions opt) {
  if (orbit_len == 0) fail(Errc::InvalidSpec, "birkhoff_experiment: orbit length must be >= 1");
  const std::size_t precision = opt.precision ? opt.precision : orbit_precision(p, orbit_len);
  const double pv = static_cast<double>(p.value());

  struct Partial {
    double sum = 0.0;
    std::uint64_t steps = 0;
  };
  const std::size_t nblocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  std::vector<Partial> partials(nblocks);
  parallel_blocks(samples, kBlock, opt.threads, [&](std::size_t blk, std::uint64_t begin, std::uint64_t end) {
    Partial& part = partials[blk];
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(seed, i);
      DigitStream stream(p, haar_value(p, precision, rng), precision);
      for (std::uint64_t step = 0; step < orbit_len; ++step) {
        const auto pr = stream.next();
        if (!pr) break;
        part.sum += (kind == BirkhoffKind::MeanA)
                        ? static_cast<double>(pr->a)
                        : std::pow(static_cast<double>(pr->a), -t);
        ++part.steps;
      }
    }
  });

  double sum = 0.0;
  std::uint64_t steps = 0;
  for (const auto& part : partials) {  // block order: thread-count independent
    sum += part.sum;
    steps += part.steps;
  }
  const double mean = sum / static_cast<double>(steps);
  const double target = (kind == BirkhoffKind::MeanA) ? pv / (pv - 1.0) : exact_inverse_power_mean(p, t);

  ExperimentReport r;
  r.name = "birkhoff";
  r.p = p.value();
  r.samples = samples;
  r.seed = seed;
  r.statistics["kind"] = (kind == BirkhoffKind::MeanA) ? 0.0 : 1.0;
  r.statistics["t"] = (kind == BirkhoffKind::MeanA) ? 0.0 : t;
  r.statistics["orbit_len"] = static_cast<double>(orbit_len);
  r.statistics["orbit_steps"] = static_cast<double>(steps);
  r.statistics["mean"] = mean;
  r.statistics["target"] = target;
  r.statistics["rel_err"] = std::abs(mean - target) / target;
  r.criteria["within_1pct"] = std::abs(mean - target) <= 0.01 * target;
  return r;
}

// ---------------------------------------------------------------------------
// limsup scaling

ExperimentReport limsup_scaling_experiment(Prime p, std::uint64_t horizon, std::uint64_t samples,
                                           std::uint64_t seed, StatsOptions opt) {
  if (horizon < 2) fail(Errc::InvalidSpec, "limsup_scaling_experiment: horizon must be >= 2");
  const std::size_t precision = opt.precision ? opt.precision : orbit_precision(p, horizon);
  const double pv = static_cast<double>(p.value());
  const double lp = std::log(pv);
  const std::vector<double> mults = {0.5, 0.8, 1.2, 1.5};

  // integer thresholds ceil(m log_p n), shared by the counts and their
  // exact expectations so no rounding convention can drift between them
  std::vector<std::vector<std::int64_t>> thresholds(mults.size());
  for (std::size_t m = 0; m < mults.size(); ++m) {
    thresholds[m].assign(horizon + 1, 1);
    for (std::uint64_t n = 2; n <= horizon; ++n) {
      const double x = mults[m] * std::log(static_cast<double>(n)) / lp;
      thresholds[m][n] = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x - 1e-9)));
    }
  }

  std::vector<double> scaling_stat(samples, -1.0);   // (max a_n)/log N, -1 = dropped
  std::vector<double> pointwise_stat(samples, -1.0); // sup a_n/log n (auxiliary)
  std::vector<std::vector<std::uint64_t>> counts(mults.size());
  for (auto& c : counts) c.assign(samples, 0);

  parallel_blocks(samples, kBlock, opt.threads, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(seed, i);
      DigitStream stream(p, haar_value(p, precision, rng), precision);
      std::int64_t max_a = 0;
      double max_ratio = 0.0;
      std::vector<std::uint64_t> local(mults.size(), 0);
      bool complete = true;
      for (std::uint64_t n = 1; n <= horizon; ++n) {
        const auto pr = stream.next();
        if (!pr) {
          complete = false;
          break;
        }
        if (n >= 2) {
          max_a = std::max(max_a, pr->a);
          max_ratio = std::max(max_ratio, static_cast<double>(pr->a) / std::log(static_cast<double>(n)));
          for (std::size_t m = 0; m < mults.size(); ++m) {
            if (pr->a >= thresholds[m][n]) ++local[m];
          }
        }
      }
      if (!complete) continue;  // leave marked dropped
      scaling_stat[i] = static_cast<double>(max_a) / std::log(static_cast<double>(horizon));
      pointwise_stat[i] = max_ratio;
      for (std::size_t m = 0; m < mults.size(); ++m) counts[m][i] = local[m];
    }
  });

  std::vector<double> kept;
  kept.reserve(samples);
  std::vector<double> kept_pointwise;
  std::vector<double> count_means(mults.size(), 0.0);
  std::uint64_t dropped = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (scaling_stat[i] < 0) {
      ++dropped;
      continue;
    }
    kept.push_back(scaling_stat[i]);
    kept_pointwise.push_back(pointwise_stat[i]);
    for (std::size_t m = 0; m < mults.size(); ++m) count_means[m] += static_cast<double>(counts[m][i]);
  }
  if (kept.empty()) fail(Errc::InvalidSpec, "limsup_scaling_experiment: every sample ran out of precision");
  const double nkept = static_cast<double>(kept.size());
  for (auto& cm : count_means) cm /= nkept;
  std::sort(kept.begin(), kept.end());
  std::sort(kept_pointwise.begin(), kept_pointwise.end());
  const auto quantile = [](const std::vector<double>& v, double q) {
    const std::size_t idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1));
    return v[idx];
  };

  ExperimentReport r;
  r.name = "limsup_scaling";
  r.p = p.value();
  r.samples = samples;
  r.seed = seed;
  r.table_header = {"multiplier", "mean_count", "expected", "sigma_mean", "z"};
  const double target = 1.0 / lp;
  const double median = quantile(kept, 0.5);
  r.statistics["horizon"] = static_cast<double>(horizon);
  r.statistics["dropped"] = static_cast<double>(dropped);
  r.statistics["target_inv_logp"] = target;
  r.statistics["m_median"] = median;
  r.statistics["m_q1"] = quantile(kept, 0.25);
  r.statistics["m_q3"] = quantile(kept, 0.75);
  r.statistics["pointwise_sup_median"] = quantile(kept_pointwise, 0.5);
  r.statistics["band_lo"] = 0.8 * target;
  r.statistics["band_hi"] = 1.6 * target;
  r.criteria["median_in_band"] = median >= 0.8 * target && median <= 1.6 * target;

  for (std::size_t m = 0; m < mults.size(); ++m) {
    double expct = 0.0, var = 0.0;
    for (std::uint64_t n = 2; n <= horizon; ++n) {
      const double q = std::min(1.0, std::pow(pv, static_cast<double>(1 - thresholds[m][n])));
      expct += q;
      var += q * (1.0 - q);
    }
    const double sigma_mean = std::sqrt(var / nkept);
    const double z = (count_means[m] - expct) / sigma_mean;
    const std::string tag = format_double(mults[m]);
    r.statistics["bc_mean_" + tag] = count_means[m];
    r.statistics["bc_expected_" + tag] = expct;
    r.statistics["bc_z_" + tag] = z;
    r.criteria["bc_" + tag + "_within_3sigma"] = std::abs(z) <= 3.0;
    r.table.push_back({tag, format_double(count_means[m]), format_double(expct), format_double(sigma_mean),
                       format_double(z)});
  }
  return r;
}

// ---------------------------------------------------------------------------
// convergence exponent

ConvergenceExponentEstimate convergence_exponent(std::span<const double> digits,
                                                 std::span<const double> grid, std::size_t horizon) {
  if (grid.empty()) fail(Errc::EmptyGrid, "convergence_exponent: empty grid");
  if (horizon > digits.size()) {
    fail(Errc::InsufficientPrecision, "convergence_exponent: horizon exceeds available digits");
  }
  if (horizon < 4) fail(Errc::InvalidSpec, "convergence_exponent: horizon must be >= 4");
  std::vector<double> sorted_grid(grid.begin(), grid.end());
  std::sort(sorted_grid.begin(), sorted_grid.end());

  const std::size_t h4 = horizon / 4, h2 = horizon / 2;
  ConvergenceExponentEstimate est;
  est.grid = sorted_grid;
  est.partial_sums.resize(sorted_grid.size());
  est.finite = false;
  for (std::size_t gi = 0; gi < sorted_grid.size(); ++gi) {
    const double s = sorted_grid[gi];
    double s_h4 = 0.0, s_h2 = 0.0, s_h = 0.0;
    for (std::size_t n = 0; n < horizon; ++n) {
      const double term = std::exp(-s * std::log(digits[n]));
      s_h += term;
      if (n < h2) s_h2 += term;
      if (n < h4) s_h4 += term;
    }
    est.partial_sums[gi] = s_h;
    if (!est.finite) {
      const double inc1 = s_h - s_h2;   // second half
      const double inc0 = s_h2 - s_h4;  // second quarter
      const bool stabilized = inc1 < 1e-6 || (inc0 > 0 && inc1 <= 0.97 * inc0);
      if (stabilized) {
        est.finite = true;
        est.alpha_hat = s;
      }
    }
  }
  return est;
}

std::vector<double> default_tau_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(static_cast<double>(i) * 0.05);
  return grid;
}

ExperimentReport tau_classification_experiment(Prime p, std::uint64_t samples, std::uint64_t horizon,
                                               std::uint64_t seed, std::vector<double> grid,
                                               StatsOptions opt) {
  if (grid.empty()) grid = default_tau_grid();
  const std::size_t precision = opt.precision ? opt.precision : orbit_precision(p, horizon);

  struct Partial {
    std::uint64_t infinite = 0;
    std::uint64_t finite = 0;
    std::uint64_t dropped = 0;
  };
  const std::size_t nblocks = static_cast<std::size_t>((samples + kBlock - 1) / kBlock);
  std::vector<Partial> partials(nblocks);
  parallel_blocks(samples, kBlock, opt.threads, [&](std::size_t blk, std::uint64_t begin, std::uint64_t end) {
    Partial& part = partials[blk];
    std::vector<double> digits;
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream rng(seed, i);
      DigitStream stream(p, haar_value(p, precision, rng), precision);
      digits.clear();
      for (std::uint64_t n = 0; n < horizon; ++n) {
        const auto pr = stream.next();
        if (!pr) break;
        digits.push_back(static_cast<double>(pr->a));
      }
      if (digits.size() < horizon) {
        ++part.dropped;
        continue;
      }
      const auto est = convergence_exponent(digits, grid, horizon);
      est.finite ? ++part.finite : ++part.infinite;
    }
  });

  std::uint64_t infinite = 0, finite = 0, dropped = 0;
  for (const auto& part : partials) {
    infinite += part.infinite;
    finite += part.finite;
    dropped += part.dropped;
  }
  const double frac = static_cast<double>(infinite) / static_cast<double>(infinite + finite);

  ExperimentReport r;
  r.name = "tau_class";
  r.p = p.value();
  r.samples = samples;
  r.seed = seed;
  r.statistics["horizon"] = static_cast<double>(horizon);
  r.statistics["classified_infinite"] = static_cast<double>(infinite);
  r.statistics["classified_finite"] = static_cast<double>(finite);
  r.statistics["dropped"] = static_cast<double>(dropped);
  r.statistics["infinite_fraction"] = frac;
  r.criteria["infinite_fraction_ge_0.99"] = frac >= 0.99;
  return r;
}

}  // namespace schneider
