#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "tcq/estimate.hpp"
#include "tcq/rng.hpp"
#include "tcq/sources.hpp"

using namespace tcq;

TEST_CASE("second-moment estimator matches the closed form on a two-sequence fixture") {
  // Two sequences of four samples with per-sample errors {0.5,0,0,0} and
  // {0.1,0.1,0.1,0.1}: e0 = 0.0625, e1 = 0.01.
  const double e0 = (0.5 * 0.5) / 4.0;
  const double e1 = (4 * 0.1 * 0.1) / 4.0;
  const std::vector<double> energies{e0, e1};
  const GainEstimate g = estimate_second_moment(energies, kUnitCellRefMse);

  const double mean = (e0 + e1) / 2.0;
  CHECK(g.p_tilde == mean);
  CHECK(g.n_v == 2);
  // Unbiased (n-1) standard deviation of two points: |e0-e1|/sqrt(2).
  const double sigma = std::sqrt(((e0 - mean) * (e0 - mean) + (e1 - mean) * (e1 - mean)) / 1.0);
  CHECK(g.sigma_bar == sigma);
  CHECK(g.delta_p == 2.0 * sigma / std::sqrt(2.0));
  // log10/log are transcendental; identical expressions may still differ by
  // one ulp depending on compile-time folding, so compare at that precision.
  CHECK(g.gain_db ==
        Catch::Approx(10.0 * std::log10((1.0 / 12.0) / mean)).epsilon(1e-14));
  CHECK(g.gain_delta_db ==
        Catch::Approx((10.0 / std::log(10.0)) * g.delta_p / g.p_tilde).epsilon(1e-14));
}

TEST_CASE("gain is exactly zero at the reference second moment") {
  const std::vector<double> energies{1.0 / 12.0, 1.0 / 12.0};
  const GainEstimate g = estimate_second_moment(energies, kUnitCellRefMse);
  CHECK(g.gain_db == 0.0);
  CHECK(g.delta_p == 0.0);
}

TEST_CASE("estimator rejects degenerate batches") {
  const std::vector<double> one{0.1};
  CHECK_THROWS_AS(estimate_second_moment(one, kUnitCellRefMse), std::invalid_argument);
  const std::vector<double> zeros{0.0, 0.0};
  CHECK_THROWS_AS(estimate_second_moment(zeros, kUnitCellRefMse), std::domain_error);
}

TEST_CASE("reference cell MSE per partition") {
  CHECK(trellis_code_ref_mse(Partition::z4()) == Catch::Approx(4.0 / 12.0));
  CHECK(trellis_code_ref_mse(Partition::z2z2()) == Catch::Approx(2.0 / 12.0));
}

TEST_CASE("confidence interval covers the true mean about 95% of the time") {
  SeededRng rng(12345);
  const double true_mean = 1.0;
  const double sigma = 0.05;
  const int n = 200;
  const int trials = 1000;
  int covered = 0;
  std::vector<double> e(static_cast<std::size_t>(n));
  for (int trial = 0; trial < trials; ++trial) {
    for (double& v : e) v = true_mean + sigma * rng.gaussian();
    const GainEstimate g = estimate_second_moment(e, kUnitCellRefMse);
    if (std::abs(g.p_tilde - true_mean) <= g.delta_p) ++covered;
  }
  const double coverage = static_cast<double>(covered) / trials;
  CHECK(coverage >= 0.93);
  CHECK(coverage <= 0.97);
}

TEST_CASE("SQNR estimator on a hand fixture") {
  const std::vector<double> mse{0.01, 0.03};
  const std::vector<double> power{1.0, 1.2};
  const SqnrEstimate s = estimate_sqnr(mse, power);
  CHECK(s.mse == 0.02);
  CHECK(s.signal_power == 1.1);
  CHECK(s.sqnr_db == Catch::Approx(10.0 * std::log10(1.1 / 0.02)));
  const double sigma = std::sqrt(2.0) * 0.01;  // |a-b|/sqrt(2)
  CHECK(s.delta_mse == Catch::Approx(2.0 * sigma / std::sqrt(2.0)));
  CHECK_THROWS_AS(estimate_sqnr(std::vector<double>{0.1}, std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("hypercube sides per partition") {
  CHECK(hypercube_side(Partition::z4(), 8) == 512.0);
  CHECK(hypercube_side(Partition::z2z2(), 8) ==
        Catch::Approx(256.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("sources are deterministic and have the right moments") {
  const Partition p = Partition::z4();
  std::vector<double> a(1000), b(1000);
  fill_sequence(SourceKind::hypercube_uniform, p, 8, 42, kEvalStream, 7, a);
  fill_sequence(SourceKind::hypercube_uniform, p, 8, 42, kEvalStream, 7, b);
  CHECK(a == b);
  fill_sequence(SourceKind::hypercube_uniform, p, 8, 42, kEvalStream, 8, b);
  CHECK(a != b);
  fill_sequence(SourceKind::hypercube_uniform, p, 8, 42, kTrainStream, 7, b);
  CHECK(a != b);

  // Mean of n uniform samples on [0, side): within 3 standard errors.
  const int n_seq = 200;
  double mean = 0.0;
  std::vector<double> seq(1000);
  for (int i = 0; i < n_seq; ++i) {
    fill_sequence(SourceKind::hypercube_uniform, p, 8, 9, kEvalStream,
                  static_cast<std::uint64_t>(i), seq);
    for (double v : seq) mean += v;
  }
  mean /= 1000.0 * n_seq;
  const double se = 512.0 / std::sqrt(12.0 * 1000.0 * n_seq);
  CHECK(std::abs(mean - 256.0) <= 3.0 * se);

  // Unit-variance sources.
  for (SourceKind kind : {SourceKind::iid_uniform, SourceKind::iid_gaussian}) {
    double m1 = 0.0, m2 = 0.0;
    const std::size_t total = 200000;
    std::vector<double> big(total);
    fill_sequence(kind, p, 8, 5, kEvalStream, 0, big);
    for (double v : big) {
      m1 += v;
      m2 += v * v;
    }
    m1 /= static_cast<double>(total);
    m2 /= static_cast<double>(total);
    CHECK(std::abs(m1) < 0.02);
    CHECK(m2 == Catch::Approx(1.0).margin(0.02));
  }
}

TEST_CASE("source names round-trip") {
  CHECK(source_from_name("uniform") == SourceKind::iid_uniform);
  CHECK(source_from_name("gaussian") == SourceKind::iid_gaussian);
  CHECK(source_from_name("hypercube-uniform") == SourceKind::hypercube_uniform);
  CHECK(source_name(SourceKind::iid_gaussian) == "gaussian");
  CHECK_THROWS_AS(source_from_name("cauchy"), std::invalid_argument);
}

TEST_CASE("seed derivation separates streams and indices") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
  CHECK(derive_seed(2, 2, 3) != derive_seed(1, 2, 3));
}
