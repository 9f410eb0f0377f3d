// tests/test_recurrence.cc

// Copyright 2026  The chaoswave authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "chaoswave/recurrence.h"

#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"

#include "chaoswave/error.h"
#include "chaoswave/synth.h"
#include "naive_rp.h"
#include "test_util.h"

using namespace chaoswave;

TEST_CASE("downsample_stride keeps every s-th sample") {
  const std::vector<double> x = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(downsample_stride(x, 3) == std::vector<double>{0, 3, 6, 9});
  CHECK(downsample_stride(x, 1) == x);
  CHECK(downsample_stride(x, 100) == std::vector<double>{0});
  CHECK(downsample_stride(x, 4).size() == 3);  // ceil(10/4)
  CHECK_THROWS_AS(downsample_stride(std::vector<double>{}, 2), EmptyInput);
  CHECK_THROWS_AS(downsample_stride(x, 0), DomainError);
  CHECK_THROWS_AS(downsample_stride(x, -2), DomainError);
}

TEST_CASE("uniform_subsample caps length with evenly spread indices") {
  const std::vector<double> x = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(uniform_subsample(x, 16) == x);
  CHECK(uniform_subsample(x, 10) == x);
  // floor(p*10/4) for p = 0..3
  CHECK(uniform_subsample(x, 4) == std::vector<double>{0, 2, 5, 7});
  CHECK(uniform_subsample(x, 1) == std::vector<double>{0});
  CHECK_THROWS_AS(uniform_subsample(x, 0), DomainError);
}

TEST_CASE("distance_matrix holds absolute pairwise differences") {
  const std::vector<double> x = {0, 1, 3};
  const std::vector<double> D = distance_matrix(x);
  CHECK(D == std::vector<double>{0, 1, 3, 1, 0, 2, 3, 2, 0});
  CHECK_THROWS_AS(distance_matrix(std::vector<double>{}), EmptyInput);
}

TEST_CASE("recurrence_plot thresholds at the matrix mean, inclusive") {
  const RecurrencePlot rp = recurrence_plot(std::vector<double>{0, 1, 3}, 1);
  CHECK(rp.scale == 1);
  CHECK(rp.size == 3);
  CHECK(rp.threshold == 12.0 / 9.0);
  CHECK(rp.bits == std::vector<std::uint8_t>{1, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK(recurrence_rate(rp) == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("evenly spaced samples recur only on the diagonal") {
  const RecurrencePlot rp = recurrence_plot(std::vector<double>{0, 1, 2}, 1);
  CHECK(rp.threshold == 8.0 / 9.0);
  CHECK(rp.bits == std::vector<std::uint8_t>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(recurrence_rate(rp) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("a constant series recurs everywhere") {
  const RecurrencePlot rp =
      recurrence_plot(std::vector<double>(12, 1.0), 1);
  CHECK(rp.threshold == 0.0);
  for (std::uint8_t b : rp.bits) CHECK(b == 1);
  CHECK(recurrence_rate(rp) == 1.0);
}

TEST_CASE("plots are symmetric with an all-ones diagonal") {
  testutil::Rng rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<double> x = white_noise(rng.next(), 1 + rng.below(300));
    const RecurrencePlot rp = recurrence_plot(x, 1);
    for (std::size_t p = 0; p < rp.size; ++p) {
      CHECK(rp.at(p, p) == 1);
      for (std::size_t q = p + 1; q < rp.size; ++q)
        CHECK(rp.at(p, q) == rp.at(q, p));
    }
  }
}

TEST_CASE("plots match a naive reference bit for bit") {
  testutil::Rng rng(2027);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = 1 + rng.below(2000);
    const std::vector<double> x = white_noise(rng.next(), len);
    const MultiScaleRPs got = multi_scale_rps(x, kDefaultScales);
    REQUIRE(got.plots.size() == kDefaultScales.size());
    for (std::size_t i = 0; i < got.plots.size(); ++i) {
      const int s = kDefaultScales[i];
      const testutil::NaivePlot want =
          testutil::naive_recurrence(x, s, kDefaultLengthCap);
      CHECK(got.plots[i].scale == s);
      CHECK(got.plots[i].size == want.size);
      CHECK(got.plots[i].threshold == want.threshold);
      CHECK(got.plots[i].bits == want.bits);
    }
  }
}

TEST_CASE("bits are invariant under positive affine amplitude maps") {
  testutil::Rng rng(88);
  int done = 0, attempts = 0;
  while (done < 20 && attempts < 400) {
    ++attempts;
    const std::vector<double> x = white_noise(rng.next(), 4 + rng.below(500));
    const RecurrencePlot base = recurrence_plot(x, 1);
    // Skip signals with a cell too close to the threshold for the
    // comparison to survive re-rounded arithmetic.
    const std::vector<double> D = distance_matrix(x);
    double min_rel = 1e300;
    for (double d : D) {
      const double rel = std::fabs(d - base.threshold);
      if (rel > 0.0) min_rel = std::min(min_rel, rel);
    }
    if (min_rel < 1e-12) continue;

    bool ok = true;
    for (double alpha : {0.5, 3.0}) {
      for (double beta : {-1.0, 2.0}) {
        std::vector<double> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = alpha * x[i] + beta;
        const RecurrencePlot mapped = recurrence_plot(y, 1);
        if (mapped.bits != base.bits) ok = false;
        CHECK(mapped.threshold ==
              doctest::Approx(alpha * base.threshold).epsilon(1e-9));
      }
    }
    CHECK(ok);
    ++done;
  }
  CHECK(done == 20);
}

TEST_CASE("multi-scale sizes follow ceil division then the cap") {
  const std::vector<double> big = white_noise(5, 48000);
  const MultiScaleRPs caps = multi_scale_rps(big, kDefaultScales);
  REQUIRE(caps.plots.size() == 5);
  for (const RecurrencePlot &rp : caps.plots) {
    CHECK(rp.size == 256);
    CHECK(rp.bits.size() == 256 * 256);
  }

  const std::vector<double> small = white_noise(6, 100);
  const MultiScaleRPs exact = multi_scale_rps(small, kDefaultScales);
  const std::size_t sizes[5] = {100, 50, 25, 13, 7};
  for (std::size_t i = 0; i < 5; ++i) CHECK(exact.plots[i].size == sizes[i]);
}

TEST_CASE("scale order and duplicates are normalized") {
  const std::vector<double> x = white_noise(7, 2000);
  const MultiScaleRPs out = multi_scale_rps(x, std::vector<int>{8, 2, 8, 1});
  REQUIRE(out.plots.size() == 3);
  CHECK(out.plots[0].scale == 1);
  CHECK(out.plots[1].scale == 2);
  CHECK(out.plots[2].scale == 8);
}

TEST_CASE("multi_scale_rps validates its inputs") {
  const std::vector<double> x = white_noise(8, 64);
  CHECK_THROWS_AS(multi_scale_rps(std::vector<double>{}, kDefaultScales),
                  EmptyInput);
  CHECK_THROWS_AS(multi_scale_rps(x, std::vector<int>{0, 2}), DomainError);
  CHECK_THROWS_AS(multi_scale_rps(x, kDefaultScales, 0), DomainError);
}

TEST_CASE("thread count does not change the plots") {
  const std::vector<double> x = white_noise(14, 20000);
  const MultiScaleRPs one = multi_scale_rps(x, kDefaultScales, 256, 1);
  const MultiScaleRPs four = multi_scale_rps(x, kDefaultScales, 256, 4);
  REQUIRE(one.plots.size() == four.plots.size());
  for (std::size_t i = 0; i < one.plots.size(); ++i) {
    CHECK(one.plots[i].bits == four.plots[i].bits);
    CHECK(one.plots[i].threshold == four.plots[i].threshold);
  }
}

TEST_CASE("recurrence rate stays within its structural bounds") {
  testutil::Rng rng(92);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<double> x = white_noise(rng.next(), 1 + rng.below(400));
    const RecurrencePlot rp = recurrence_plot(x, 1);
    const double rate = recurrence_rate(rp);
    CHECK(rate >= 1.0 / static_cast<double>(rp.size) - 1e-15);
    CHECK(rate <= 1.0 + 1e-15);
  }
}
