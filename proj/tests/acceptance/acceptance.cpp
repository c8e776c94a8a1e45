#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxtsp/cycle_cover.hpp"
#include "maxtsp/driver.hpp"
#include "maxtsp/error.hpp"
#include "maxtsp/exact.hpp"
#include "maxtsp/gluing.hpp"
#include "maxtsp/matching.hpp"
#include "maxtsp/merge.hpp"
#include "test_support.hpp"

namespace {

using namespace maxtsp;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Clock = std::chrono::steady_clock;

// Every finite double is m * 2^e with integer m.
Rational exact(double x) {
  int e = 0;
  const double frac = std::frexp(x, &e);
  const auto m = static_cast<std::int64_t>(std::ldexp(frac, 53));
  e -= 53;
  if (e >= 0) return Rational(BigInt(m) << e);
  return Rational(BigInt(m), BigInt(1) << -e);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("criterion %2d %-28s %s  %s\n", id, name, o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

// Algorithm A runs shared by several criteria.
struct ARun {
  double delta = 0.0;
  std::size_t n = 0;
  Certificate cert;
  bool tour_valid = true;
};

std::vector<ARun> algorithm_a_runs;

void record(const Instance& inst, const SolveResult& r) {
  if (r.certificate.branch != Branch::algorithm_a) return;
  algorithm_a_runs.push_back({*r.certificate.delta, inst.size(), r.certificate,
                              is_valid_tour(inst, r.tour)});
}

Outcome matching_correctness() {
  const auto start = Clock::now();
  int compared = 0;
  int mismatches = 0;
  for (std::uint64_t seed = 0; compared < 240; ++seed) {
    const int nv = 2 + 2 * static_cast<int>(seed % 4);
    const WeightedGraph g = testing::random_graph(nv, 0.75, -20, 100, seed * 7919 + 1);
    Matching expected;
    try {
      expected = matching_brute_force(g);
    } catch (const NoPerfectMatching&) {
      continue;
    }
    const Matching got = max_weight_perfect_matching(g);
    if (!is_perfect_matching(g, got) || got.weight != expected.weight) ++mismatches;
    ++compared;
  }
  const double t = seconds_since(start);
  std::ostringstream os;
  os << compared << " graphs, " << mismatches << " mismatches, " << t << " s";
  return {mismatches == 0 && t < 10.0, os.str()};
}

Outcome cycle_cover_correctness() {
  const auto start = Clock::now();
  int mismatches = 0;
  const int runs = 120;
  for (int s = 0; s < runs; ++s) {
    const std::size_t n = 3 + s % 6;
    const Instance inst = testing::random_metric(n, 1000 + s);
    const CycleCover gadget = max_weight_cycle_cover(inst);
    const CycleCover brute = cycle_cover_brute_force(inst);
    if (!is_valid_cover(inst, gadget) ||
        std::abs(gadget.weight - brute.weight) > 1e-6 * brute.weight) {
      ++mismatches;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream os;
  os << runs << " instances, " << mismatches << " mismatches, " << t << " s";
  return {mismatches == 0 && t < 60.0, os.str()};
}

// Criteria 3 and 4 share the same runs.
std::pair<Outcome, Outcome> line_cycle_count_and_radius() {
  int runs = 0;
  int count_violations = 0;
  int radius_violations = 0;
  std::size_t worst_k = 0;
  std::size_t worst_k0 = 0;
  for (double delta : {0.2, 0.5}) {
    const double k_bound = std::pow(2.0 / delta, 2.0) / 2.0;
    for (std::size_t n : {32u, 64u, 128u, 200u}) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Instance inst = testing::line(n, 50000 + 97 * n + seed);
        const SolveResult r = algorithm_a_solve(inst, delta, 1.0);
        record(inst, r);
        const Certificate& c = r.certificate;
        const std::size_t k = *c.k_after_gluing;
        worst_k = std::max(worst_k, k);
        worst_k0 = std::max(worst_k0, c.k_initial);
        if (static_cast<double>(k) > k_bound) ++count_violations;
        if (!c.r_tau || !c.t_min || !(*c.r_tau < *c.t_min / delta - *c.t_min)) {
          ++radius_violations;
        }
        ++runs;
      }
    }
  }
  std::ostringstream a;
  a << runs << " runs, max k " << worst_k0 << " before gluing, " << worst_k << " after" << ", " << count_violations << " violations";
  std::ostringstream b;
  b << runs << " runs, " << radius_violations << " violations";
  return {{count_violations == 0, a.str()}, {radius_violations == 0, b.str()}};
}

Outcome tour_ratio_bound() {
  // Extra runs on general metrics, without a dimension hint.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 8 + seed % 20;
    const double delta = 0.1 + 0.15 * static_cast<double>(seed % 6);
    const Instance inst = seed % 2 ? testing::random_metric(n, seed)
                                   : generate({Family::euclidean, n, 2, seed, 1.0});
    record(inst, algorithm_a_solve(inst, delta));
  }
  int posterior_violations = 0;
  int closed_violations = 0;
  int closed_checked = 0;
  int invalid = 0;
  for (const ARun& run : algorithm_a_runs) {
    const Certificate& c = run.cert;
    if (!run.tour_valid) ++invalid;
    const Rational n(static_cast<long long>(run.n));
    const Rational k(static_cast<long long>(*c.k_after_gluing));
    const Rational delta = exact(run.delta);
    const Rational tour = exact(c.weight_tour);
    const Rational cover = exact(c.weight_cover);
    // tour >= (1 - 2/3 delta - k/n) * cover, scaled by 3n.
    if (3 * n * tour < (3 * n - 2 * delta * n - 3 * k) * cover) ++posterior_violations;
    if (c.dim && c.closed_form_bound) {
      ++closed_checked;
      if (tour < exact(*c.closed_form_bound) * cover) ++closed_violations;
    }
  }
  std::ostringstream os;
  os << algorithm_a_runs.size() << " runs, " << posterior_violations
     << " posterior violations, " << closed_violations << "/" << closed_checked
     << " closed-form violations, " << invalid << " invalid tours";
  return {posterior_violations == 0 && closed_violations == 0 && invalid == 0, os.str()};
}

CycleCover random_cover(const Instance& inst, std::size_t k, std::mt19937_64& rng) {
  const std::size_t n = inst.size();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> sizes(k, 3);
  for (std::size_t extra = n - 3 * k; extra > 0; --extra) sizes[rng() % k] += 1;
  std::vector<Cycle> cycles;
  std::size_t at = 0;
  for (std::size_t s : sizes) {
    cycles.emplace_back(perm.begin() + at, perm.begin() + at + s);
    at += s;
  }
  return make_cover(inst, std::move(cycles));
}

Outcome patching_bound() {
  std::mt19937_64 rng(2024);
  int violations = 0;
  const int runs = 240;
  for (int s = 0; s < runs; ++s) {
    const std::size_t k = 1 + s % 4;
    const std::size_t n = std::max<std::size_t>(3 * k, 6 + s % 9);
    const Instance inst = s % 3 == 0 ? testing::line(n, 7000 + s)
                                     : testing::random_metric(n, 7000 + s);
    const CycleCover cover = random_cover(inst, k, rng);
    const Tour t = serdyukov_combine(inst, cover);
    // tour * n^(k-1) >= (n-1)^(k-1) * cover
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 1; i < k; ++i) {
      num *= static_cast<long long>(n - 1);
      den *= static_cast<long long>(n);
    }
    if (!is_valid_tour(inst, t) || exact(t.weight) * den < Rational(num) * exact(cover.weight)) {
      ++violations;
    }
  }
  std::ostringstream os;
  os << runs << " covers, " << violations << " violations";
  return {violations == 0, os.str()};
}

Outcome eptas_guarantee() {
  int certified = 0;
  int uncertified = 0;
  int violations = 0;
  for (double eps : {0.05, 0.1, 0.2, 0.3}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::size_t n = 4 + seed % 7;
      const Instance inst = testing::random_metric(n, 9000 + seed);
      const SolveResult r = eptas(inst, eps, 1.0);
      record(inst, r);
      if (!r.certificate.certified) {
        ++uncertified;
        continue;
      }
      ++certified;
      const double opt = brute_force_tour(inst).weight;
      if (!is_valid_tour(inst, r.tour) || exact(r.tour.weight) < (1 - exact(eps)) * exact(opt)) {
        ++violations;
      }
    }
  }
  std::ostringstream os;
  os << certified << " certified runs, " << uncertified << " uncertified, " << violations
     << " violations";
  return {violations == 0 && certified > 0, os.str()};
}

Outcome asymptotic_error() {
  int runs = 0;
  int violations = 0;
  double worst = 0.0;
  for (std::size_t n : {12u, 14u, 16u}) {
    const double bound = (11.0 / 6.0) / std::cbrt(static_cast<double>(n));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Instance inst = testing::line(n, 11000 + 31 * n + seed);
      const SolveResult r = asymptotic(inst, 1.0);
      record(inst, r);
      const double opt = held_karp_max(inst).weight;
      const double err = (opt - r.tour.weight) / opt;
      worst = std::max(worst, err);
      if (!is_valid_tour(inst, r.tour) || err > bound) ++violations;
      ++runs;
    }
  }
  std::ostringstream os;
  os << runs << " runs, worst relative error " << worst << ", " << violations
     << " violations (bound is loose at these sizes)";
  return {violations == 0, os.str()};
}

Outcome five_sixths_fallback() {
  int violations = 0;
  const int runs = 150;
  for (int s = 0; s < runs; ++s) {
    const std::size_t n = 3 + s % 8;
    const Instance inst = testing::random_metric(n, 13000 + s);
    const SolveResult r = five_sixths(inst);
    const double opt = brute_force_tour(inst).weight;
    if (!is_valid_tour(inst, r.tour) || 6 * exact(r.tour.weight) < 5 * exact(opt)) ++violations;
  }
  std::ostringstream os;
  os << runs << " instances, " << violations << " violations";
  return {violations == 0, os.str()};
}

Outcome scale_smoke() {
  auto timed = [](std::size_t n) {
    const Instance inst = testing::line(n, 17);
    const auto start = Clock::now();
    const SolveResult r = algorithm_a_solve(inst, 0.5, 1.0);
    const double t = seconds_since(start);
    return std::make_pair(t, is_valid_tour(inst, r.tour));
  };
  const auto [t60, ok60] = timed(60);
  const auto [t100, ok100] = timed(100);
  std::ostringstream os;
  os << "n=60 " << t60 << " s, n=100 " << t100 << " s";
  return {ok60 && ok100 && t60 < 300.0 && t100 < 1800.0, os.str()};
}

}  // namespace

int main() {
  try {
    const Outcome c1 = matching_correctness();
    const Outcome c2 = cycle_cover_correctness();
    const auto [c3, c4] = line_cycle_count_and_radius();
    const Outcome c7 = eptas_guarantee();
    const Outcome c8 = asymptotic_error();
    const Outcome c5 = tour_ratio_bound();
    const Outcome c6 = patching_bound();
    const Outcome c9 = five_sixths_fallback();
    const Outcome c10 = scale_smoke();
    report(1, "matching correctness", c1);
    report(2, "cycle cover correctness", c2);
    report(3, "cycle count after gluing", c3);
    report(4, "radius at termination", c4);
    report(5, "tour ratio bound", c5);
    report(6, "patching bound", c6);
    report(7, "eptas guarantee", c7);
    report(8, "asymptotic relative error", c8);
    report(9, "five-sixths fallback", c9);
    report(10, "scale smoke test", c10);
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
