// One line per acceptance criterion; exit status is the number of failures.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>

#include "tourlab/blowup.hpp"
#include "tourlab/classify.hpp"
#include "tourlab/diamonds.hpp"
#include "tourlab/linalg.hpp"
#include "tourlab/lnfamily.hpp"
#include "tourlab/switching.hpp"
#include "tourlab/tournament.hpp"
#include "tourlab/verify.hpp"

using namespace tourlab;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::uint64_t kLargeSamples = 100000;

struct Check {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

// Tournaments swept or sampled by criteria 1-3 and 10, and how many broke
// the diamond-count bounds.
std::atomic<std::uint64_t> g_bound_population{0};
std::atomic<std::uint64_t> g_bound_violations{0};
std::mutex g_bound_mutex;
std::string g_bound_example;

void record_bounds(const Tournament& t) {
  ++g_bound_population;
  if (!delta_within_bounds(t.order(), diamond_count(t))) {
    if (g_bound_violations++ == 0) {
      std::lock_guard lock(g_bound_mutex);
      g_bound_example = format_trn(t);
    }
  }
}

int g_failures = 0;

void report(int id, const std::string& what, double limit_seconds, const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "took longer than %.0f s", limit_seconds);
    c.fail(buf);
  }
  if (!c.ok) ++g_failures;
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, what.c_str(), secs,
              c.note.empty() ? "" : " -- ", c.note.c_str());
  std::fflush(stdout);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

VertexSet random_subset(std::mt19937_64& rng, int n) {
  return VertexSet::from_mask(rng() & VertexSet::full(n).mask());
}

std::string show(ExactInt v) { return to_string(v); }

Check fzt() {
  Check c;
  enumerate_labeled(5, [&](const Tournament& t) {
    const auto d = diamond_count(t);
    if (d != 0 && d != 2) c.fail("delta " + std::to_string(d) + " on " + t.to_bits());
    record_bounds(t);
  });
  return c;
}

Check six_table() {
  Check c;
  enumerate_labeled(6, [&](const Tournament& t) {
    const auto d = diamond_count(t);
    const ExactInt det = determinant(t);
    if (!six_profile_allowed(d, det)) c.fail("profile (" + std::to_string(d) + "," + show(det) + ") on " + t.to_bits());
    if (d != 0 && (d < 3 || d > 6)) c.fail("delta " + std::to_string(d) + " on " + t.to_bits());
    record_bounds(t);
  });
  return c;
}

Check six_coincide() {
  Check c;
  const Tournament target = switching_canonical(make_ln(6));
  std::uint64_t hits = 0;
  enumerate_labeled(6, [&](const Tournament& t) {
    const bool a = determinant(t) == 25;
    const bool b = diamond_count(t) == 5;
    const bool s = switching_canonical(t) == target;
    const bool m = in_dk(t, 5) && !in_dk(t, 3);
    if (a != b || a != s || a != m) c.fail("predicates disagree on " + t.to_bits());
    hits += a;
    record_bounds(t);
  });
  if (hits == 0) c.fail("no 6-tournament has det 25");
  return c;
}

Check ln_dets() {
  Check c;
  for (int n = 2; n <= 16; n += 2) {
    const Tournament l = make_ln(n);
    const ExactInt d = determinant(l);
    if (d != ExactInt(n - 1) * (n - 1)) c.fail("det L_" + std::to_string(n) + " = " + show(d));
    if (n >= 4 && d != determinant(make_ln(n - 2)) + 4 * (n - 2)) c.fail("recurrence at " + std::to_string(n));
    const ExactInt pf = pfaffian(l);
    if (pf * pf != d) c.fail("pfaffian at " + std::to_string(n));
  }
  return c;
}

Check q_family() {
  Check c;
  for (int m = 3; m <= 16; ++m) {
    const ExactInt direct = determinant(q_matrix(m));
    if (direct != q_value_recurrence(m)) c.fail("paths differ at m = " + std::to_string(m));
    if (m % 2 == 1 && q_value(m) != m) c.fail("Q_" + std::to_string(m) + " = " + show(q_value(m)));
  }
  return c;
}

Check joins() {
  Check c;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(kSeed + 6, i);
    const bool odd = i % 2 == 1;
    const int p = odd ? 2 * uniform(rng, 0, 3) + 1 : 2 * uniform(rng, 1, 3);
    const int q = odd ? 2 * uniform(rng, 0, (13 - p) / 2) + 1 : 2 * uniform(rng, 1, (14 - p) / 2);
    const Tournament t1 = random_tournament(p, rng);
    const Tournament t2 = random_tournament(q, rng);
    const ExactInt expected = odd ? determinant(cone_plus(t1)) * determinant(cone_plus(t2))
                                  : determinant(t1) * determinant(t2);
    if (determinant(join(t1, t2)) != expected) c.fail("join trial " + std::to_string(i));
  }
  return c;
}

Check blowup_dets() {
  Check c;
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(kSeed + 7, i);
    const int m = uniform(rng, 1, 7);
    const Tournament base = random_tournament(m, rng);
    std::vector<int> counts(m, 1);
    for (int extra = uniform(rng, 0, 14 - m); extra > 0; --extra) ++counts[uniform(rng, 0, m - 1)];
    if (blowup_det_formula(base, counts) != determinant(transitive_blowup(base, counts)))
      c.fail("formula trial " + std::to_string(i));
    std::vector<int> even(m);
    for (int& e : even) e = 2 * uniform(rng, 1, 7 / m);
    if (blowup_det_formula(base, even) != 1 || determinant(transitive_blowup(base, even)) != 1)
      c.fail("even counts trial " + std::to_string(i));
  }
  return c;
}

Check nine_dets() {
  Check c;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(kSeed + 8, i);
    const int m = uniform(rng, 2, 6);
    BlowupSpec spec{random_tournament(m, rng), {}};
    for (int j = 0; j < m; ++j) spec.parts.push_back(random_tournament(uniform(rng, 1, 3), rng));
    spec.parts[uniform(rng, 0, m - 1)] = join(three_cycle(), random_tournament(uniform(rng, 1, 2), rng));
    const Blowup b = blowup(spec);
    const VertexSet w = nine_det_witness(spec);
    if (determinant(b.tournament, w) != 9 * determinant(spec.base)) c.fail("witness trial " + std::to_string(i));
  }
  return c;
}

Check switching_invariance() {
  Check c;
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(kSeed + 9, i);
    const int n = uniform(rng, 2, 10);
    const Tournament t = random_tournament(n, rng);
    const Tournament s = switched(t, random_subset(rng, n));
    VertexSet u = random_subset(rng, n);
    if (u.empty()) u = VertexSet::full(n);
    if (determinant(t, u) != determinant(s, u)) c.fail("minor differs in trial " + std::to_string(i));
    if (diamond_count(t) != diamond_count(s)) c.fail("delta differs in trial " + std::to_string(i));
  }
  return c;
}

struct Mismatch {
  std::mutex mutex;
  std::string first;
  std::atomic<std::uint64_t> count{0};
  void add(const std::string& what) {
    if (count++ == 0) {
      std::lock_guard lock(mutex);
      first = what;
    }
  }
};

bool recognizer_agrees(const Tournament& t, bool oracle, Mismatch& bad) {
  const auto cert = recognize_d5(t);
  if (cert.has_value() != oracle) {
    bad.add("recognizer disagrees on " + t.to_bits());
    return false;
  }
  if (cert && !verify_certificate(t, *cert)) {
    bad.add("certificate rejected on " + t.to_bits());
    return false;
  }
  return true;
}

Check d5_recognizer() {
  Check c;
  Mismatch bad;
  const int threads = resolve_threads(0);
  parallel_chunks(labeled_count(7), threads, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const Tournament t = labeled_tournament(7, i);
      recognizer_agrees(t, in_dk(t, 5), bad);
      record_bounds(t);
    }
  });
  for (int n : {8, 9}) {
    parallel_chunks(kLargeSamples, threads, [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        const Tournament t = sample_tournament(n, kSeed + 10 + n, i);
        recognizer_agrees(t, max_subdet(t, 8).value <= 25, bad);
        record_bounds(t);
      }
    });
  }
  if (bad.count > 0) c.fail(std::to_string(bad.count.load()) + " mismatches, first: " + bad.first);
  return c;
}

Check d3_crosscheck() {
  Check c;
  enumerate_labeled(6, [&](const Tournament& t) {
    if (recognize_d3(t).has_value() != in_dk(t, 3)) c.fail("recognizer disagrees on " + t.to_bits());
  });
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const Tournament t = sample_tournament(7, kSeed + 11, i);
    bool all = true;
    for_each_subset_of_size(VertexSet::full(7), 6, [&](VertexSet s) { return all = in_dk(induce(t, s), 3); });
    if (in_dk(t, 3) != all) c.fail("6-subset criterion fails on " + t.to_bits());
  }
  return c;
}

Check ln_extremal() {
  Check c;
  for (int n : {4, 6, 8, 10}) {
    const ExtensionReport r = max_onevertex_ext_det(n);
    if (!r.holds || r.max_det != ExactInt(n - 1) * (n - 1)) c.fail("extension sweep at n = " + std::to_string(n));
  }
  const Tournament l = make_ln(10);
  std::set<std::int64_t> spectrum;
  for (std::uint64_t mask = 1; mask < (1u << 10); ++mask) {
    const VertexSet x = VertexSet::from_mask(mask);
    const ExactInt d = determinant(l, x);
    spectrum.insert(static_cast<std::int64_t>(d));
    if (x.size() < 10 && d >= 81) c.fail("proper subset " + x.to_string() + " has det " + show(d));
  }
  if (spectrum != std::set<std::int64_t>{0, 1, 9, 25, 49, 81}) c.fail("spectrum of L_10 differs");
  return c;
}

Check delta_bounds() {
  Check c;
  if (g_bound_population == 0) c.fail("no tournaments recorded");
  if (g_bound_violations > 0) c.fail(std::to_string(g_bound_violations.load()) + " violations, first: " + g_bound_example);
  if (c.ok) c.note = std::to_string(g_bound_population.load()) + " tournaments";
  return c;
}

Check pfaffians() {
  Check c;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(kSeed + 14, i);
    const Tournament t = random_tournament(2 * uniform(rng, 1, 6), rng);
    const ExactInt pf = pfaffian(t);
    if (pf * pf != determinant(t)) c.fail("pf^2 != det on " + t.to_bits());
    if (pf % 2 == 0) c.fail("even pfaffian on " + t.to_bits());
  }
  return c;
}

}  // namespace

int main() {
  std::printf("threads %d\n", resolve_threads(0));
  report(1, "5-tournaments have 0 or 2 diamonds (1024)", 1, fzt);
  report(2, "6-tournament (delta, det) table (32768)", 10, six_table);
  report(3, "det 25, delta 5, switch of L_6 and D_5 minus D_3 coincide", 60, six_coincide);
  report(4, "det(L_n) = (n-1)^2 for n = 2..16", 1, ln_dets);
  report(5, "Q_m = m for odd m, recurrence matches direct det", 1, q_family);
  report(6, "join determinant product formula (500)", 0, joins);
  report(7, "transitive blowup determinant formula (500)", 0, blowup_dets);
  report(8, "nine-times witness subset (100)", 0, nine_dets);
  report(9, "switching keeps principal minors and delta (200)", 0, switching_invariance);
  report(10, "D_5 recognizer vs oracle: all 7-tournaments, 1e5 at n = 8, 9", 600, d5_recognizer);
  report(11, "D_3 recognizer on all 6-tournaments, 6-subset test on 1e4 7-tournaments", 0, d3_crosscheck);
  report(12, "L_n extremality and determinant spectrum of L_10", 30, ln_extremal);
  report(13, "delta = 0 or n-3 <= delta <= (2/5)C(n,4) on criteria 1-3 and 10", 0, delta_bounds);
  report(14, "pf^2 = det and pf odd on 1000 even tournaments", 0, pfaffians);
  std::printf("%d failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
