// Benchmark: parallel kernels against the serial references on the same
// inputs. Results are wall-clock medians of three runs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mulrec/classify.hpp"
#include "mulrec/reference.hpp"

using namespace mulrec;

namespace {

double time_once(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double median3(const std::function<void()>& fn) {
  double a = time_once(fn), b = time_once(fn), c = time_once(fn);
  double lo = std::min({a, b, c}), hi = std::max({a, b, c});
  return a + b + c - lo - hi;
}

void row(const char* name, double ref_ms, double k1_ms, double kn_ms) {
  std::printf("%-34s %12.2f %12.2f %12.2f %8.2fx\n", name, ref_ms, k1_ms, kn_ms,
              kn_ms > 0 ? k1_ms / kn_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t N = argc > 1 ? std::atoll(argv[1]) : 100000;
  int threads = omp_get_max_threads();

  RunConfig serial_cfg;
  serial_cfg.workers = 1;
  RunConfig par_cfg;
  par_cfg.workers = threads;

  std::printf("window/scan size N = %lld, threads = %d\n", static_cast<long long>(N), threads);
  std::printf("%-34s %12s %12s %12s %8s\n", "kernel", "reference", "1 thread", "N threads",
              "speedup");

  MoebiusParams rec(2, 2, 2, 1);
  MoebiusParams nonrec(4, 1, 4, 3);

  // Window construction. The all-pairs reference is quadratic; it runs on a
  // 500-vertex window while the kernels take the full range.
  double ref_b = median3([&] { ref::build_window_allpairs(rec, 1, 500); });
  double k1_b = median3([&] { build_window(rec, 1, N, serial_cfg); });
  double kn_b = median3([&] { build_window(rec, 1, N, par_cfg); });
  row("build_window (ref @500)", ref_b, k1_b, kn_b);

  Classification cls = classify(nonrec);
  WindowGraph g = build_window(nonrec, 1, N, par_cfg);
  double ref_v = median3([&] { ref::verify_coloring_serial(g, cls.nr->coloring, serial_cfg); });
  double k1_v = median3([&] { verify_coloring(g, cls.nr->coloring, serial_cfg); });
  double kn_v = median3([&] { verify_coloring(g, cls.nr->coloring, par_cfg); });
  row("verify_coloring", ref_v, k1_v, kn_v);

  CMFSpec witness = cls.nr->witness;
  double ref_d = median3([&] { ref::dio_scan_serial(witness, nonrec, N, serial_cfg); });
  double k1_d = median3([&] { dio_scan(witness, nonrec, N, serial_cfg); });
  double kn_d = median3([&] { dio_scan(witness, nonrec, N, par_cfg); });
  row("dio_scan", ref_d, k1_d, kn_d);

  std::vector<CMFSpec> fs{ArchCharSpec::plain(1.0)};
  double ref_a = median3([&] { ref::aset_scan_serial(fs, 0.1, rec, N, serial_cfg); });
  double k1_a = median3([&] { aset_scan(fs, 0.1, rec, N, serial_cfg); });
  double kn_a = median3([&] { aset_scan(fs, 0.1, rec, N, par_cfg); });
  row("aset_scan", ref_a, k1_a, kn_a);

  return 0;
}
