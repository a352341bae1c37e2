// Compares the serial reference kernels against the OpenMP ones on the two
// batch-heavy workloads: overlap resolution (confluence certificates) and
// the per-word Hopf axiom checks.  Outputs must match exactly; only the
// wall time may differ.

#include <chrono>
#include <iostream>

#include "qdeform/deform.hpp"
#include "qdeform/job.hpp"

using namespace qdeform;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double omp_ms, bool equal) {
  std::cout << name << ": serial " << serial_ms << " ms, openmp " << omp_ms
            << " ms, speedup " << (omp_ms > 0 ? serial_ms / omp_ms : 0.0)
            << (equal ? "" : "  [OUTPUT MISMATCH]") << "\n";
}

}  // namespace

int main() {
  JobSpec sl3 = load_spec("sl3");
  auto dp = build_deformation(sl3.datum, sl3.lambda, sl3.component_relations,
                              sl3.degree);

  {
    ConfluenceReport a, b;
    double ts = time_ms([&] { a = check_confluence(dp.hlam(), 7, ExecPolicy::serial); });
    double tp = time_ms([&] { b = check_confluence(dp.hlam(), 7, ExecPolicy::openmp); });
    report("confluence sl3 H^lambda (overlaps <= 7)", ts, tp,
           a.pass == b.pass && a.overlaps_checked == b.overlaps_checked &&
               a.failures == b.failures);
  }

  {
    HopfReport a, b;
    double ts = time_ms([&] { a = check_hopf_axioms(dp.hopf_hlam, 4, ExecPolicy::serial); });
    double tp = time_ms([&] { b = check_hopf_axioms(dp.hopf_hlam, 4, ExecPolicy::openmp); });
    report("hopf axioms sl3-lambda (D = 4)", ts, tp, a.lines == b.lines);
  }

  {
    ComoduleReport a, b;
    double ts = time_ms([&] { a = comodule_check(dp, 4, ExecPolicy::serial); });
    double tp = time_ms([&] { b = comodule_check(dp, 4, ExecPolicy::openmp); });
    report("comodule checks sl3 (D = 4)", ts, tp, a.lines == b.lines);
  }

  return 0;
}
