// Timing comparison between the serial reference implementations and the
// OpenMP kernels: the bracket state sum and the Khovanov block ranks.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "khdetect/diagram.hpp"
#include "khdetect/dt_code.hpp"
#include "khdetect/jones.hpp"
#include "khdetect/khovanov.hpp"

using namespace khdetect;

namespace {

double seconds(void (*fn)(const Diagram&), const Diagram& d) {
  auto t0 = std::chrono::steady_clock::now();
  fn(d);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void run_bracket_serial(const Diagram& d) { (void)bracket_serial(d); }
void run_bracket_parallel(const Diagram& d) { (void)bracket(d); }
void run_kh(const Diagram& d) { (void)kh_polynomial(d); }

struct Case {
  std::string label;
  DTCode dt;
};

}  // namespace

int main() {
  const int max_threads = omp_get_max_threads();
  std::printf("threads available: %d\n\n", max_threads);

  std::vector<Case> bracket_cases = {
      {"T(2,11)  (11 crossings)", torus_2k_dt(11)},
      {"m_12     (14 crossings)", twist_dt(12)},
      {"m_14     (16 crossings)", twist_dt(14)},
      {"m_16     (18 crossings)", twist_dt(16)},
  };
  std::printf("Kauffman bracket state sum (2^N smoothings)\n");
  std::printf("%-26s %12s %12s %9s\n", "diagram", "serial [s]", "openmp [s]",
              "speedup");
  for (const auto& c : bracket_cases) {
    Diagram d = Diagram::realize(c.dt);
    double ts = seconds(run_bracket_serial, d);
    double tp = seconds(run_bracket_parallel, d);
    std::printf("%-26s %12.4f %12.4f %8.2fx\n", c.label.c_str(), ts, tp,
                ts / tp);
  }

  std::vector<Case> kh_cases = {
      {"m_8      (10 crossings)", twist_dt(8)},
      {"cefIgbajkDh (11 cr)", parse_dt_compressed("cefIgbajkDh")},
      {"fJGkHlICEABd (12 cr)", parse_dt_compressed("fJGkHlICEABd")},
      {"hGJaMlCdEKBfI (13 cr)", parse_dt_compressed("hGJaMlCdEKBfI")},
  };
  std::printf("\nKhovanov homology (per-block exact ranks)\n");
  std::printf("%-26s %12s %12s %9s\n", "diagram", "1 thread [s]",
              "openmp [s]", "speedup");
  for (const auto& c : kh_cases) {
    Diagram d = Diagram::realize(c.dt);
    omp_set_num_threads(1);
    double ts = seconds(run_kh, d);
    omp_set_num_threads(max_threads);
    double tp = seconds(run_kh, d);
    std::printf("%-26s %12.4f %12.4f %8.2fx\n", c.label.c_str(), ts, tp,
                ts / tp);
  }
  return 0;
}
