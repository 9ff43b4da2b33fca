// Compares the serial reference kernels against the OpenMP ones.
#include <chrono>
#include <cstdio>

#include "vanprop/character_table.hpp"
#include "vanprop/symchars.hpp"
#include "vanprop/vanishing.hpp"

using namespace vanprop;
using clk = std::chrono::steady_clock;

static double seconds_since(clk::time_point start) {
  return std::chrono::duration<double>(clk::now() - start).count();
}

template <typename F>
static double timed(F&& f) {
  auto start = clk::now();
  f();
  return seconds_since(start);
}

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 16;
  long tail = argc > 2 ? std::atol(argv[2]) : 4000000;

  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

  double s1 = timed([&] { sym_table(n, n, Exec::serial); });
  double p1 = timed([&] { sym_table(n, n, Exec::parallel); });
  std::printf("%-34s %9.3fs %9.3fs %7.2fx\n",
              ("sym_table(" + std::to_string(n) + ")").c_str(), s1, p1, s1 / p1);

  double s2 = timed([&] { moved_points_tail_holds(106, tail, Exec::serial); });
  double p2 = timed([&] { moved_points_tail_holds(106, tail, Exec::parallel); });
  std::printf("%-34s %9.3fs %9.3fs %7.2fx\n",
              ("moved-points tail to " + std::to_string(tail)).c_str(), s2, p2, s2 / p2);

  PermGroup s7 = builtin_group("symmetric", {7});
  double s3 = timed([&] { GroupCharacterTable::build(s7, Exec::serial); });
  double p3 = timed([&] { GroupCharacterTable::build(s7, Exec::parallel); });
  std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", "character table of S_7", s3, p3, s3 / p3);

  double s4 = timed([&] { verify_theorem_1_4(12, 105, 20, Exec::serial); });
  double p4 = timed([&] { verify_theorem_1_4(12, 105, 20, Exec::parallel); });
  std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", "theorem 1.4 pipeline (exact<=12)", s4, p4, s4 / p4);

  return 0;
}
