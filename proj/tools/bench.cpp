// Serial vs OpenMP timings for the determinant-evaluation and batch kernels.
//   quadrik_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "quadrik/document.hpp"
#include "quadrik/kernels.hpp"
#include "quadrik/report.hpp"

using namespace quadrik;
using Clock = std::chrono::steady_clock;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = Rational(Integer(num(rng)), Integer(den(rng)));
  }
  return m;
}

template <typename F>
double seconds(F&& f, int repeats) {
  const auto t0 = Clock::now();
  for (int r = 0; r < repeats; ++r) f();
  return std::chrono::duration<double>(Clock::now() - t0).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d\n", kernels::thread_limit());
  std::mt19937_64 rng(2024);

  std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial s", "parallel s", "speedup", "match");
  for (std::size_t size : {8, 12, 16, 24}) {
    const Matrix a = random_symmetric(rng, size), b = random_symmetric(rng, size);
    const auto nodes = interpolation_nodes(size + 1);
    std::vector<Rational> vs, vp;
    const double ts = seconds([&] { vs = kernels::determinant_values_serial(a, b, nodes); }, repeats);
    const double tp = seconds([&] { vp = kernels::determinant_values_parallel(a, b, nodes); }, repeats);
    char name[64];
    std::snprintf(name, sizeof name, "det(tA+B) %zux%zu", size, size);
    std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, vs == vp ? "yes" : "NO");
  }

  std::vector<BatchItem> items;
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      std::vector<int> parts(static_cast<std::size_t>(n + 3), 1);
      if (seed % 2) {
        parts.pop_back();
        parts.front() = 2;
      }
      items.push_back({"n" + std::to_string(n) + "-" + std::to_string(seed), serialize(generate_pencil(n, parts, seed))});
    }
  }
  std::vector<BatchResult> rs, rp;
  const double ts = seconds([&] { rs = analyze_batch_serial(items); }, repeats);
  const double tp = seconds([&] { rp = analyze_batch_parallel(items); }, repeats);
  char name[64];
  std::snprintf(name, sizeof name, "batch of %zu documents", items.size());
  std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, rs == rp ? "yes" : "NO");
  return 0;
}
