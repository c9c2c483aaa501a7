// Serial vs OpenMP timings for quotient enumeration and the quotient scan.
//
//   bench_quotients [max_degree] [repeats]
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include "sgm/presentations.hpp"
#include "sgm/quotients.hpp"

namespace {

template <class F>
double best_seconds(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(std::string const& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(40) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << std::setw(10) << parallel
            << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
            << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_degree = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(40) << "case" << std::right << std::setw(10)
            << "serial s" << std::setw(10) << "omp s" << std::setw(10) << "speedup"
            << "\n";

  std::vector<std::pair<std::string, sgm::Presentation>> cases = {
      {"<a,b | >", sgm::Presentation({"a", "b"}, {})},
      {"<a,b | a^3, b^2, (ab)^3>", sgm::Presentation({"a", "b"}, {"a^3", "b^2", "a b a b a b"})},
      {"<a,b | a^-1 b^2 a b^-3>", sgm::Presentation({"a", "b"}, {"a^-1 b^2 a b^-3"})},
  };
  for (auto const& [name, pres] : cases) {
    auto p = std::make_shared<sgm::Presentation const>(pres);
    for (std::size_t d = 2; d <= max_degree; ++d) {
      std::vector<sgm::PermRep> serial, parallel;
      double ts = best_seconds(repeats, [&] { serial = sgm::all_quotients(p, d); });
      double tp = best_seconds(repeats, [&] { parallel = sgm::all_quotients_parallel(p, d); });
      row(name + " deg " + std::to_string(d) + " (" + std::to_string(serial.size()) + ")",
          ts, tp, serial == parallel);
    }
  }

  // Scan of F(a,b) x F(a,b) for the commutator [a^-1 b a, b] in the first
  // coordinate against the fibre-product subgroup over BS(2,3).
  sgm::Presentation free({"a", "b"}, {});
  sgm::Presentation bs({"a", "b"}, {"a^-1 b^2 a b^-3"});
  sgm::ProductPresentation product = sgm::direct_product({free, free});
  auto h = sgm::fiber_product_subgroup(free, bs, &product);
  auto w0 = free.word("a^-1 b^-1 a b^-1 a^-1 b a b");
  auto g = sgm::pair_word(product, w0, sgm::Word(free.alphabet()));
  sgm::QuotientScan serial, parallel;
  double ts = best_seconds(1, [&] {
    serial = sgm::scan_quotients(product.combined(), h.generators(), g.letters(), max_degree);
  });
  double tp = best_seconds(1, [&] {
    parallel = sgm::scan_quotients_parallel(product.combined(), h.generators(), g.letters(),
                                            max_degree);
  });
  row("fibre scan deg<=" + std::to_string(max_degree) + " (" +
          std::to_string(serial.representations) + ")",
      ts, tp,
      serial.representations == parallel.representations &&
          serial.separating == parallel.separating);
  return 0;
}
