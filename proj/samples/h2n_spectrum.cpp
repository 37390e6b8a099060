// Prints a(H_2n) next to the path bounds a(P_n) <= a(H_2n) <= a(P_{n-4}).
// Usage: h2n_spectrum [n_max]   (default 20)

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "spectral_lab/spectral_lab.hpp"

int main(int argc, char** argv) {
  using namespace spectral_lab;
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 20;
  if (n_max < 6) {
    std::cerr << "n_max must be at least 6\n";
    return 2;
  }
  std::cout << std::setw(4) << "n" << std::setw(16) << "a(P_n)" << std::setw(16) << "a(H_2n)" << std::setw(16)
            << "a(P_n-4)" << std::setw(8) << "mult" << std::setw(8) << "pm" << "\n";
  std::cout << std::fixed << std::setprecision(10);
  for (int n = 6; n <= n_max; ++n) {
    const auto h = build_h2n(n);
    const auto r = algebraic_connectivity(h);
    std::cout << std::setw(4) << n << std::setw(16) << path_fiedler_closed_form(n) << std::setw(16) << r.value
              << std::setw(16) << path_fiedler_closed_form(n - 4) << std::setw(8) << r.multiplicity << std::setw(8)
              << (n <= 30 ? to_string(count_perfect_matchings(h)) : "-") << "\n";
  }
}
