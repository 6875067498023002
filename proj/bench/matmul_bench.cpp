#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "uqv/matrix.hpp"

// Compares the serial reference multiply against the OpenMP kernel on dense
// matrices over Q(zeta) and checks they agree bit for bit.

using namespace uqv;

namespace {

CycMatrix random_matrix(int r, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), den(1, 5);
  CycMatrix m(r, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycInt num(r);
      for (int k = 0; k < r - 1; ++k) num[k] = coef(rng);
      m.at(i, j) = CycRat(num, mpz_class(den(rng)));
    }
  return m;
}

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int r = argc > 1 ? std::atoi(argv[1]) : 5;
  int n = argc > 2 ? std::atoi(argv[2]) : 120;
  int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  std::mt19937 rng(7);
  CycMatrix a = random_matrix(r, n, rng);
  CycMatrix b = random_matrix(r, n, rng);

  std::cout << "dense multiply over Q(zeta_" << r << "), " << n << " x " << n
            << ", " << reps << " rep(s)\n";

  auto t0 = std::chrono::steady_clock::now();
  CycMatrix serial;
  for (int i = 0; i < reps; ++i) serial = a.multiply_serial(b);
  double ts = seconds(t0) / reps;
  std::cout << "  serial reference: " << ts << " s\n";

  t0 = std::chrono::steady_clock::now();
  CycMatrix parallel;
  for (int i = 0; i < reps; ++i) parallel = a * b;
  double tp = seconds(t0) / reps;
  std::cout << "  parallel kernel:  " << tp << " s  (speedup " << ts / tp << "x)\n";

  if (!(serial == parallel)) {
    std::cout << "  MISMATCH between kernels\n";
    return 1;
  }
  std::cout << "  kernels agree exactly\n";
  return 0;
}
