// Three-legs graph: C_G exceeds the spectral bound C_G^0 = 3.

#include <cstdio>

#include "dublo/families.hpp"
#include "dublo/optimizer.hpp"

int main() {
  const dublo::Graph t = dublo::generate({dublo::Family::kThreeLegs});
  dublo::OptimizerOptions opts;
  opts.certificate = true;
  const auto res = dublo::least_doubling(t, opts);

  std::printf("C0  = %.10f\n", res.lower_bound_spectral);
  std::printf("C_G = %.10f  in [%s, %s]\n", res.c_g,
              dublo::format_rational(res.certificate->t_lo).c_str(),
              dublo::format_rational(res.certificate->t_hi).c_str());
  std::printf("1 + largest root of x^3+x^2-5x-3 = %.10f\n",
              1.0 + dublo::poly_largest_root(dublo::kThreeLegsPolynomial));
  std::printf("minimizer (min weight 1):");
  for (double w : res.minimizer.weights()) std::printf(" %.6f", w);
  std::printf("\n");
}
