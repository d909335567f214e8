#include "h_function.hpp"

#include "errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace stirling::hfun {

namespace {

constexpr double kSeriesRadius = 1.0;
constexpr int kSeriesTerms = 30; // |z|^k/k! at |z|=1, k=30: ~4e-33

} // namespace

Complex h(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // sum_{k>=2} z^k / k!
    Complex sum = 0.0, term = z * z * 0.5;
    for (int k = 3; k <= kSeriesTerms; ++k) {
      sum += term;
      term *= z / static_cast<double>(k);
    }
    return sum + term;
  }
  return std::exp(z) - z - 1.0;
}

Complex h_prime(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // sum_{k>=1} z^k / k!
    Complex sum = 0.0, term = z;
    for (int k = 2; k <= kSeriesTerms; ++k) {
      sum += term;
      term *= z / static_cast<double>(k);
    }
    return sum + term;
  }
  return std::exp(z) - 1.0;
}

Complex g(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // 1 + 2 sum_{r>=1} z^r/(r+2)!  ==  sum over term_r = 2 z^r/(r+2)!
    Complex sum = 1.0, term = z / 3.0;
    for (int r = 2; r <= kSeriesTerms; ++r) {
      sum += term;
      term *= z / static_cast<double>(r + 2);
    }
    return sum + term;
  }
  return 2.0 * (std::exp(z) - z - 1.0) / (z * z);
}

Complex g_prime(Complex z) {
  if (std::abs(z) <= kSeriesRadius) {
    // sum_{r>=1} 2 r z^{r-1}/(r+2)!
    Complex sum = 0.0;
    Complex zp = 1.0;   // z^{r-1}
    double fact = 6.0;  // (r+2)! at r=1
    for (int r = 1; r <= kSeriesTerms; ++r) {
      sum += 2.0 * static_cast<double>(r) / fact * zp;
      zp *= z;
      fact *= static_cast<double>(r + 3);
    }
    return sum;
  }
  // d/dz [2(e^z - z - 1)/z^2] = 2[(z-2)e^z + z + 2]/z^3
  return 2.0 * ((z - 2.0) * std::exp(z) + z + 2.0) / (z * z * z);
}

Complex phi(Complex z) { return 1.0 / std::sqrt(g(z)); }

Complex phi_prime(Complex z) {
  Complex gz = g(z);
  return -g_prime(z) / (2.0 * gz * std::sqrt(gz));
}

Complex g_pow(Complex z, double alpha) {
  return std::exp(alpha * std::log(g(z)));
}

void preflight_branch_safe(const quad::ContourPath& path) {
  constexpr int kSamples = 512;
  double prev_arg = 0.0;
  bool have_prev = false;
  for (const auto& seg : path.segments()) {
    for (int k = 0; k <= kSamples; ++k) {
      double tau = static_cast<double>(k) / kSamples;
      Complex z = quad::ContourPath::at(seg, tau).first;
      Complex gz = g(z);
      if (gz.real() <= 0.0 && std::abs(gz.imag()) < 1e-12 * std::abs(gz))
        throw ContourError(
            "preflight_branch_safe: g(z) touches the branch cut (-inf,0] "
            "on the contour");
      double a = std::arg(gz);
      if (have_prev) {
        // Principal-arg jumps near 2*pi are precisely a crossing of the
        // cut at arg = +-pi; moderate jumps mean undersampling.  Both are
        // fatal for a principal-log power, so no wrap-around forgiveness.
        if (std::abs(a - prev_arg) >= 0.5 * std::numbers::pi)
          throw ContourError(
              "preflight_branch_safe: arg g(z) jumps by >= pi/2 between "
              "adjacent path samples; principal-branch power is unsafe on "
              "this contour");
      }
      prev_arg = a;
      have_prev = true;
    }
  }
}

} // namespace stirling::hfun
