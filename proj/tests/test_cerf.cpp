#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "test_util.hpp"
#include "voigt/cerf.hpp"
#include "voigt/oracle.hpp"

using namespace voigt;

TEST(Faddeeva, Frozen) {
  for (const auto& c : ref::faddeeva_w) EXPECT_LT(rel_err(faddeeva_w(c.z), c.value), 1e-13) << c.z;
}

TEST(Faddeeva, SimpleValues) {
  EXPECT_EQ(faddeeva_w(0.0), complex(1.0, 0.0));
  EXPECT_LT(rel_err(faddeeva_w({0.0, 1.0}).real(), std::exp(1.0) * std::erfc(1.0)), 1e-15);
  EXPECT_LT(rel_err(faddeeva_w({1.5, 0.0}).real(), std::exp(-2.25)), 1e-15);
}

TEST(Faddeeva, Reflection) {
  for (complex z : {complex(0.3, 0.2), complex(4.0, 1.0), complex(-7.0, 0.5), complex(2.0, 9.0)})
    EXPECT_LT(rel_err(faddeeva_w(-std::conj(z)), std::conj(faddeeva_w(z))), 1e-15);
}

TEST(Faddeeva, RealPartAcrossRegionBoundaries) {
  // q = (x/6.3)^2 + (y/4.4)^2 crosses 1 here.
  for (double x = 5.5; x < 7.0; x += 0.05) {
    const double y = 4.4 * std::sqrt(std::max(0.0, 1.0 - (x / 6.3) * (x / 6.3)));
    const complex zl(x, y * 0.9999999), zh(x, y * 1.0000001);
    const complex lo = faddeeva_w(zl);
    const complex hi = faddeeva_w(zh);
    // w' = -2 z w + 2i / sqrt(pi)
    const complex slope = -2.0 * zl * lo + complex(0.0, 2.0 / sqrt_pi);
    EXPECT_LT(std::abs(hi - lo - slope * (zh - zl)), 1e-11 * std::abs(lo)) << x;
  }
}

TEST(Erfc, Frozen) {
  for (const auto& c : ref::erfc) EXPECT_LT(rel_err(erfc_complex(c.z), c.value), 1e-13) << c.z;
  EXPECT_LT(std::abs(erfc_complex(1.0).real() - 0.157299207050285130658), 1e-16);
  EXPECT_EQ(erfc_complex(0.0), complex(1.0, 0.0));
}

TEST(Erfc, ReflectionIdentity) {
  const complex z(0.8, 0.4);
  EXPECT_LT(std::abs(erfc_complex(z) + erfc_complex(-z) - 2.0), 1e-12);
}

TEST(Erfc, ConsistentWithFaddeeva) {
  const complex z(0.6, 0.9);
  EXPECT_LT(rel_err(erfc_complex(complex(0.0, -1.0) * z), std::exp(z * z) * faddeeva_w(z)), 1e-13);
}

TEST(Erfc, OverflowCarriesLog) {
  try {
    erfc_complex({-30.0, 0.5});
    SUCCEED();
  } catch (...) {
    FAIL() << "erfc of moderate negative argument should be finite";
  }
  try {
    erfc_complex({-5.0, 30.0});
    FAIL() << "expected OverflowError";
  } catch (const OverflowError& e) {
    EXPECT_GT(e.log_magnitude(), 700.0);
  }
}

TEST(Erfcx, MatchesScaledErfc) {
  for (complex z : {complex(0.5, 0.5), complex(3.0, -1.0), complex(-0.4, 0.2)})
    EXPECT_LT(rel_err(erfcx(z), std::exp(z * z) * erfc_complex(z)), 1e-13);
}

TEST(Dawson, Frozen) {
  for (const auto& c : ref::dawson) EXPECT_LT(rel_err(dawson(c.z), c.value), 1e-13) << c.z;
}

TEST(Dawson, OddAndReal) {
  EXPECT_EQ(dawson(0.0), 0.0);
  EXPECT_EQ(dawson(-1.1), -dawson(1.1));
  EXPECT_EQ(dawson(complex(2.0, 0.0)).imag(), 0.0);
}

TEST(Dawson, ComposesToFaddeeva) {
  for (complex z : {complex(0.5, 0.5), complex(3.0, 0.1), complex(-6.0, 4.0), complex(2.4, 2.6)}) {
    const complex comp = std::exp(-z * z) + complex(0.0, 2.0 * inv_sqrt_pi) * dawson(z);
    EXPECT_LT(rel_err(comp, faddeeva_w(z)), 1e-11) << z;
  }
}

TEST(Kummer, Frozen) {
  for (const auto& c : ref::kummer_1_3half)
    EXPECT_LT(rel_err(kummer_1f1(1.0, 1.5, c.z).value, c.value), 1e-12) << c.z;
}

TEST(Kummer, SimpleCases) {
  EXPECT_EQ(kummer_1f1(0.7, 2.0, 0.0).value, complex(1.0));
  EXPECT_LT(rel_err(kummer_1f1(1.0, 1.0, 0.3).value, complex(std::exp(0.3))), 1e-15);
  EXPECT_THROW(kummer_1f1(1.0, -2.0, 0.3), PoleError);
  EXPECT_THROW(kummer_1f1(1.0, 1.5, complex(-400.0, 0.0), {1e-14, 1e-300, 50}), ConvergenceError);
}

TEST(DiRocco, SimpleCases) {
  const double y = 0.8;
  EXPECT_LT(rel_err(k_dirocco_series({0.0, y}).value, std::exp(y * y) * std::erfc(y)), 1e-13);
  EXPECT_LT(rel_err(k_dirocco_series({0.5, 0.0}).value, std::exp(-0.25)), 1e-14);
  const double oracle = voigt_zaghloul(0.5, LineParams(1.0, 1.0)).value * sqrt_pi;
  EXPECT_LT(rel_err(k_dirocco_series({0.5, 1.0}).value, oracle), 1e-7);
}

TEST(DiRocco, RefusesOutsidePracticalRadius) {
  EXPECT_THROW(k_dirocco_series({6.0, 0.1}), ConvergenceError);
  EXPECT_THROW(k_voigt({6.0, 0.1}, Method::DiRocco), MethodDomainError);
}

TEST(Whittaker, ValuesAndBranch) {
  EXPECT_EQ(whittaker_w_quarter(1.0).imag(), 0.0);
  EXPECT_THROW(whittaker_w_quarter(-1.0), BranchCutError);
  // W_{-1/4,-1/4}(1) = sqrt(pi) e^{1/2} erfc(1)
  EXPECT_LT(rel_err(whittaker_w_quarter(1.0).real(), sqrt_pi * std::exp(0.5) * std::erfc(1.0)), 1e-14);
}

TEST(Parabolic, Origin) {
  EXPECT_LT(rel_err(parabolic_d_minus1(0.0), complex(std::sqrt(pi / 2.0))), 1e-15);
}

TEST(KVoigt, OriginAndGaussianLimit) {
  for (Method m : k_methods) {
    EXPECT_LT(rel_err(k_voigt({0.0, 0.0}, m).value, 1.0), 1e-14) << method_name(m);
    EXPECT_LT(rel_err(k_voigt({0.0, 1.0}, m).value, std::exp(1.0) * std::erfc(1.0)), 1e-13)
        << method_name(m);
  }
}

TEST(KVoigt, ExponentialLimit) {
  for (double x : {0.0, 1.0, 3.0})
    for (Method m : k_methods) {
      try {
        EXPECT_NEAR(k_voigt({x, 0.0}, m).value, std::exp(-x * x), 1e-12) << method_name(m) << x;
      } catch (const MethodDomainError&) {
      }
    }
}

TEST(KVoigt, AgreesWithOracle) {
  const double oracle = voigt_zaghloul(2.0, LineParams(1.0, 0.1)).value * sqrt_pi;
  EXPECT_LT(rel_err(k_voigt({2.0, 0.1}, Method::Faddeeva).value, oracle), 1e-10);
  const double o2 = voigt_zaghloul(0.5, LineParams(1.0, 0.5)).value * sqrt_pi;
  EXPECT_LT(rel_err(k_voigt({0.5, 0.5}, Method::Hyp1F1).value, o2), 1e-8);
  const double o3 = voigt_zaghloul(0.4, LineParams(1.0, 0.7)).value * sqrt_pi;
  EXPECT_LT(rel_err(k_voigt({0.4, 0.7}, Method::ParabolicCylinder).value, o3), 1e-9);
}

TEST(KVoigt, RepresentationsAgree) {
  const DimensionlessPoint pt{0.3, 1.0};
  const double e = k_voigt(pt, Method::Erfc).value;
  EXPECT_LT(rel_err(k_voigt(pt, Method::Whittaker).value, e), 1e-11);
  EXPECT_LT(rel_err(k_voigt({1.0, 0.5}, Method::ParabolicCylinder).value,
                    k_voigt({1.0, 0.5}, Method::Erfc).value),
            1e-11);
}

TEST(KVoigt, Symmetry) {
  for (Method m : k_methods)
    for (double x : {0.4, 1.7, 2.9}) {
      const auto a = k_voigt({x, 0.3}, m);
      const auto b = k_voigt({-x, 0.3}, m);
      EXPECT_LT(rel_err(a.value, b.value), 1e-12) << method_name(m) << " " << x;
    }
}

TEST(KVoigt, RejectsNonKMethods) {
  EXPECT_THROW(k_voigt({0.0, 1.0}, Method::MBContour), InvalidArgument);
  EXPECT_THROW(k_voigt({0.0, -1.0}, Method::Faddeeva), InvalidArgument);
}
