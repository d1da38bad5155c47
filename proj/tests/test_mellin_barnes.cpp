#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "test_util.hpp"
#include "voigt/mellin_barnes.hpp"
#include "voigt/oracle.hpp"

using namespace voigt;

namespace {
double oracle(double x, const LineParams& p) { return voigt_zaghloul(x, p).value; }
}  // namespace

TEST(MBContour, OriginUnitWidths) {
  const auto v = mb_contour_eval(0.0, LineParams(1, 1), MBForm::DescendingKernel, {0.5, 0, 0});
  EXPECT_LT(rel_err(v.value, ref::voigt_origin_unit), 1e-12);
  EXPECT_EQ(v.method, Method::MBContour);
}

TEST(MBContour, FormsAgree) {
  const LineParams p(1.0, 0.5);
  const auto d = mb_contour_eval(1.0, p, MBForm::DescendingKernel);
  const auto a = mb_contour_eval(1.0, p, MBForm::AscendingKernel);
  EXPECT_LT(rel_err(d.value, a.value), 1e-9);
  EXPECT_EQ(a.method, Method::MBContourMirrored);
}

TEST(MBContour, AbscissaIndependence) {
  const LineParams p(1.0, 1.0);
  for (double x : {0.0, 0.7, 2.5}) {
    const double base = mb_contour_eval(x, p, MBForm::DescendingKernel, {0.5, 0, 0}).value;
    for (double c : {0.25, 0.75})
      EXPECT_LT(rel_err(mb_contour_eval(x, p, MBForm::DescendingKernel, {c, 0, 0}).value, base),
                1e-10);
    for (double c : {-0.25, -0.5, -0.75})
      EXPECT_LT(rel_err(mb_contour_eval(x, p, MBForm::AscendingKernel, {c, 0, 0}).value, base),
                1e-10);
  }
}

TEST(MBContour, DoublingHeightWithinEstimate) {
  const LineParams p(1.0, 1.0);
  const auto a = mb_contour_eval(0.5, p);
  const auto b = mb_contour_eval(0.5, p, MBForm::DescendingKernel, {0.5, 2.0 * a.height, 0});
  EXPECT_LE(std::abs(a.value - b.value), std::max(a.est_error, 1e-16));
}

TEST(MBContour, BandViolations) {
  const LineParams p(1.0, 1.0);
  EXPECT_THROW(mb_contour_eval(0.3, p, MBForm::DescendingKernel, {1.0, 0, 0}), ContourBandError);
  EXPECT_THROW(mb_contour_eval(0.3, p, MBForm::DescendingKernel, {-0.5, 0, 0}), ContourBandError);
  EXPECT_THROW(mb_contour_eval(0.3, p, MBForm::AscendingKernel, {0.5, 0, 0}), ContourBandError);
}

TEST(MBContour, GaussianLimitIsFlagged) {
  const LineParams g(1.0, 0.0);
  const auto v = mb_contour_eval(1.5, g);
  EXPECT_TRUE(v.has(flag_slow_decay));
  EXPECT_LT(rel_err(v.value, gaussian(1.5, g)), 1e-11);
  EXPECT_THROW(mb_contour_eval(0.0, g), DomainError);
}

TEST(MBContour, DecaySlopeGrowsAsThetaShrinks) {
  const LineParams p(1.0, 1.0);
  const double wide = mb_contour_eval(5.0, p).decay_slope;  // |theta| near pi/2
  const double narrow = mb_contour_eval(0.0, p).decay_slope;
  EXPECT_LT(narrow, wide);
  EXPECT_NEAR(narrow, -3.0 * pi / 4.0, 0.1);
  EXPECT_NEAR(wide, -(3.0 * pi / 4.0 - std::atan(5.0)), 0.1);
}

TEST(MBPair, MatchesCosineForm) {
  const LineParams p(1.0, 1.0);
  for (double x : {0.0, 0.7, 2.0}) {
    const double cosine = mb_contour_eval(x, p).value;
    EXPECT_LT(rel_err(mb_conjugate_pair_eval(x, p).value, cosine), 1e-11) << x;
    EXPECT_LT(rel_err(mb_conjugate_pair_eval(x, p, MBForm::AscendingKernel).value, cosine), 1e-11);
  }
}

TEST(MBAscending, OriginAndGaussianPeak) {
  const auto v = mb_ascending_series(0.0, LineParams(1, 1));
  EXPECT_LT(rel_err(v.value, ref::voigt_origin_unit), 1e-10);
  const auto g = mb_ascending_series(0.0, LineParams(2.0, 0.0));
  EXPECT_LT(rel_err(g.value, inv_sqrt_pi / 2.0), 1e-15);
}

TEST(MBAscending, SignFixedByOrigin) {
  EXPECT_EQ(ascending_series_sign, 1.0);
  EXPECT_GT(mb_ascending_series(0.0, LineParams(1, 1)).value, 0.0);
}

TEST(MBAscending, AgreesWithContour) {
  const LineParams p(1, 1);
  EXPECT_LT(rel_err(mb_ascending_series(1.0, p).value, mb_contour_eval(1.0, p).value), 1e-9);
}

TEST(MBAscending, RefusesLargeRho) {
  EXPECT_THROW(mb_ascending_series(6.0, LineParams(1, 1)), ConvergenceError);
}

TEST(MBAsymptotic, LeadingCoefficientIsLorentzian) {
  EXPECT_EQ(asymptotic_coefficient(0), 2.0);
  EXPECT_EQ(asymptotic_coefficient(1), -4.0);
  EXPECT_EQ(asymptotic_coefficient(2), 24.0);
  EXPECT_EQ(asymptotic_coefficient(3), -240.0);
  // 2 cos(theta) / (pi omega_g rho) = omega_l / (pi (omega_l^2 + x^2))
  for (auto [x, wg, wl] : {std::tuple{50.0, 1.0, 1.0}, {7.0, 0.4, 2.0}, {30.0, 2.0, 0.1}}) {
    const LineParams p(wg, wl);
    const PolarCoords pc = PolarCoords::from(x, p);
    EXPECT_LT(rel_err(asymptotic_term(0, pc, wg), lorentzian(x, p)), 1e-13);
  }
}

TEST(MBAsymptotic, FarTail) {
  const LineParams p(1, 1);
  const double o50 = voigt_convolution(50.0, p).value;
  EXPECT_LT(rel_err(mb_asymptotic_series(50.0, p, 0).value, o50), 1e-3);
  EXPECT_LT(rel_err(mb_asymptotic_series(50.0, p, 1000).value, o50), 1e-6);
  const double o20 = voigt_convolution(20.0, p).value;
  const auto opt = mb_asymptotic_series(20.0, p, 1000);
  EXPECT_LT(rel_err(opt.value, o20), 1e-6);
  // The error is of the order of the first omitted term.
  const double m0 = mb_asymptotic_series(20.0, p, 0).value;
  const double m1 = mb_asymptotic_series(20.0, p, 1).value;
  EXPECT_LE(std::abs(m0 - o20), 2.0 * std::abs(m0 - m1));
}

TEST(MBAsymptotic, RefusesSmallRho) {
  EXPECT_THROW(mb_asymptotic_series(1.0, LineParams(1, 1), 5), DomainError);
  EXPECT_THROW(mb_asymptotic_series(50.0, LineParams(1, 1), -1), InvalidArgument);
}

TEST(MBAsymptotic, EstimateCoversGaussianRemainder) {
  const LineParams p(1.0, 0.01);
  const auto v = mb_asymptotic_series(5.0, p, 1000);
  EXPECT_GE(v.est_error, std::abs(v.value - oracle(5.0, p)));
}
