#include <gtest/gtest.h>

#include <random>

#include "reference_values.hpp"
#include "test_util.hpp"
#include "voigt/foxh_meijer.hpp"
#include "voigt/mellin_barnes.hpp"
#include "voigt/oracle.hpp"

using namespace voigt;

TEST(HExistence, VoigtParameterSets) {
  const auto asc = h_existence(h_params_ascending());
  EXPECT_EQ(asc.mu, 0.5);
  EXPECT_EQ(asc.verdict, HVerdict::AllNonzeroZ);
  const auto desc = h_existence(h_params_descending());
  EXPECT_EQ(desc.mu, -0.5);
  EXPECT_EQ(desc.verdict, HVerdict::Invalid);
}

TEST(HExistence, MeijerReduction) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const auto h = HParams::meijer(std::min(1, q), 0, std::vector<complex>(p, 0.5),
                                     std::vector<complex>(q, 0.0));
      const auto e = h_existence(h);
      EXPECT_EQ(e.mu, double(q - p));
      EXPECT_EQ(e.beta, 1.0);
      EXPECT_EQ(e.verdict, q > p    ? HVerdict::AllNonzeroZ
                           : q == p ? HVerdict::DiskOnly
                                    : HVerdict::Invalid);
    }
}

TEST(HExistence, DiskOnlyRadius) {
  const auto e = h_existence(HParams::meijer(1, 1, {0.5}, {0.0}));
  EXPECT_TRUE(e.permits(0.5));
  EXPECT_FALSE(e.permits(1.5));
  EXPECT_FALSE(e.permits(0.0));
}

TEST(HExistence, StructureErrors) {
  HParams h = h_params_ascending();
  h.m = 2;
  EXPECT_THROW(h_existence(h), StructureError);
  h = h_params_ascending();
  h.lower.clear();
  EXPECT_THROW(h_existence(h), StructureError);
  h = h_params_ascending();
  h.upper[0].A = 0.0;
  EXPECT_THROW(h_existence(h), StructureError);
}

TEST(FoxH, TwoTermSumMatchesOracle) {
  const LineParams p(1, 1);
  EXPECT_LT(rel_err(voigt_fox_h(0.5, p).value, voigt_convolution(0.5, p).value), 1e-9);
}

TEST(FoxH, ConjugateSymmetry) {
  const complex z(2.0, 1.3);
  const auto h = h_params_ascending();
  EXPECT_LT(rel_err(h11_11_eval(std::conj(z), h).value, std::conj(h11_11_eval(z, h).value)), 1e-13);
}

TEST(FoxH, SameIntegralAsMellinBarnes) {
  const LineParams p(1.0, 0.8);
  for (double x : {0.0, 0.6, 2.2}) {
    const double h = voigt_fox_h(x, p).value;
    EXPECT_LT(rel_err(h, mb_conjugate_pair_eval(x, p, MBForm::AscendingKernel).value), 1e-11);
    EXPECT_LT(rel_err(h, mb_contour_eval(x, p, MBForm::AscendingKernel).value), 1e-11);
  }
}

TEST(FoxH, DescendingSetByRelabeling) {
  const LineParams p(1, 1);
  const complex z(2.0, 1.0);
  const auto out = h11_11_eval(1.0 / z, h_params_descending());
  EXPECT_TRUE(out.has(flag_relabeled));
  EXPECT_LT(rel_err(out.value, h11_11_eval(z, h_params_ascending()).value), 1e-13);
  EXPECT_LT(rel_err(voigt_fox_h_descending(0.5, p).value, voigt_fox_h(0.5, p).value), 1e-13);
}

TEST(FoxH, Errors) {
  const auto h = h_params_ascending();
  EXPECT_THROW(h11_11_eval(0.0, h), ExistenceError);
  EXPECT_THROW(h11_11_eval(1.0, h, {0.5, 0, 0}), ContourBandError);
  EXPECT_THROW(h11_11_eval(complex(-1.0, 0.01), h), ExistenceError);
  EXPECT_THROW(h11_11_eval(1.0 / complex(1.0, 1.0), h_params_descending(), {-0.5, 0, 0}),
               ContourBandError);
  // mu = 0 outside the unit disk
  EXPECT_THROW(h11_11_eval(2.0, HParams::meijer(1, 1, {0.5}, {0.0})), ExistenceError);
}

TEST(FoxH, DuplicationStep) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.05, 4.0), im(-4.0, 4.0);
  for (int i = 0; i < 10; ++i) {
    const complex z(re(rng), im(rng));
    const complex h = h11_11_eval(z, h_params_ascending()).value;
    const complex g = g21_12_eval(0.25 * z * z, 0.5, 0.0, 0.5).value;
    EXPECT_LT(rel_err(h, g * inv_sqrt_pi), 1e-10) << z;
  }
}

TEST(MeijerG, Frozen) {
  for (const auto& c : ref::meijer_g)
    EXPECT_LT(rel_err(g21_12_eval(c.z, 0.5, 0.0, 0.5).value, c.value), 1e-12) << c.z;
}

TEST(MeijerG, Identity) {
  EXPECT_LT(rel_err(g21_12_eval(1e-12, 0.5, 0, 0.5).value, complex(pi)), 1e-5);
  EXPECT_EQ(g21_12_eval(0.0, 0.5, 0, 0.5).value, complex(pi));
  EXPECT_LT(rel_err(g21_12_eval(1.0, 0.5, 0, 0.5).value, complex(pi * std::exp(1.0) * std::erfc(1.0))),
            1e-14);
}

TEST(MeijerG, ContourFallbackForLargeArgument) {
  const auto small = g21_12_eval(1.0, 0.5, 0, 0.5);
  EXPECT_FALSE(small.has(flag_contour_fallback));
  const auto large = g21_12_eval(25.0, 0.5, 0, 0.5);
  EXPECT_TRUE(large.has(flag_contour_fallback));
  EXPECT_LT(rel_err(large.value, complex(pi * std::exp(25.0) * std::erfc(5.0))), 1e-12);
}

TEST(MeijerG, Errors) {
  EXPECT_THROW(g21_12_eval(-2.0, 0.5, 0, 0.5), BranchCutError);
  EXPECT_THROW(g21_12_eval(1.0, 0.5, 0.5, 0.5), InvalidArgument);
}

TEST(MeijerG, FullComposition) {
  const LineParams p(1, 1);
  EXPECT_LT(rel_err(voigt_meijer_g(0.3, p).value, voigt_convolution(0.3, p).value), 1e-9);
}

TEST(Reductions, AllFormsAgreeAtOrigin) {
  const auto rep = reduction_identities_check(0.0, LineParams(1, 1));
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].values.size(), 5u);
  EXPECT_EQ(rep.rows[0].pairs.size(), 10u);
  for (const auto& v : rep.rows[0].values) {
    EXPECT_EQ(v.status, MethodStatus::Ok) << v.message;
    EXPECT_LT(rel_err(v.value, ref::voigt_origin_unit), 1e-12) << method_name(v.method);
  }
  EXPECT_LT(rep.summary.worst, 1e-9);
}

TEST(Reductions, UnitGaussianWidthRecoversKForms) {
  const LineParams p(1.0, 0.5);
  const double x = 0.8;
  const DimensionlessPoint pt{x, 0.5};
  EXPECT_LT(rel_err(voigt_whittaker(x, p).value, k_voigt(pt, Method::Whittaker).value * inv_sqrt_pi), 1e-12);
  EXPECT_LT(rel_err(voigt_erfc(x, p).value, k_voigt(pt, Method::Erfc).value * inv_sqrt_pi), 1e-12);
  EXPECT_LT(rel_err(voigt_parabolic(x, p).value,
                    k_voigt(pt, Method::ParabolicCylinder).value * inv_sqrt_pi),
            1e-12);
  EXPECT_LT(reduction_identities_check(x, p).summary.worst, 1e-9);
}

TEST(Reductions, WhittakerAndParabolicMatchErfc) {
  EXPECT_LT(rel_err(voigt_whittaker(0.3, LineParams(1, 1)).value, voigt_erfc(0.3, LineParams(1, 1)).value), 1e-11);
  EXPECT_LT(rel_err(voigt_parabolic(1.0, LineParams(1, 0.5)).value, voigt_erfc(1.0, LineParams(1, 0.5)).value), 1e-11);
}

TEST(Reductions, NeedLorentzWidth) {
  EXPECT_THROW(reduction_identities_check(0.5, LineParams(1.0, 0.0)), DomainError);
}
