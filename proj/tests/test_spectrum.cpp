#include <qhit/complete_graph.hpp>
#include <qhit/dense.hpp>
#include <qhit/spectrum.hpp>
#include <qhit/walk_sim.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace qhit;

namespace {

struct Fixture {
  MarkovChain chain;
  AbsorbingChain absorbing;
  WalkOperators ops;
  WalkSpectrum spec;

  Fixture(int n, int m)
      : chain(mark_last(complete_graph(n), m)),
        absorbing(absorb(chain)),
        ops(absorbing),
        spec(svd_discriminant(discriminant(absorbing))) {}
};

}  // namespace

TEST(SvdDiscriminant, HundredTwentyOne) {
  const Fixture f(100, 21);
  ASSERT_EQ(f.spec.triples.size(), 100u);
  EXPECT_EQ(f.spec.k, 21);
  for (int j = 0; j < 21; ++j) EXPECT_NEAR(f.spec.triples[j].lambda, 1.0, 1e-12);
  EXPECT_NEAR(f.spec.triples[21].lambda, 78.0 / 99.0, 1e-12);
  for (int j = 22; j < 100; ++j) EXPECT_NEAR(f.spec.triples[j].lambda, 1.0 / 99.0, 1e-12);
}

TEST(SvdDiscriminant, FourOneMatchesDenseSvd) {
  // frozen from numpy.linalg.svd of the 4x4 discriminant
  const Fixture f(4, 1);
  const double expected[] = {1.0, 2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(f.spec.triples[j].lambda, expected[j], 1e-12);
  EXPECT_EQ(f.spec.k, 1);
}

TEST(SvdDiscriminant, UnmarkedHasUniformPerronVector) {
  const Fixture f(9, 0);
  ASSERT_GE(f.spec.k, 1);
  const Vector u = Vector::Constant(9, 1.0 / 3.0);
  EXPECT_LT((f.spec.triples[0].nu - u).norm(), 1e-12);
  EXPECT_LT((f.spec.triples[0].mu - u).norm(), 1e-12);
}

TEST(SvdDiscriminant, TriplesSatisfySingularEquations) {
  for (int n = 2; n <= 20; ++n)
    for (int m = 0; m < n; ++m) {
      const Fixture f(n, m);
      const Matrix C = discriminant(f.absorbing).C;
      for (const auto& t : f.spec.triples) {
        EXPECT_LT((C * t.nu - t.lambda * t.mu).norm(), 1e-10);
        EXPECT_LT((C.transpose() * t.mu - t.lambda * t.nu).norm(), 1e-10);
        EXPECT_GE(t.lambda, 0.0);
        EXPECT_LE(t.lambda, 1.0);
        EXPECT_NEAR(std::cos(t.theta), t.lambda, 1e-15);
      }
    }
}

TEST(SvdDiscriminant, NegativeEigenvalueFlipsLeftVector) {
  const Fixture f(6, 1);
  // lambda = 1/5 triples come from eigenvalue -1/5 of P_M
  for (int j = f.spec.k + 1; j < 6; ++j) EXPECT_LT((f.spec.triples[j].mu + f.spec.triples[j].nu).norm(), 1e-12);
}

TEST(SvdDiscriminant, GenericRouteAgreesOnSingularValues) {
  for (int n : {3, 8, 15})
    for (int m = 0; m < n; ++m) {
      const Discriminant d = discriminant(absorb(mark_last(complete_graph(n), m)));
      const WalkSpectrum herm = svd_discriminant(d, 1e-9, SvdRoute::hermitian);
      const WalkSpectrum gen = svd_discriminant(d, 1e-9, SvdRoute::generic);
      EXPECT_EQ(herm.k, gen.k);
      for (int j = 0; j < n; ++j) {
        EXPECT_NEAR(herm.triples[j].lambda, gen.triples[j].lambda, 1e-12);
        EXPECT_LT((d.C * gen.triples[j].nu - gen.triples[j].lambda * gen.triples[j].mu).norm(), 1e-10);
      }
    }
}

TEST(SvdDiscriminant, OvershootIsNumericError) {
  Discriminant d{Matrix::Identity(3, 3) * 1.1};
  try {
    svd_discriminant(d);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::numeric);
  }
  Discriminant nonsym{(Matrix(2, 2) << 0.5, 0.1, 0.0, 0.5).finished()};
  EXPECT_THROW(svd_discriminant(nonsym, 1e-9, SvdRoute::hermitian), error);
  EXPECT_NO_THROW(svd_discriminant(nonsym));
}

TEST(WalkEigenpairs, RotationalPairsAreEigenvectors) {
  const Fixture f(100, 21);
  const WalkEigenpairs pairs = walk_eigenpairs(f.ops, f.spec);
  EXPECT_EQ(pairs.fixed.size(), 21u);
  ASSERT_EQ(pairs.rotational.size(), 79u);
  const RotationalPair& top = pairs.rotational.front();
  EXPECT_NEAR(std::cos(top.theta), 78.0 / 99.0, 1e-12);
  for (const auto& p : {pairs.rotational.front(), pairs.rotational.back()}) {
    EXPECT_NEAR(p.plus.norm(), 1.0, 1e-10);
    EXPECT_NEAR(p.minus.norm(), 1.0, 1e-10);
    EXPECT_LT((f.ops.evolve_step(p.plus) - p.eigenvalue_plus() * p.plus).norm(), 1e-9);
    EXPECT_LT((f.ops.evolve_step(p.minus) - p.eigenvalue_minus() * p.minus).norm(), 1e-9);
  }
}

TEST(WalkEigenpairs, MarkedBasisVectorsAreFixed) {
  const Fixture f(100, 21);
  for (int j = 80; j <= 100; ++j) {
    CVector e = CVector::Zero(100);
    e(j - 1) = 1.0;
    const CVector a = f.ops.apply_A(e);
    EXPECT_LT((f.ops.evolve_step(a) - a).norm(), 1e-12);
  }
}

TEST(WalkEigenpairs, DenseResidualFourOne) {
  const Fixture f(4, 1);
  const Matrix U = test::dense_walk(test::absorbing_complete_graph(4, 1));
  for (const auto& p : walk_eigenpairs(f.ops, f.spec).rotational) {
    EXPECT_LT((U.cast<Complex>() * p.plus - p.eigenvalue_plus() * p.plus).norm(), 1e-10);
    EXPECT_LT((U.cast<Complex>() * p.minus - p.eigenvalue_minus() * p.minus).norm(), 1e-10);
  }
}

TEST(WalkEigenpairs, MutuallyOrthonormal) {
  for (int n : {3, 5, 8})
    for (int m = 0; m < n; ++m) {
      const Fixture f(n, m);
      const WalkEigenpairs pairs = walk_eigenpairs(f.ops, f.spec);
      std::vector<CVector> all;
      for (const auto& p : pairs.rotational) {
        all.push_back(p.plus);
        all.push_back(p.minus);
      }
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
          EXPECT_NEAR(std::abs(all[i].dot(all[j])), i == j ? 1.0 : 0.0, 1e-9) << n << "," << m;
    }
}

TEST(WalkEigenpairs, DegenerateAngleWhenUnitValueNotFlagged) {
  const Fixture f(5, 2);
  WalkSpectrum strict = f.spec;
  // unit singular value treated as rotational
  strict.k = 0;
  strict.triples[0].theta = 0.0;
  try {
    walk_eigenpairs(f.ops, strict);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_angle);
  }
}

TEST(DenseSpectrum, MissingEigenvaluesAreOne) {
  for (int n = 2; n <= 10; ++n)
    for (int m = 0; m < n; ++m) {
      const Fixture f(n, m);
      std::vector<Complex> expected;
      for (int j = f.spec.k; j < n; ++j) {
        expected.push_back(std::polar(1.0, 2.0 * f.spec.triples[j].theta));
        expected.push_back(std::polar(1.0, -2.0 * f.spec.triples[j].theta));
      }
      const auto match = dense::match_eigenvalues(dense::U(f.absorbing), expected);
      EXPECT_LT(match.max_expected_error, 1e-8);
      EXPECT_LT(match.max_unit_error, 1e-8);
      EXPECT_EQ(match.unmatched, n * n - 2 * (n - f.spec.k));
    }
}

TEST(OverlapCoefficients, CompleteGraphStructure) {
  const Fixture f(100, 21);
  const OverlapTable table = overlap_coefficients(f.ops, f.spec, initial_state(f.chain));
  ASSERT_EQ(table.rotational.size(), 79u);
  const cg::CGParams p = cg::CGParams::make(100, 21);
  const auto& top = table.rotational.front();
  EXPECT_LT(std::abs(top.plus - cg::closed_coefficient(p, +1)), 1e-10);
  EXPECT_LT(std::abs(top.minus - cg::closed_coefficient(p, -1)), 1e-10);
  EXPECT_NEAR(std::norm(top.plus), std::norm(top.minus), 1e-12);
  for (std::size_t j = 1; j < table.rotational.size(); ++j) {
    EXPECT_LT(std::abs(table.rotational[j].plus), 1e-10);
    EXPECT_LT(std::abs(table.rotational[j].minus), 1e-10);
  }
}

TEST(OverlapCoefficients, MatchMaterialisedInnerProducts) {
  const Fixture f(7, 2);
  const WalkState psi0 = initial_state(f.chain);
  const OverlapTable table = overlap_coefficients(f.ops, f.spec, psi0);
  const WalkEigenpairs pairs = walk_eigenpairs(f.ops, f.spec);
  ASSERT_EQ(table.rotational.size(), pairs.rotational.size());
  for (std::size_t j = 0; j < pairs.rotational.size(); ++j) {
    EXPECT_LT(std::abs(table.rotational[j].plus - pairs.rotational[j].plus.dot(psi0.amps())), 1e-12);
    EXPECT_LT(std::abs(table.rotational[j].minus - pairs.rotational[j].minus.dot(psi0.amps())), 1e-12);
  }
}

TEST(OverlapCoefficients, CompletenessWithEigenvalueOneResidual) {
  for (int n = 2; n <= 25; ++n)
    for (int m = 0; m < n; ++m) {
      const Fixture f(n, m);
      const WalkState psi0 = initial_state(f.chain);
      const OverlapTable table = overlap_coefficients(f.ops, f.spec, psi0);
      const WalkState psi1 = eigenvalue_one_component(f.ops, f.spec, table, psi0);
      EXPECT_NEAR(table.total_weight() + psi1.amps().squaredNorm(), 1.0, 1e-10) << n << "," << m;
      for (const auto& c : table.rotational) EXPECT_NEAR(std::norm(c.plus), std::norm(c.minus), 1e-12);
    }
}

TEST(EigenvalueOneComponent, UnmarkedIsInitialState) {
  const Fixture f(12, 0);
  const WalkState psi0 = initial_state(f.chain);
  const OverlapTable table = overlap_coefficients(f.ops, f.spec, psi0);
  EXPECT_LT((eigenvalue_one_component(f.ops, f.spec, table, psi0).amps() - psi0.amps()).norm(), 1e-12);
}

TEST(EigenvalueOneComponent, InvariantUnderDenseU) {
  const Fixture f(4, 1);
  const WalkState psi0 = initial_state(f.chain);
  const WalkState psi1 = eigenvalue_one_component(f.ops, f.spec, overlap_coefficients(f.ops, f.spec, psi0), psi0);
  const Matrix U = test::dense_walk(test::absorbing_complete_graph(4, 1));
  EXPECT_LT((U.cast<Complex>() * psi1.amps() - psi1.amps()).norm(), 1e-10);
}

TEST(EigenvalueOneComponent, MatchesThreeBlockForm) {
  const Fixture f(100, 21);
  const WalkState psi0 = initial_state(f.chain);
  const WalkState psi1 = eigenvalue_one_component(f.ops, f.spec, overlap_coefficients(f.ops, f.spec, psi0), psi0);
  const WalkState closed = cg::eigen1_component_closed(cg::CGParams::make(100, 21));
  EXPECT_LT((psi1.amps() - closed.amps()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT((f.ops.evolve_step(psi1.amps()) - psi1.amps()).norm(), 1e-9);
}
