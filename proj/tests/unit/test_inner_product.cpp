#include "oracles.hpp"
#include "ptqm/error.hpp"
#include "ptqm/grid.hpp"
#include "ptqm/inner_product.hpp"

using namespace ptqm;
using namespace ptqm::testing;

namespace {

constexpr CVec2 kNu1{1.0, 0.0};
constexpr CVec2 kNu2{0.0, 1.0};

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ptqm::Error thrown";
  return ErrorKind::NonFinite;
}

}  // namespace

TEST(Dirac, Examples) {
  EXPECT_CNEAR(dirac_product(kNu1, kNu2), 0.0, 0.0);
  EXPECT_CNEAR(dirac_product(kNu1, kNu1), 1.0, 0.0);
  const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(params_for_alpha(kPi / 6, 1.0)));
  EXPECT_GT(std::abs(dirac_product(ep, em)), 0.1);
}

TEST(PT, IndefiniteNormPattern) {
  for (const PTParams& p : standard_pt_grid()) {
    const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(p));
    const CMat2 P = parity_matrix();
    EXPECT_CNEAR(pt_product(ep, ep, P), 1.0, 1e-12);
    EXPECT_CNEAR(pt_product(em, em, P), -1.0, 1e-12);
    EXPECT_CNEAR(pt_product(ep, em, P), 0.0, 1e-12);
    EXPECT_CNEAR(pt_product(em, ep, P), 0.0, 1e-12);
  }
}

TEST(CPT, Orthonormality) {
  for (const PTParams& p : standard_pt_grid()) {
    const OperatorSet ops = make_operator_set(p);
    const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(p));
    EXPECT_CNEAR(cpt_product(ep, ep, ops), 1.0, 1e-12);
    EXPECT_CNEAR(cpt_product(em, em, ops), 1.0, 1e-12);
    EXPECT_CNEAR(cpt_product(ep, em, ops), 0.0, 1e-12);
    EXPECT_CNEAR(cpt_product(em, ep, ops), 0.0, 1e-12);
  }
}

TEST(CPT, BasisStatesOverlap) {
  for (const PTParams& p : standard_pt_grid()) {
    const OperatorSet ops = make_operator_set(p);
    const double a = ops.alpha;
    const CScalar z = cpt_product(kNu2, kNu1, ops);
    EXPECT_NEAR(std::abs(z), std::abs(std::tan(a)), 1e-12);
    EXPECT_NEAR(z.real(), 0.0, 1e-15);
    // with C P conj applied to the first argument the value is +i tan(alpha)
    EXPECT_CNEAR(z, kI * std::tan(a), 1e-12);
    EXPECT_CNEAR(cpt_product(kNu1, kNu1, ops), 1.0 / std::cos(a), 1e-12);
  }
}

TEST(CPT, PositiveDefiniteProperty) {
  Rng rng(30);
  const auto grid = standard_pt_grid();
  for (int i = 0; i < 500; ++i) {
    const OperatorSet ops = make_operator_set(grid[i % grid.size()]);
    const CVec2 v = rng.vec(2.0);
    const CScalar n = cpt_product(v, v, ops);
    EXPECT_GT(n.real(), 0.0);
    EXPECT_LT(std::abs(n.imag()), 1e-10);
  }
}

TEST(Pairings, CoincideInHermitianLimit) {
  const PTParams p{1.0, 2.0, 0.0};
  const OperatorSet ops = make_operator_set(p);
  ASSERT_EQ(ops.alpha, 0.0);
  const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(p));
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const CVec2 u = rng.uniform(-1, 1) * ep + rng.uniform(-1, 1) * em;
    const CVec2 v = rng.uniform(-1, 1) * ep + rng.uniform(-1, 1) * em;
    const CScalar d = dirac_product(u, v);
    EXPECT_CNEAR(cpt_product(u, v, ops), d, 1e-12);
    // P alone, without C
    const OperatorSet p_only{ops.P, CMat2::identity(), 0.0, {}};
    EXPECT_CNEAR(cpt_product(u, v, p_only), pt_product(u, v, ops.P), 1e-15);
  }
}

TEST(Pairings, LinearInSecondArgument) {
  Rng rng(32);
  const OperatorSet ops = make_operator_set({1.0, 2.0, kPi / 3});
  for (int i = 0; i < 100; ++i) {
    const CVec2 u = rng.vec(1.0), v = rng.vec(1.0);
    const CScalar lambda = rng.complex(2.0);
    for (PairingKind k : {PairingKind::Dirac, PairingKind::PT, PairingKind::CPT}) {
      EXPECT_CNEAR(pairing(u, lambda * v, ops, k), lambda * pairing(u, v, ops, k), 1e-12);
    }
    // first argument: conjugate-linear for every kind
    EXPECT_CNEAR(dirac_product(lambda * u, v), std::conj(lambda) * dirac_product(u, v), 1e-12);
    EXPECT_CNEAR(cpt_product(lambda * u, v, ops), std::conj(lambda) * cpt_product(u, v, ops),
                 1e-12);
  }
}

TEST(CptNormalize, Examples) {
  const double a = 0.6;
  const OperatorSet ops = make_operator_set(params_for_alpha(a, 1.0));
  EXPECT_VEC_NEAR(cpt_normalize(kNu1, ops), std::sqrt(std::cos(a)) * kNu1, 1e-14);

  const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(params_for_alpha(a, 1.0)));
  EXPECT_VEC_NEAR(cpt_normalize(ep, ops), ep, 1e-12);

  const OperatorSet herm = make_operator_set({1.0, 1.0, 0.0});
  EXPECT_VEC_NEAR(cpt_normalize(kNu2, herm), kNu2, 1e-15);

  Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    const CVec2 n = cpt_normalize(rng.vec(3.0), ops);
    EXPECT_CNEAR(cpt_product(n, n, ops), 1.0, 1e-12);
  }
  EXPECT_EQ(kind_of([&] { cpt_normalize({0.0, 0.0}, ops); }), ErrorKind::ZeroOrNegativeNorm);
}

TEST(AngularDistance, Examples) {
  for (double a : {-1.2, -0.5, 0.0, 0.3, 1.1}) {
    const OperatorSet ops = make_operator_set(params_for_alpha(a, 1.0));
    const CVec2 n1 = cpt_normalize(kNu1, ops), n2 = cpt_normalize(kNu2, ops);
    EXPECT_NEAR(angular_distance(n1, n2, ops, PairingKind::CPT), std::acos(std::abs(std::sin(a))),
                1e-12);
    EXPECT_NEAR(angular_distance(n1, n1, ops, PairingKind::CPT), 0.0, 1e-7);
  }
  EXPECT_NEAR(angular_distance(kNu1, kNu2), kPi / 2, 0.0);
  const CVec2 u{std::sqrt(0.5), kI * std::sqrt(0.5)};
  EXPECT_EQ(angular_distance(u, u), 0.0);
}

TEST(AngularDistance, RejectsUnnormalized) {
  const OperatorSet ops = make_operator_set({1.0, 2.0, kPi / 6});
  EXPECT_EQ(kind_of([&] { angular_distance(kNu1, kNu2, ops, PairingKind::CPT); }),
            ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of([] { angular_distance(CVec2{2.0, 0.0}, kNu2); }), ErrorKind::NotNormalized);
}
