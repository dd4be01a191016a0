#include <Eigen/Core>
#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "ptqm/algebra.hpp"
#include "ptqm/error.hpp"
#include "ptqm/hamiltonian.hpp"

using namespace ptqm;
using namespace ptqm::testing;

namespace {

CMat2 eigen_expm(const CMat2& m) {
  Eigen::Matrix2cd a;
  a << m.m00, m.m01, m.m10, m.m11;
  const Eigen::Matrix2cd e = a.exp();
  return {e(0, 0), e(0, 1), e(1, 0), e(1, 1)};
}

}  // namespace

TEST(Pauli, MatricesAsPrinted) {
  EXPECT_EQ(sigma1(), (CMat2{0.0, 1.0, 1.0, 0.0}));
  EXPECT_EQ(sigma2(), (CMat2{0.0, -kI, kI, 0.0}));
  EXPECT_EQ(sigma3(), (CMat2{1.0, 0.0, 0.0, -1.0}));
  EXPECT_MAT_NEAR(sigma1() * sigma2(), kI * sigma3(), 0.0);
}

TEST(Pauli, Compose) {
  EXPECT_EQ(pauli_compose({0.0, 1.0, 0.0, 0.0}), sigma1());
  EXPECT_EQ(pauli_compose({1.0, 0.0, 0.0, 0.0}), CMat2::identity());
  EXPECT_EQ(pauli_compose({0.0, 0.0, 0.0, kI}), (CMat2{kI, 0.0, 0.0, -kI}));
}

TEST(Pauli, Decompose) {
  const PauliDecomp s1 = pauli_decompose(sigma1());
  EXPECT_CNEAR(s1.c0, 0.0, 0.0);
  EXPECT_CNEAR(s1.cx, 1.0, 0.0);
  EXPECT_CNEAR(s1.cy, 0.0, 0.0);
  EXPECT_CNEAR(s1.cz, 0.0, 0.0);

  const PauliDecomp h = pauli_decompose(build_pt_matrix({1.0, 2.0, kPi / 6}));
  EXPECT_CNEAR(h.c0, std::cos(kPi / 6), 1e-15);
  EXPECT_CNEAR(h.cx, 2.0, 1e-15);
  EXPECT_CNEAR(h.cy, 0.0, 1e-15);
  EXPECT_CNEAR(h.cz, kI * std::sin(kPi / 6), 1e-15);

  const PauliDecomp id = pauli_decompose(CMat2::identity());
  EXPECT_CNEAR(id.c0, 1.0, 0.0);
  EXPECT_CNEAR(id.cz, 0.0, 0.0);
}

TEST(Pauli, RoundTripProperty) {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const CMat2 m = rng.mat(2.0);
    EXPECT_MAT_NEAR(pauli_compose(pauli_decompose(m)), m, 1e-14);
  }
}

TEST(MatExpOracle, ZeroIsIdentity) {
  EXPECT_EQ(mat_exp_oracle(CMat2::zero()), CMat2::identity());
}

TEST(MatExpOracle, PauliRotation) {
  // exp(-i pi/2 sigma1) = cos(pi/2) I - i sin(pi/2) sigma1
  const CMat2 e = mat_exp_oracle(CScalar{0.0, -kPi / 2} * sigma1());
  EXPECT_MAT_NEAR(e, (CMat2{0.0, -kI, -kI, 0.0}), 1e-14);
}

TEST(MatExpOracle, Diagonal) {
  const CMat2 e = mat_exp_oracle({std::log(2.0), 0.0, 0.0, 0.0});
  EXPECT_MAT_NEAR(e, (CMat2{2.0, 0.0, 0.0, 1.0}), 1e-13);
}

TEST(MatExpOracle, InverseProperty) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    // entry magnitudes <= 2
    const CMat2 a = rng.mat(std::sqrt(2.0));
    EXPECT_MAT_NEAR(mat_exp_oracle(a) * mat_exp_oracle(-1.0 * a), CMat2::identity(), 1e-10);
  }
}

TEST(MatExpOracle, GroupLawOnDiagonal) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const CMat2 d{rng.complex(1.0), 0.0, 0.0, rng.complex(1.0)};
    const double a = rng.uniform(-1.5, 1.5), b = rng.uniform(-1.5, 1.5);
    EXPECT_MAT_NEAR(mat_exp_oracle(a * d) * mat_exp_oracle(b * d), mat_exp_oracle((a + b) * d),
                    1e-10);
  }
}

TEST(MatExpOracle, AgreesWithPadeImplementation) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const CMat2 a = rng.mat(3.0);
    const CMat2 ref = eigen_expm(a);
    EXPECT_LE(mat_diff(mat_exp_oracle(a), ref), 1e-12 * std::max(1.0, max_abs(ref)));
  }
}

TEST(MatExpOracle, Errors) {
  try {
    mat_exp_oracle(CMat2::identity(), 0.0);
    FAIL() << "expected DomainError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    mat_exp_oracle({nan, 0.0, 0.0, 0.0});
    FAIL() << "expected NonFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
  }
  try {
    mat_exp_oracle({1000.0, 0.0, 0.0, 0.0});
    FAIL() << "expected NonFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
  }
}

TEST(Kernel, OuterTransposeHasNoConjugation) {
  const CVec2 u{kI, 1.0};
  const CMat2 o = outer_t(u, u);
  EXPECT_CNEAR(o.m00, -1.0, 0.0);
  EXPECT_CNEAR(o.m01, kI, 0.0);
  EXPECT_CNEAR(det(o), 0.0, 0.0);
}
