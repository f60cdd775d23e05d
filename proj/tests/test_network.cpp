#include <algorithm>
#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "qnet/errors.hpp"
#include "qnet/network.hpp"
#include "test_support.hpp"

namespace qnet {
namespace {

using testing::naive_mul;

const Complex kI(0.0, 1.0);

ComplexMatrix op_on(const ComplexMatrix& op, std::size_t site, std::size_t n) { return embed_single(op, site, n); }

NetworkSpec spec_of(std::string_view topo, CouplingKind sys, double omega0, CouplingKind anc, double omega,
                    std::size_t target) {
  return NetworkSpec{preset_topology(topo), sys, omega0, anc, omega, target};
}

// Permutation operator sending qubit i to position perm[i] on an n-qubit register.
ComplexMatrix permutation_operator(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix p(dim);
  for (std::size_t in = 0; in < dim; ++in) {
    std::size_t out = 0;
    for (std::size_t q = 0; q < n; ++q)
      if ((in >> (n - 1 - q)) & 1U) out |= std::size_t{1} << (n - 1 - perm[q]);
    p(out, in) = 1.0;
  }
  return p;
}

TEST(Topology, Presets) {
  EXPECT_EQ(preset_topology("linear3").rows(), (std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  const auto tri = preset_topology("triangle3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(tri.coupled(i, j), i != j);
  EXPECT_THROW(preset_topology("square4"), DomainError);
}

TEST(Topology, RejectsInvalidAdjacency) {
  EXPECT_THROW(Topology({{0, 1}, {0, 0}}), DomainError);        // asymmetric
  EXPECT_THROW(Topology({{1, 0}, {0, 0}}), DomainError);        // self loop
  EXPECT_THROW(Topology({{0, 2}, {2, 0}}), DomainError);        // not 0/1
  EXPECT_THROW(Topology({{0, 1, 0}, {1, 0}}), DomainError);     // ragged
  EXPECT_THROW(Topology(std::vector<std::vector<int>>{}), DomainError);
}

TEST(PairTerm, XXFlipsBoth) {
  const auto h = pair_term(CouplingKind::XX, 0, 1, 2);
  for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(h(r, 0), r == 3 ? Complex{1.0} : Complex{});
}

TEST(PairTerm, ZZIsDiagonal) {
  const std::vector<Complex> d{1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(pair_term(CouplingKind::ZZ, 0, 1, 2), ComplexMatrix::diagonal(d));
}

TEST(PairTerm, ExchangeLadderAction) {
  const auto h = pair_term(CouplingKind::Exchange, 0, 1, 2);
  // |01> -> |10>/2, |00> -> 0
  for (std::size_t r = 0; r < 4; ++r) {
    EXPECT_EQ(h(r, 1), r == 2 ? Complex{0.5} : Complex{});
    EXPECT_EQ(h(r, 0), Complex{});
  }
}

TEST(PairTerm, HermitianAndErrors) {
  for (auto kind : {CouplingKind::XX, CouplingKind::ZZ, CouplingKind::Exchange}) {
    EXPECT_TRUE(pair_term(kind, 2, 0, 4).is_hermitian(1e-12));
    EXPECT_THROW(pair_term(kind, 1, 1, 3), DomainError);
    EXPECT_THROW(pair_term(kind, 0, 3, 3), DomainError);
  }
}

TEST(PairTerm, ExchangeConservesTotalZ) {
  const std::size_t n = 4;
  ComplexMatrix total_z(16);
  for (std::size_t q = 0; q < n; ++q) total_z += op_on(pauli::z(), q, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto h = pair_term(CouplingKind::Exchange, i, j, n);
      EXPECT_LT(naive_mul(h, total_z).max_abs_diff(naive_mul(total_z, h)), 1e-12);
    }
}

TEST(SystemHamiltonian, TriangleXX) {
  const auto spec = spec_of("triangle3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0);
  const auto x = pauli::x();
  const auto expected = naive_mul(op_on(x, 0, 3), op_on(x, 1, 3)) + naive_mul(op_on(x, 1, 3), op_on(x, 2, 3)) +
                        naive_mul(op_on(x, 2, 3), op_on(x, 0, 3));
  EXPECT_LT(build_system_hamiltonian(spec, 3, 0).max_abs_diff(expected), 1e-15);
}

TEST(SystemHamiltonian, LinearXXAndZeroCoupling) {
  auto spec = spec_of("linear3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0);
  const auto x = pauli::x();
  const auto expected = naive_mul(op_on(x, 0, 3), op_on(x, 1, 3)) + naive_mul(op_on(x, 1, 3), op_on(x, 2, 3));
  EXPECT_LT(build_system_hamiltonian(spec, 3, 0).max_abs_diff(expected), 1e-15);

  spec.omega0 = 0.0;
  EXPECT_EQ(build_system_hamiltonian(spec, 3, 0), ComplexMatrix(8));
  EXPECT_THROW(build_system_hamiltonian(spec, 3, 1), DomainError);
}

TEST(SystemHamiltonian, CovariantUnderRelabeling) {
  const std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  for (auto kind : {CouplingKind::XX, CouplingKind::ZZ, CouplingKind::Exchange}) {
    const auto spec = spec_of("linear3", kind, 1.3, CouplingKind::ZZ, 0.0, 0);
    const auto h = build_system_hamiltonian(spec, 3, 0);
    for (const auto& perm : perms) {
      std::vector<std::vector<int>> rows(3, std::vector<int>(3, 0));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rows[perm[i]][perm[j]] = spec.topology.rows()[i][j];
      auto permuted = spec;
      permuted.topology = Topology(rows);
      const auto p = permutation_operator(perm);
      const auto conjugated = naive_mul(naive_mul(p, h), testing::naive_adjoint(p));
      EXPECT_LT(conjugated.max_abs_diff(build_system_hamiltonian(permuted, 3, 0)), 1e-12);
    }
  }
}

TEST(InteractionHamiltonian, ZZAndXXOnTargetA) {
  auto spec = spec_of("triangle3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0);
  auto expected = naive_mul(op_on(pauli::z(), 0, 4), op_on(pauli::z(), 1, 4));
  expected *= Complex{5.0};
  EXPECT_LT(build_interaction_hamiltonian(spec, 4, kAncillaIndex, kNetworkOffset).max_abs_diff(expected), 1e-15);

  spec.ancilla_coupling = CouplingKind::XX;
  expected = naive_mul(op_on(pauli::x(), 0, 4), op_on(pauli::x(), 1, 4));
  expected *= Complex{5.0};
  EXPECT_LT(build_interaction_hamiltonian(spec, 4, kAncillaIndex, kNetworkOffset).max_abs_diff(expected), 1e-15);

  spec.omega = 0.0;
  EXPECT_EQ(build_interaction_hamiltonian(spec, 4, kAncillaIndex, kNetworkOffset), ComplexMatrix(16));
  EXPECT_THROW(build_interaction_hamiltonian(spec, 4, 2, kNetworkOffset), DomainError);  // overlaps network
}

TEST(Propagator, ShortTimeExpansion) {
  const auto spec = spec_of("triangle3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0);
  const double dt = 1e-6;
  const auto h = build_total_hamiltonian(spec);
  double frob = 0.0;
  for (const auto& z : h.data()) frob += std::norm(z);
  frob = std::sqrt(frob);
  const auto u = build_propagator(spec, dt);
  EXPECT_LE(u.max_abs_diff(ComplexMatrix::identity(16)), frob * dt + frob * frob * dt * dt);
}

TEST(Propagator, UnitaryAndDimension) {
  const auto spec = spec_of("triangle3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0);
  const auto u = build_propagator(spec, 0.4);
  EXPECT_EQ(u.dim(), 16U);
  EXPECT_LT(naive_mul(u, testing::naive_adjoint(u)).max_abs_diff(ComplexMatrix::identity(16)), 1e-9);
  EXPECT_THROW(build_propagator(spec, 0.0), DomainError);
  EXPECT_THROW(build_propagator(spec, -1.0), DomainError);
}

TEST(Propagator, ZZOnlyIsDiagonalPhases) {
  const double omega = 5.0;
  const double dt = 0.4;
  const auto spec = spec_of("linear3", CouplingKind::XX, 0.0, CouplingKind::ZZ, omega, 0);
  const auto u = build_propagator(spec, dt);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      if (r != c) {
        EXPECT_NEAR(std::abs(u(r, c)), 0.0, 1e-12);
        continue;
      }
      const double s_anc = ((r >> 3) & 1U) ? -1.0 : 1.0;
      const double s_a = ((r >> 2) & 1U) ? -1.0 : 1.0;
      EXPECT_NEAR(std::abs(u(r, r) - std::exp(-kI * omega * dt * s_anc * s_a)), 0.0, 1e-12);
    }
}

TEST(TotalHamiltonian, HermitianForEveryCombination) {
  for (auto sys : {CouplingKind::XX, CouplingKind::ZZ, CouplingKind::Exchange})
    for (auto anc : {CouplingKind::XX, CouplingKind::ZZ, CouplingKind::Exchange})
      for (std::size_t target = 0; target < 3; ++target) {
        EXPECT_TRUE(build_total_hamiltonian(spec_of("triangle3", sys, 1.0, anc, 5.0, target)).is_hermitian(1e-12));
      }
}

TEST(TotalHamiltonian, ChainEndSwapMapsAncillaAtAOntoAncillaAtC) {
  const auto at_a = build_total_hamiltonian(spec_of("linear3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 0));
  const auto at_c = build_total_hamiltonian(spec_of("linear3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 2));
  const auto swap = permutation_operator({0, 3, 2, 1});  // ancilla fixed, A <-> C
  EXPECT_LT(naive_mul(naive_mul(swap, at_a), swap).max_abs_diff(at_c), 1e-12);
}

TEST(NetworkSpec, ValidatesTargetAndStrengths) {
  auto spec = spec_of("linear3", CouplingKind::XX, 1.0, CouplingKind::ZZ, 5.0, 3);
  EXPECT_THROW(spec.validate(), DomainError);
  spec.target = 0;
  spec.omega = -1.0;
  EXPECT_THROW(spec.validate(), DomainError);
  EXPECT_THROW(parse_coupling("xy"), DomainError);
}

TEST(Network, GeneralSizeEngine) {
  // A 5-qubit ring plus ancilla builds and stays unitary.
  std::vector<std::vector<int>> rows(5, std::vector<int>(5, 0));
  for (std::size_t i = 0; i < 5; ++i) rows[i][(i + 1) % 5] = rows[(i + 1) % 5][i] = 1;
  const NetworkSpec spec{Topology(rows), CouplingKind::Exchange, 1.0, CouplingKind::XX, 3.0, 2};
  const auto u = build_propagator(spec, 0.3);
  EXPECT_EQ(u.dim(), 64U);
  EXPECT_TRUE(u.is_unitary(1e-9));
}

}  // namespace
}  // namespace qnet
