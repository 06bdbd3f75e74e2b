// Prints the lowest LiH levels, checks one against the numerical EQR
// solution and the Numerov oracle, and shows a degeneracy pair.

#include <cstdio>

#include "kratzer/kratzer.hpp"

int main() {
  using namespace kratzer;
  const auto registry = builtin_registry();
  const MoleculeRecord& lih = *find_molecule(registry, "LiH", MoleculeSource::table1);
  const PotentialSpec spec = lih.potential(PotentialKind::kratzer);

  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l)
      std::printf("n=%d l=%d  E=%.12g eV\n", n, l, energy_level(spec, lih.mu, {n, l, 3}).energy);

  const QuantumState s{1, 1, 3};
  std::printf("closed %.12g  eqr %.12g  numerov %.12g\n", energy_level(spec, lih.mu, s).energy,
              solve_energy_eqr(spec, lih.mu, s.M(), s.n), solve_numerov(spec, lih.mu, s.M(), s.n));

  const double e2 = energy_level(spec, lih.mu, {0, 1, 2}).energy;
  const double e4 = energy_level(spec, lih.mu, {0, 0, 4}).energy;
  std::printf("E(0,1,D=2) = %.12g, E(0,0,D=4) = %.12g, identical: %s\n", e2, e4, e2 == e4 ? "yes" : "no");
  return 0;
}
