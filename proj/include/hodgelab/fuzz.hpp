#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hodgelab/derhamring.hpp"
#include "hodgelab/gradedpoly.hpp"
#include "hodgelab/hodgering.hpp"
#include "hodgelab/parallel.hpp"

namespace hodgelab {

/// Randomized checks. Trial k draws from its own generator seeded with
/// (seed, k), so results do not depend on scheduling.
struct FuzzReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  ///< first few failures, by trial index

  bool passed() const { return failures == 0; }
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial);

/// Random polynomial with at most `terms` terms, exponents below max_exp and
/// coefficients in [-bound, bound].
Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int terms,
                             unsigned max_exp, long bound);
/// Random homogeneous element of degree n in Z[A,B,C,D].
Polynomial random_presentation(std::mt19937_64& rng, int n, int terms, long bound);
/// Element of H_n with representative coordinates in [-bound, bound].
HodgeDiamond random_diamond(std::mt19937_64& rng, int n, long bound);
DeRhamVector random_derham(std::mt19937_64& rng, int n, long bound);

/// phi(decompose(d)) == d and psi(decompose_DR(s(d))) == s(d) for `count`
/// random d in H_n.
FuzzReport round_trip_batch(int n, std::size_t count, std::uint64_t seed, long bound,
                            Execution ex = Execution::Parallel);

/// Ring laws of Z[x,y,z] and Z[A,B,C,D], homomorphism laws of phi, psi and
/// s, nf_mul associativity and compatibility, Kunneth laws; `count` trials
/// cycling through the law families.
FuzzReport algebraic_laws(std::size_t count, std::uint64_t seed,
                          Execution ex = Execution::Parallel);

}  // namespace hodgelab
