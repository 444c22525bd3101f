#pragma once

#include <cstdint>
#include <string>

#include "error.hpp"

namespace gcob {

// Exact integer arithmetic throughout; wide enough for p <= 97, n <= 8.
using Wide = unsigned __int128;

std::string wide_str(Wide v);

bool is_prime(std::int64_t n);

// Standard arithmetic functions.
std::int64_t tau(std::int64_t n);     // number of divisors
std::int64_t sigma(std::int64_t n);   // sum of divisors
std::int64_t jordan2(std::int64_t n); // J_2(n) = n^2 prod_{p|n} (1 - p^-2)

// Family values of the genus-one invariant.
std::int64_t r1_cyclic(std::int64_t n);               // tau(n)
std::int64_t r1_dihedral(std::int64_t n);             // of D_{2n}: n+tau(n), +n/2 if n even
std::int64_t r1_dicyclic(std::int64_t n);             // of Dic_n: tau(2n)+n
Wide r1_elementary_abelian(std::int64_t p, std::int64_t n);

// First difference r1(Z_p^{n+1}) - r1(Z_p^n); F(0) = 1.
Wide f_recurrence(std::int64_t p, std::int64_t n);

// Subgroup totals of the two families.
std::int64_t subgroup_count_dihedral(std::int64_t n);  // tau(n) + sigma(n)
std::int64_t subgroup_count_dicyclic(std::int64_t n);  // tau(2n) + sigma(n)

}  // namespace gcob
