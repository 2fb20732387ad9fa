#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "braidhom/perm_group.hpp"

namespace braidhom {

// ind(g) = m - (number of cycles of g, fixed points included).
std::size_t perm_index(const Perm& g);

// a(G, c) = 1 / min_{g in c} ind(g). Throws InvalidInput if c contains the
// identity.
mpq_class malle_a(const ConjClassSet& c);

// Sum of m_i * ind(c_i) over the classes of c.
std::size_t discriminant_degree(const ConjClassSet& c, const std::vector<std::size_t>& counts);

// Elements commuting with every element, as sorted ids.
std::vector<PermGroup::Id> group_center(const PermGroup& G);

// Exact value A + B sqrt(q).
struct SqrtValue {
  mpq_class A, B;
  std::uint64_t q = 0;
  // The rational value when q is a perfect square.
  std::optional<mpq_class> rational() const;
  double approx() const;
  std::string str() const;  // "A + B*sqrt(q)"
};

struct PointCountBound {
  std::uint64_t q = 0;
  std::size_t n = 0, d = 0;
  SqrtValue bound;  // q^n sum_j q^{-j/2} b_j
  SqrtValue ratio;  // bound / (n^d q^n)
};

// Throws InvalidInput for negative ranks, q not a prime power, or n = 0 with
// d > 0.
PointCountBound point_count_bound(std::uint64_t q, std::size_t n,
                                  const std::vector<long long>& betti, std::size_t d);

// Sum_{n=1}^{N} C n^d q^n and its closed-form majorant C N^{d+1} q^N.
mpq_class malle_sum(const mpq_class& C, std::size_t d, std::uint64_t q, std::size_t N);
mpq_class malle_sum_bound(const mpq_class& C, std::size_t d, std::uint64_t q, std::size_t N);

bool is_prime_power(std::uint64_t q);

// Heuristic polynomial degree of a sequence r(n0), ..., r(n1): the least k
// whose (k+1)-th differences vanish on the last three available entries.
struct EmpiricalDegree {
  std::size_t d = 0;
  std::size_t n0 = 0, n1 = 0;
};
std::optional<EmpiricalDegree> empirical_degree(const std::vector<long long>& values,
                                                std::size_t n0 = 0);

struct MalleConstants {
  std::vector<std::size_t> class_index;  // ind per conjugacy class of c
  mpq_class a;
  std::size_t center_order = 0;
};
MalleConstants malle_constants(const ConjClassSet& c);

}  // namespace braidhom
