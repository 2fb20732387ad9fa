#include "braidhom/malle.hpp"

#include <cmath>
#include <sstream>

#include "braidhom/error.hpp"
#include "braidhom/field.hpp"

namespace braidhom {

std::size_t perm_index(const Perm& g) { return g.size() - cycle_type(g).size(); }

mpq_class malle_a(const ConjClassSet& c) {
  const PermGroup& G = c.group();
  std::size_t best = SIZE_MAX;
  for (auto e : c.elements()) {
    std::size_t ind = perm_index(G.element(e));
    if (ind == 0) throw InvalidInput("class set contains the identity");
    best = std::min(best, ind);
  }
  return mpq_class(1, static_cast<unsigned long>(best));
}

std::size_t discriminant_degree(const ConjClassSet& c, const std::vector<std::size_t>& counts) {
  if (counts.size() != c.classes().size()) throw InvalidInput("one count per class is required");
  std::size_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    total += counts[i] * perm_index(c.group().element(c.classes()[i].front()));
  }
  return total;
}

std::vector<PermGroup::Id> group_center(const PermGroup& G) { return G.center(); }

namespace {

std::optional<std::uint64_t> exact_sqrt(std::uint64_t q) {
  auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
  for (std::uint64_t t = s > 0 ? s - 1 : 0; t <= s + 1; ++t) {
    if (t * t == q) return t;
  }
  return std::nullopt;
}

mpz_class zpow(std::uint64_t q, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

}  // namespace

std::optional<mpq_class> SqrtValue::rational() const {
  if (B == 0) return A;
  auto s = exact_sqrt(q);
  if (!s) return std::nullopt;
  return mpq_class(A + B * mpq_class(mpz_class(static_cast<unsigned long>(*s))));
}

double SqrtValue::approx() const {
  return A.get_d() + B.get_d() * std::sqrt(static_cast<double>(q));
}

std::string SqrtValue::str() const {
  std::ostringstream out;
  out << A.get_str() << " + " << B.get_str() << "*sqrt(" << q << ")";
  return out.str();
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;
}

PointCountBound point_count_bound(std::uint64_t q, std::size_t n,
                                  const std::vector<long long>& betti, std::size_t d) {
  if (!is_prime_power(q)) throw InvalidInput("q must be a prime power");
  if (n == 0 && d > 0) throw InvalidInput("n^-d is undefined at n = 0");
  PointCountBound out;
  out.q = q;
  out.n = n;
  out.d = d;
  mpq_class A = 0, B = 0;
  for (std::size_t j = 0; j < betti.size(); ++j) {
    if (betti[j] < 0) throw InvalidInput("Betti numbers must be nonnegative");
    mpq_class b(mpz_class(std::to_string(betti[j])));
    if (j % 2 == 0) {
      A += b / mpq_class(zpow(q, j / 2));
    } else {
      B += b / mpq_class(zpow(q, (j + 1) / 2));
    }
  }
  mpq_class qn(zpow(q, n));
  out.bound = {A * qn, B * qn, q};
  mpq_class norm = qn * mpq_class(zpow(n, d));
  out.ratio = {out.bound.A / norm, out.bound.B / norm, q};
  return out;
}

mpq_class malle_sum(const mpq_class& C, std::size_t d, std::uint64_t q, std::size_t N) {
  mpq_class total = 0;
  for (std::size_t n = 1; n <= N; ++n) total += C * mpq_class(zpow(n, d) * zpow(q, n));
  return total;
}

mpq_class malle_sum_bound(const mpq_class& C, std::size_t d, std::uint64_t q, std::size_t N) {
  return C * mpq_class(zpow(N, d + 1) * zpow(q, N));
}

std::optional<EmpiricalDegree> empirical_degree(const std::vector<long long>& values,
                                                std::size_t n0) {
  std::vector<long long> diff = values;
  for (std::size_t k = 0; k + 3 <= values.size(); ++k) {
    std::vector<long long> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    // next holds the (k+1)-th differences
    if (next.size() >= 2) {
      std::size_t tail = std::min<std::size_t>(3, next.size());
      bool zero = true;
      for (std::size_t i = next.size() - tail; i < next.size(); ++i) zero = zero && next[i] == 0;
      if (zero) return EmpiricalDegree{k, n0, n0 + values.size() - 1};
    }
    diff = std::move(next);
  }
  return std::nullopt;
}

MalleConstants malle_constants(const ConjClassSet& c) {
  MalleConstants out;
  for (const auto& cls : c.classes()) out.class_index.push_back(perm_index(c.group().element(cls.front())));
  out.a = malle_a(c);
  out.center_order = group_center(c.group()).size();
  return out;
}

}  // namespace braidhom
