#include "braidhom/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "braidhom/error.hpp"

namespace braidhom {
namespace detail {

// Shared elimination driver. Stored vectors are sparse (row, value) lists
// whose first entry is the pivot (the lowest row). Reduction walks rows in
// increasing order with a min-heap, so each elimination only introduces
// rows above the current one and the walk terminates.
template <class Ops>
class Eliminator {
 public:
  using T = typename Ops::T;
  using Vec = std::vector<std::pair<std::uint32_t, T>>;

  Eliminator(std::size_t dim, Ops ops)
      : ops_(std::move(ops)), pivot_(dim, -1), acc_(dim), marked_(dim, 0) {}

  std::size_t rank() const { return basis_.size(); }
  std::size_t dim() const { return pivot_.size(); }

  // Reduces v; if independent and keep is set, stores it. Returns independence.
  bool reduce(const Vec& v, bool keep) {
    for (const auto& [r, x] : v) {
      if (ops_.is_zero(x)) continue;
      acc_[r] = x;
      touch(r);
    }
    bool independent = false;
    while (!heap_.empty()) {
      std::uint32_t r = heap_.top();
      heap_.pop();
      marked_[r] = 0;
      if (ops_.is_zero(acc_[r])) continue;
      std::int64_t p = pivot_[r];
      if (p < 0) {
        independent = true;
        if (keep) store(r);
        break;
      }
      for (std::size_t k = 1; k < basis_[p].size(); ++k) touch(basis_[p][k].first);
      ops_.eliminate(acc_, r, basis_[p], live_);
    }
    clear();
    return independent;
  }

 private:
  void touch(std::uint32_t r) {
    if (!marked_[r]) {
      marked_[r] = 1;
      heap_.push(r);
      live_.push_back(r);
    }
  }

  void store(std::uint32_t r) {
    Vec out;
    out.push_back({r, acc_[r]});
    while (!heap_.empty()) {
      std::uint32_t s = heap_.top();
      heap_.pop();
      marked_[s] = 0;
      if (!ops_.is_zero(acc_[s])) out.push_back({s, acc_[s]});
    }
    ops_.normalize(out);
    pivot_[r] = static_cast<std::int64_t>(basis_.size());
    basis_.push_back(std::move(out));
  }

  void clear() {
    while (!heap_.empty()) {
      marked_[heap_.top()] = 0;
      heap_.pop();
    }
    for (std::uint32_t r : live_) {
      acc_[r] = T();
      marked_[r] = 0;
    }
    live_.clear();
  }

  Ops ops_;
  std::vector<std::int64_t> pivot_;
  std::vector<Vec> basis_;
  std::vector<T> acc_;
  std::vector<char> marked_;
  std::vector<std::uint32_t> live_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

// F_p with residues in uint64; stored vectors have pivot value 1.
struct PrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;

  bool is_zero(T x) const { return x == 0; }
  T mul(T a, T b) const {
    return static_cast<T>(static_cast<unsigned __int128>(a) * b % p);
  }
  T inv(T a) const {
    T result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  void eliminate(std::vector<T>& acc, std::uint32_t r,
                 const std::vector<std::pair<std::uint32_t, T>>& v,
                 const std::vector<std::uint32_t>&) const {
    T f = acc[r];
    for (const auto& [row, x] : v) {
      T sub = mul(f, x);
      T cur = acc[row];
      acc[row] = cur >= sub ? cur - sub : cur + p - sub;
    }
  }
  void normalize(std::vector<std::pair<std::uint32_t, T>>& v) const {
    T s = inv(v.front().second);
    for (auto& e : v) e.second = mul(e.second, s);
  }
};

// Fraction-free integer elimination: acc <- (a/g) acc - (b/g) v, where a is
// the pivot of v and b the entry being cleared, then content is divided out.
struct IntegerOps {
  using T = mpz_class;

  bool is_zero(const T& x) const { return sgn(x) == 0; }
  void eliminate(std::vector<T>& acc, std::uint32_t r,
                 const std::vector<std::pair<std::uint32_t, T>>& v,
                 const std::vector<std::uint32_t>& live) const {
    const T& a = v.front().second;
    T b = acc[r];
    T g = gcd(a, b);
    T ma = a / g;
    T mb = b / g;
    if (ma != 1) {
      for (std::uint32_t row : live) {
        if (sgn(acc[row]) != 0) acc[row] *= ma;
      }
    }
    for (const auto& [row, x] : v) acc[row] -= mb * x;
    T content = 0;
    for (std::uint32_t row : live) {
      if (sgn(acc[row]) != 0) {
        content = gcd(content, acc[row]);
        if (content == 1) return;
      }
    }
    if (content > 1) {
      for (std::uint32_t row : live) {
        if (sgn(acc[row]) != 0) {
          mpz_divexact(acc[row].get_mpz_t(), acc[row].get_mpz_t(), content.get_mpz_t());
        }
      }
    }
  }
  void normalize(std::vector<std::pair<std::uint32_t, T>>& v) const {
    T content = 0;
    for (const auto& e : v) content = gcd(content, e.second);
    if (sgn(v.front().second) < 0) content = -content;
    if (content != 1) {
      for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    }
  }
};

using PrimeElim = Eliminator<PrimeOps>;
using IntElim = Eliminator<IntegerOps>;

PrimeElim::Vec to_prime(const SparseMatrix::Column& c, const Field& F) {
  PrimeElim::Vec out;
  out.reserve(c.size());
  for (const auto& [r, v] : c) out.push_back({r, F.residue(v)});
  return out;
}

// Clears denominators so the column is an integer vector with the same span.
IntElim::Vec to_integer(const SparseMatrix::Column& c) {
  mpz_class l = 1;
  for (const auto& e : c) l = lcm(l, mpz_class(e.second.get_den()));
  IntElim::Vec out;
  out.reserve(c.size());
  for (const auto& [r, v] : c) out.push_back({r, mpz_class(v.get_num() * (l / v.get_den()))});
  return out;
}

std::vector<std::uint32_t> sparsest_first(const SparseMatrix& M) {
  std::vector<std::uint32_t> order(M.cols());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return M.column(a).size() < M.column(b).size();
  });
  return order;
}

}  // namespace detail

namespace {

void require_field(const SparseMatrix& M, const Field& F) {
  if (M.field() != F) {
    throw FieldMismatch("matrix over " + M.field().name() + " used with " + F.name());
  }
}

}  // namespace

std::size_t rank(const SparseMatrix& M, const Field& F) {
  require_field(M, F);
  auto order = detail::sparsest_first(M);
  if (F.is_rational()) {
    detail::IntElim e(M.rows(), {});
    for (auto j : order) {
      if (!M.column(j).empty()) e.reduce(detail::to_integer(M.column(j)), true);
    }
    return e.rank();
  }
  detail::PrimeElim e(M.rows(), {F.characteristic()});
  for (auto j : order) {
    if (!M.column(j).empty()) e.reduce(detail::to_prime(M.column(j), F), true);
    if (e.rank() == M.rows()) break;
  }
  return e.rank();
}

std::size_t homology_rank(const SparseMatrix& d_in, const SparseMatrix& d_out, const Field& F) {
  require_field(d_in, F);
  require_field(d_out, F);
  if (d_in.rows() != d_out.cols()) {
    throw ComplexIntegrityError("differentials are not composable: " +
                                std::to_string(d_in.rows()) + " vs " +
                                std::to_string(d_out.cols()));
  }
  if (!(d_out * d_in).is_zero()) {
    throw ComplexIntegrityError("d_out * d_in != 0");
  }
  std::size_t dim = d_out.cols();
  return dim - rank(d_out, F) - rank(d_in, F);
}

// Generic small-scale elimination over F with combination tracking, used for
// kernels, inverses, and solves where pivots must be tracked.
namespace {

struct Tracked {
  SparseMatrix::Column vec;    // reduced vector
  SparseMatrix::Column combo;  // coefficients over original columns
};

SparseMatrix::Column axpy(const SparseMatrix::Column& x, const Scalar& a,
                          const SparseMatrix::Column& y, const Field& F) {
  // x + a*y
  SparseMatrix::Column out = x;
  for (const auto& [r, v] : y) out.push_back({r, F.mul(a, v)});
  normalize_column(out, F);
  return out;
}

class TrackingEliminator {
 public:
  TrackingEliminator(std::size_t dim, const Field& F) : F_(F), pivot_(dim, -1) {}

  // Reduces t in place by clearing its lowest row while that row is a
  // pivot. Returns true if t is independent (stored when keep is set).
  bool reduce(Tracked& t, bool keep) {
    while (!t.vec.empty()) {
      std::uint32_t r = t.vec.front().first;
      std::int64_t p = pivot_[r];
      if (p < 0) {
        if (keep) {
          pivot_[r] = static_cast<std::int64_t>(basis_.size());
          basis_.push_back(t);
        }
        return true;
      }
      const Tracked& b = basis_[p];
      Scalar f = F_.neg(F_.mul(t.vec.front().second, F_.inv(b.vec.front().second)));
      t.vec = axpy(t.vec, f, b.vec, F_);
      t.combo = axpy(t.combo, f, b.combo, F_);
    }
    return false;
  }

  const std::vector<Tracked>& basis() const { return basis_; }

 private:
  Field F_;
  std::vector<std::int64_t> pivot_;
  std::vector<Tracked> basis_;
};

}  // namespace

SparseMatrix kernel_basis(const SparseMatrix& M, const Field& F) {
  require_field(M, F);
  TrackingEliminator e(M.rows(), F);
  std::vector<SparseMatrix::Column> kernel;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Tracked t{M.column(j), {{static_cast<std::uint32_t>(j), F.from_int(1)}}};
    if (!e.reduce(t, true)) kernel.push_back(std::move(t.combo));
  }
  SparseMatrix K(M.cols(), kernel.size(), F);
  for (std::size_t k = 0; k < kernel.size(); ++k) K.set_column(k, std::move(kernel[k]));
  return K;
}

std::optional<SparseMatrix::Column> solve(const SparseMatrix& A, const SparseMatrix::Column& b,
                                          const Field& F) {
  require_field(A, F);
  TrackingEliminator e(A.rows(), F);
  for (std::size_t j = 0; j < A.cols(); ++j) {
    Tracked t{A.column(j), {{static_cast<std::uint32_t>(j), F.from_int(1)}}};
    e.reduce(t, true);
  }
  Tracked t{b, {}};
  normalize_column(t.vec, F);
  if (e.reduce(t, false)) return std::nullopt;
  // t.vec == 0 means b + A*combo = 0.
  SparseMatrix::Column x;
  for (const auto& [r, v] : t.combo) x.push_back({r, F.neg(v)});
  return x;
}

SparseMatrix inverse(const SparseMatrix& M, const Field& F) {
  require_field(M, F);
  if (M.rows() != M.cols()) throw Error("inverse of a non-square matrix");
  std::size_t n = M.rows();
  // Solve M X = I column by column after one factorization pass.
  TrackingEliminator e(n, F);
  for (std::size_t j = 0; j < n; ++j) {
    Tracked t{M.column(j), {{static_cast<std::uint32_t>(j), F.from_int(1)}}};
    if (!e.reduce(t, true)) throw Error("matrix is singular");
  }
  SparseMatrix X(n, n, F);
  for (std::size_t i = 0; i < n; ++i) {
    Tracked t{{{static_cast<std::uint32_t>(i), F.from_int(1)}}, {}};
    e.reduce(t, false);
    SparseMatrix::Column x;
    for (const auto& [r, v] : t.combo) x.push_back({r, F.neg(v)});
    X.set_column(i, std::move(x));
  }
  return X;
}

struct SpanBasis::Impl {
  Field F;
  std::optional<detail::PrimeElim> prime;
  std::optional<detail::IntElim> integer;
};

SpanBasis::SpanBasis(std::size_t dim, const Field& F) : impl_(std::make_unique<Impl>()) {
  impl_->F = F;
  if (F.is_rational()) {
    impl_->integer.emplace(dim, detail::IntegerOps{});
  } else {
    impl_->prime.emplace(dim, detail::PrimeOps{F.characteristic()});
  }
}

SpanBasis::~SpanBasis() = default;
SpanBasis::SpanBasis(SpanBasis&&) noexcept = default;
SpanBasis& SpanBasis::operator=(SpanBasis&&) noexcept = default;

bool SpanBasis::insert(const SparseMatrix::Column& v) {
  if (impl_->integer) return impl_->integer->reduce(detail::to_integer(v), true);
  return impl_->prime->reduce(detail::to_prime(v, impl_->F), true);
}

bool SpanBasis::contains(const SparseMatrix::Column& v) {
  if (impl_->integer) return !impl_->integer->reduce(detail::to_integer(v), false);
  return !impl_->prime->reduce(detail::to_prime(v, impl_->F), false);
}

std::size_t SpanBasis::rank() const {
  return impl_->integer ? impl_->integer->rank() : impl_->prime->rank();
}

std::size_t SpanBasis::dim() const {
  return impl_->integer ? impl_->integer->dim() : impl_->prime->dim();
}

}  // namespace braidhom
