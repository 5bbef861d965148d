#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "checks.hpp"
#include "error.hpp"
#include "number.hpp"

namespace cqs {

/// Unnormalized action (d; a, b): a primitive d-th root of unity acts by (x, y) -> (z^a x, z^b y).
struct RawType {
  Int d;
  Int a;
  Int b;

  RawType(const Int& d_, const Int& a_, const Int& b_) : d(d_) {
    if (d < 1) throw InvalidInput("group order must be positive, got " + to_string(d));
    a = mod(a_, d);
    b = mod(b_, d);
  }

  friend bool operator==(const RawType& x, const RawType& y) {
    return x.d == y.d && x.a == y.a && x.b == y.b;
  }
};

inline std::string to_string(const RawType& t) {
  return "(" + to_string(t.d) + ";" + to_string(t.a) + "," + to_string(t.b) + ")";
}

/// The normalized quotient X(d;1,q) together with its Hirzebruch-Jung data.
/// Index convention: q_0 = d, q_1 = q, ..., q_n = 1, q_{n+1} = 0, with c_0 = c_{n+1} = 2.
/// The smooth point is d = 1, q = 0 with an empty bamboo (n = 0).
class Singularity {
 public:
  Singularity() : Singularity(Int(1), Int(0)) {}

  const Int& d() const { return data_->d; }
  const Int& q() const { return data_->q; }
  std::size_t n() const { return data_->qs.size() - 2; }
  bool smooth() const { return data_->d == 1; }

  const std::vector<Int>& qseq() const { return data_->qs; }
  const std::vector<Int>& cseq() const { return data_->cs; }
  const std::vector<Int>& qbarseq() const { return data_->qbars; }

  const Int& q_at(std::size_t i) const { return data_->qs.at(i); }
  const Int& c_at(std::size_t i) const { return data_->cs.at(i); }
  const Int& qbar_at(std::size_t i) const { return data_->qbars.at(i); }

  /// q^{-1} mod d.
  const Int& q_inverse() const { return data_->qinv; }

  /// Class of the canonical divisor, d - 1 - q.
  Int w() const { return smooth() ? Int(0) : Int(data_->d - 1 - data_->q); }

  std::string name() const { return "X(" + to_string(d()) + ";1," + to_string(q()) + ")"; }

  friend bool operator==(const Singularity& x, const Singularity& y) {
    return x.d() == y.d() && x.q() == y.q();
  }

 private:
  struct Data {
    Int d, q, qinv;
    std::vector<Int> qs, cs, qbars;
  };
  std::shared_ptr<const Data> data_;

  Singularity(const Int& d, const Int& q);
  friend Singularity hj_expansion(const Int& d, const Int& q);
};

inline std::string to_string(const Singularity& x) { return x.name(); }

inline Singularity::Singularity(const Int& d, const Int& q) {
  if (d < 1) throw InvalidInput("d must be at least 1, got " + to_string(d));
  auto data = std::make_shared<Data>();
  data->d = d;
  if (d == 1) {
    data->q = 0;
    data->qinv = 0;
    data->qs = {Int(1), Int(0)};
    data->cs = {Int(2), Int(2)};
    data->qbars = {Int(0), Int(1)};
    data_ = std::move(data);
    return;
  }
  if (q <= 0 || q >= d) throw InvalidInput("need 0 < q < d, got d=" + to_string(d) + " q=" + to_string(q));
  if (gcd(d, q) != 1)
    throw InvalidInput("gcd(d,q) must be 1, got d=" + to_string(d) + " q=" + to_string(q));
  data->q = q;
  data->qinv = *inverse_mod(q, d);

  auto& qs = data->qs;
  auto& cs = data->cs;
  qs = {d, q};
  cs = {Int(2)};
  while (qs.back() != 0) {
    std::size_t i = qs.size() - 1;
    Int c = ceil_div(qs[i - 1], qs[i]);
    cs.push_back(c);
    qs.push_back(Int(c * qs[i] - qs[i - 1]));
  }
  cs.push_back(Int(2));
  std::size_t n = qs.size() - 2;

  auto& qb = data->qbars;
  qb.assign(n + 2, Int(0));
  qb[1] = 1;
  for (std::size_t i = 2; i <= n + 1; ++i) qb[i] = cs[i - 1] * qb[i - 1] - qb[i - 2];

  // The recurrence and the congruence q*qbar_i = q_i (mod d) are independent routes.
  if (qb[n + 1] != d) throw RouteMismatch("qbar_{n+1} != d for " + to_string(d) + "," + to_string(q));
  for (std::size_t i = 1; i <= n; ++i) {
    Int via_inverse = mod(Int(data->qinv * qs[i]), d);
    if (via_inverse != qb[i])
      throw RouteMismatch("qbar_" + std::to_string(i) + " recurrence " + to_string(qb[i]) +
                          " != congruence " + to_string(via_inverse));
  }
  for (std::size_t i = 0; i <= n; ++i)
    if (qb[i + 1] * qs[i] - qs[i + 1] * qb[i] != d) throw RouteMismatch("determinant identity failed");
  data_ = std::move(data);
}

/// Hirzebruch-Jung expansion of d/q.
inline Singularity hj_expansion(const Int& d, const Int& q) { return Singularity(d, d == 1 ? Int(0) : q); }

/// Reduces (d;a,b) to a small group by quotienting the pseudo-reflections, then to X(d';1,q').
/// Non-faithful actions (gcd(d,a,b) > 1) are rejected.
inline Singularity normalize_type(const RawType& t) {
  Int d = t.d, a = t.a, b = t.b;
  Int h = gcd(d, a, b);
  if (d > 1 && h > 1)
    throw InvalidInput("action " + to_string(t) + " is not faithful: kernel of order " + to_string(h));
  for (bool changed = true; changed && d > 1;) {
    changed = false;
    Int g = gcd(d, a);
    if (g > 1) {
      d /= g;
      a /= g;
      a = mod(a, d);
      b = mod(b, d);
      changed = true;
    }
    g = gcd(d, b);
    if (d > 1 && g > 1) {
      d /= g;
      b /= g;
      a = mod(a, d);
      b = mod(b, d);
      changed = true;
    }
  }
  if (d == 1) return Singularity();
  Int q = mod(Int(*inverse_mod(a, d) * b), d);
  return hj_expansion(d, q);
}

/// X(d;1,q) and X(d;1,q') are isomorphic iff q' = q or q q' = 1 (mod d).
inline bool equivalent(const Singularity& x, const Singularity& y) {
  if (x.d() != y.d()) return false;
  if (x.smooth()) return true;
  return x.q() == y.q() || mod(Int(x.q() * y.q()), x.d()) == 1;
}

/// Coefficient vector of length n+2 over the denominations q_0..q_{n+1}.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<Int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_.at(i); }
  Int& operator[](std::size_t i) { return entries_.at(i); }
  const std::vector<Int>& entries() const { return entries_; }

  /// Interior entries 1..n only.
  std::vector<Int> interior() const {
    if (entries_.size() < 2) return {};
    return std::vector<Int>(entries_.begin() + 1, entries_.end() - 1);
  }

  friend Decomposition operator+(const Decomposition& x, const Decomposition& y) {
    if (x.size() != y.size()) throw InvalidInput("decomposition length mismatch");
    std::vector<Int> e(x.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = x[i] + y[i];
    return Decomposition(std::move(e));
  }

  friend bool operator==(const Decomposition& x, const Decomposition& y) {
    return x.entries_ == y.entries_;
  }

 private:
  std::vector<Int> entries_;
};

/// Full vector, sentinels included.
inline std::string to_string(const Decomposition& k) { return to_string(k.entries()); }

/// Display form without the two sentinel entries.
inline std::string display(const Decomposition& k) { return to_string(k.interior()); }

/// Greedy coin decomposition of k mod d over q_1 > ... > q_n.
inline Decomposition greedy_decomposition(const Singularity& x, const Int& k) {
  std::size_t n = x.n();
  std::vector<Int> e(n + 2, Int(0));
  Int rem = mod(k, x.d());
  for (std::size_t i = 1; i <= n; ++i) {
    e[i] = rem / x.q_at(i);
    rem -= e[i] * x.q_at(i);
  }
  return Decomposition(std::move(e));
}

struct DecompositionNorms {
  Int x_norm;              // sum alpha_i q_i
  Int coins;               // sum alpha_i
  Int bar;                 // sum alpha_i qbar_i
  std::vector<Int> tail;   // tail[j] = sum_{i>=j} alpha_i q_i
  std::vector<Int> head;   // head[j] = sum_{i<=j} alpha_i qbar_i
};

inline DecompositionNorms norms(const Singularity& x, const Decomposition& a) {
  std::size_t m = x.n() + 2;
  if (a.size() != m) throw InvalidInput("decomposition has wrong length for " + x.name());
  DecompositionNorms out;
  out.tail.assign(m, Int(0));
  out.head.assign(m, Int(0));
  for (std::size_t i = 0; i < m; ++i) {
    out.x_norm += a[i] * x.q_at(i);
    out.coins += a[i];
    out.bar += a[i] * x.qbar_at(i);
  }
  Int acc = 0;
  for (std::size_t j = m; j-- > 0;) {
    acc += a[j] * x.q_at(j);
    out.tail[j] = acc;
  }
  acc = 0;
  for (std::size_t j = 0; j < m; ++j) {
    acc += a[j] * x.qbar_at(j);
    out.head[j] = acc;
  }
  return out;
}

using Matrix = std::vector<std::vector<Int>>;

/// Q_{ij} = (qbar of X(q_i;1,q_{i+1}))_{j-i+1} for i <= j, zero below the diagonal. Indices 0..n.
inline Matrix q_matrix_definition(const Singularity& x) {
  std::size_t n = x.n();
  Matrix m(n + 1, std::vector<Int>(n + 1, Int(0)));
  for (std::size_t i = 0; i <= n; ++i) {
    Singularity xi = hj_expansion(x.q_at(i), x.q_at(i + 1));
    for (std::size_t j = i; j <= n; ++j) m[i][j] = xi.qbar_at(j - i + 1);
  }
  return m;
}

/// Same matrix from its border (unit diagonal, c_{i+1} above it, q_i in the last column)
/// and the rule that adjacent 2x2 minors in consecutive rows equal 1.
inline Matrix q_matrix_completion(const Singularity& x) {
  std::size_t n = x.n();
  Matrix m(n + 1, std::vector<Int>(n + 1, Int(0)));
  for (std::size_t i = n + 1; i-- > 0;) {
    m[i][i] = 1;
    if (i < n) {
      m[i][n] = x.q_at(i);
      m[i][i + 1] = x.c_at(i + 1);
    }
    for (std::size_t col = n; col-- > i + 2;) {
      Int num = 1 + m[i][col + 1] * m[i + 1][col];
      const Int& den = m[i + 1][col + 1];
      if (mod(num, den) != 0) throw RouteMismatch("Q completion is not integral");
      m[i][col] = num / den;
    }
  }
  return m;
}

inline Matrix q_matrix(const Singularity& x, Verify v = Verify::check, CheckLog* log = nullptr) {
  Matrix m = q_matrix_definition(x);
  if (v != Verify::off) agree(v, "Q matrix", m, q_matrix_completion(x), log);
  return m;
}

/// [w] = [0, c_1-2, ..., c_n-2, 0].
inline Decomposition canonical_decomposition(const Singularity& x, Verify v = Verify::check,
                                             CheckLog* log = nullptr) {
  std::size_t n = x.n();
  std::vector<Int> e(n + 2, Int(0));
  for (std::size_t i = 1; i <= n; ++i) e[i] = x.c_at(i) - 2;
  Decomposition w(std::move(e));
  if (v != Verify::off) agree(v, "[w] vs greedy(w)", w, greedy_decomposition(x, x.w()), log);
  return w;
}

/// Closed form of [k + w] in terms of [k]. Outside the first and last nonzero positions r <= s
/// the entries are c_i - 2, next to them c_i - 1, the end entries drop by one and the interior
/// is copied. A single coin of q_r gives [w] + e_r. Sentinels stay 0.
inline Decomposition sum_with_canonical_closed(const Singularity& x, const Int& k) {
  Int kk = mod(k, x.d());
  if (kk == 0) throw DomainError("k + w needs k != 0 mod d");
  Decomposition kd = greedy_decomposition(x, kk);
  std::size_t n = x.n();
  std::size_t r = 0, s = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (kd[i] != 0) {
      if (r == 0) r = i;
      s = i;
    }
  std::vector<Int> e(n + 2, Int(0));
  for (std::size_t i = 1; i <= n; ++i) e[i] = x.c_at(i) - 2;
  if (r == s && kd[r] == 1) {
    e[r] += 1;
    return Decomposition(std::move(e));
  }
  if (r >= 1) e[r - 1] = x.c_at(r - 1) - 1;
  for (std::size_t i = r; i <= s; ++i) e[i] = kd[i];
  e[r] -= 1;
  e[s] -= 1;
  e[s + 1] = x.c_at(s + 1) - 1;
  e[0] = 0;
  e[n + 1] = 0;
  return Decomposition(std::move(e));
}

inline Decomposition sum_with_canonical(const Singularity& x, const Int& k, Verify v = Verify::check,
                                        CheckLog* log = nullptr) {
  Decomposition closed = sum_with_canonical_closed(x, k);
  if (v != Verify::off)
    agree(v, "[k+w] closed form vs greedy", closed, greedy_decomposition(x, Int(k + x.w())), log);
  return closed;
}

}  // namespace cqs
