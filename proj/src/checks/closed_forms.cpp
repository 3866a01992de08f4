#include "jetinv/checks/closed_forms.hpp"

#include <numeric>
#include <vector>

#include "jetinv/errors.hpp"
#include "jetinv/linalg.hpp"

namespace jetinv::checks {

namespace {

MultiIndex idx(int dim, std::vector<int> entries) { return MultiIndex::canonical(std::move(entries), dim); }

void require_order2(int r, const char* what) {
  if (r != 2) throw_domain(ErrorCode::order_mismatch, std::string(what) + " requires order 2");
}

template <class T>
T zero() {
  return ScalarTraits<T>::from_int(0);
}

}  // namespace

template <class T>
GroupJet<T> compose_order2(const GroupJet<T>& a, const GroupJet<T>& b) {
  require_order2(a.r(), "compose_order2");
  require_order2(b.r(), "compose_order2");
  const int n = a.n();
  GroupJet<T> c(n, 2);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      T sum = zero<T>();
      for (int p = 0; p < n; ++p) sum += b(p, idx(n, {i})) * a(k, idx(n, {p}));
      c(k, idx(n, {i})) = sum;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T sum = zero<T>();
        for (int p = 0; p < n; ++p) {
          sum += b(p, idx(n, {i, j})) * a(k, idx(n, {p}));
          for (int q = 0; q < n; ++q) sum += b(p, idx(n, {i})) * b(q, idx(n, {j})) * a(k, idx(n, {p, q}));
        }
        c(k, idx(n, {i, j})) = sum;
      }
    }
  }
  return c;
}

template <class T>
GroupJet<T> invert_order2(const GroupJet<T>& a, const Tolerance& tol) {
  require_order2(a.r(), "invert_order2");
  const int n = a.n();
  const Matrix<T> z = inverse(a.linear_part(), tol);
  GroupJet<T> x(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) x(i, idx(n, {r})) = z(i, r);
    for (int r = 0; r < n; ++r) {
      for (int s = r; s < n; ++s) {
        T sum = zero<T>();
        for (int p = 0; p < n; ++p)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) sum -= z(i, p) * z(j, r) * z(k, s) * a(p, idx(n, {j, k}));
        x(i, idx(n, {r, s})) = sum;
      }
    }
  }
  return x;
}

template <class T>
Velocity<T> act_order2(const Velocity<T>& v, const GroupJet<T>& a) {
  require_order2(v.r(), "act_order2");
  require_order2(a.r(), "act_order2");
  const int n = v.n();
  Velocity<T> out(n, v.m(), 2);
  for (int A = 0; A < v.target_dim(); ++A) {
    out(A, MultiIndex{}) = v(A, MultiIndex{});
    for (int i = 0; i < n; ++i) {
      T sum = zero<T>();
      for (int s = 0; s < n; ++s) sum += v(A, idx(n, {s})) * a(s, idx(n, {i}));
      out(A, idx(n, {i})) = sum;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T sum = zero<T>();
        for (int p = 0; p < n; ++p) {
          sum += v(A, idx(n, {p})) * a(p, idx(n, {i, j}));
          for (int q = 0; q < n; ++q) sum += v(A, idx(n, {p, q})) * a(p, idx(n, {i})) * a(q, idx(n, {j}));
        }
        out(A, idx(n, {i, j})) = sum;
      }
    }
  }
  return out;
}

template <class T>
GrassmannPoint<T> invariants_order2(const Velocity<T>& v, const Tolerance& tol) {
  require_order2(v.r(), "invariants_order2");
  const int n = v.n();
  const int m = v.m();
  std::vector<int> nu(static_cast<std::size_t>(n));
  std::iota(nu.begin(), nu.end(), 0);
  const Matrix<T> z = inverse(v.block(nu), tol);

  GrassmannPoint<T> p;
  p.nu = nu;
  for (int k = 0; k < n; ++k) p.base.push_back(v(k, MultiIndex{}));
  p.w = JetTable<T>(m, IndexSpace(n, 2));
  for (int s = 0; s < m; ++s) {
    const int sigma = n + s;
    p.w.at(s, MultiIndex{}) = v(sigma, MultiIndex{});
    for (int i = 0; i < n; ++i) {
      T sum = zero<T>();
      for (int q = 0; q < n; ++q) sum += z(q, i) * v(sigma, idx(n, {q}));
      p.w.at(s, idx(n, {i})) = sum;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T sum = zero<T>();
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            T inner = v(sigma, idx(n, {a, b}));
            for (int k = 0; k < n; ++k)
              for (int t = 0; t < n; ++t) inner -= z(k, t) * v(sigma, idx(n, {k})) * v(t, idx(n, {a, b}));
            sum += z(a, i) * z(b, j) * inner;
          }
        }
        p.w.at(s, idx(n, {i, j})) = sum;
      }
    }
  }
  return p;
}

template <class T>
Velocity<T> transform_order2(const ChartJet<T>& f, const Velocity<T>& v) {
  require_order2(v.r(), "transform_order2");
  require_order2(f.r(), "transform_order2");
  const int n = v.n();
  const int N = v.target_dim();
  if (f.dim() != N) throw_domain(ErrorCode::dimension_mismatch, "chart dimension differs from target dimension");
  Velocity<T> out(n, v.m(), 2);
  for (int A = 0; A < N; ++A) {
    out(A, MultiIndex{}) = f.derivs.at(A, MultiIndex{});
    for (int i = 0; i < n; ++i) {
      T sum = zero<T>();
      for (int B = 0; B < N; ++B) sum += f.derivs.at(A, idx(N, {B})) * v(B, idx(n, {i}));
      out(A, idx(n, {i})) = sum;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T sum = zero<T>();
        for (int B = 0; B < N; ++B) {
          sum += f.derivs.at(A, idx(N, {B})) * v(B, idx(n, {i, j}));
          for (int C = 0; C < N; ++C)
            sum += f.derivs.at(A, idx(N, {B, C})) * v(B, idx(n, {i})) * v(C, idx(n, {j}));
        }
        out(A, idx(n, {i, j})) = sum;
      }
    }
  }
  return out;
}

template <class T>
GrassmannPoint<T> transform_grassmann_order2(const ChartJet<T>& f, const GrassmannPoint<T>& p, const Tolerance& tol) {
  require_order2(p.r(), "transform_grassmann_order2");
  require_order2(f.r(), "transform_grassmann_order2");
  const int n = p.n();
  const int m = p.m();
  const int N = n + m;
  for (int k = 0; k < n; ++k) {
    if (p.nu[static_cast<std::size_t>(k)] != k) {
      throw_domain(ErrorCode::dimension_mismatch, "closed form expects the leading chart");
    }
  }
  if (f.dim() != N) throw_domain(ErrorCode::dimension_mismatch, "chart dimension differs from target dimension");

  auto d1 = [&](int A, int B) -> const T& { return f.derivs.at(A, idx(N, {B})); };
  auto d2 = [&](int A, int B, int C) -> const T& { return f.derivs.at(A, idx(N, {B, C})); };
  auto w1 = [&](int s, int i) -> const T& { return p.w.at(s, idx(n, {i})); };
  auto w2 = [&](int s, int i, int j) -> const T& { return p.w.at(s, idx(n, {i, j})); };

  // G^A_p = F^A_p + F^A_nu w^nu_p
  auto G = [&](int A, int q) {
    T sum = d1(A, q);
    for (int s = 0; s < m; ++s) sum += d1(A, n + s) * w1(s, q);
    return sum;
  };
  // H^A_pq = F^A_pq + F^A_{p nu} w^nu_q + F^A_{nu q} w^nu_p + F^A_{mu nu} w^mu_p w^nu_q + F^A_nu w^nu_pq
  auto H = [&](int A, int a, int b) {
    T sum = d2(A, a, b);
    for (int s = 0; s < m; ++s) {
      sum += d2(A, a, n + s) * w1(s, b);
      sum += d2(A, n + s, b) * w1(s, a);
      sum += d1(A, n + s) * w2(s, a, b);
      for (int t = 0; t < m; ++t) sum += d2(A, n + s, n + t) * w1(s, a) * w1(t, b);
    }
    return sum;
  };

  Matrix<T> P(n, n);
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s) P(q, s) = G(q, s);
  const Matrix<T> Q = inverse(P, tol);

  std::vector<std::vector<std::vector<T>>> Hk(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Hk[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) Hk[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = H(k, a, b);
  }

  GrassmannPoint<T> out;
  out.nu = p.nu;
  for (int k = 0; k < n; ++k) out.base.push_back(f.derivs.at(k, MultiIndex{}));
  out.w = JetTable<T>(m, IndexSpace(n, 2));
  for (int s = 0; s < m; ++s) {
    const int sigma = n + s;
    out.w.at(s, MultiIndex{}) = f.derivs.at(sigma, MultiIndex{});
    std::vector<T> g(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) g[static_cast<std::size_t>(q)] = G(sigma, q);
    for (int i = 0; i < n; ++i) {
      T sum = zero<T>();
      for (int q = 0; q < n; ++q) sum += Q(q, i) * g[static_cast<std::size_t>(q)];
      out.w.at(s, idx(n, {i})) = sum;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        T sum = zero<T>();
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            sum += Q(a, i) * Q(b, j) * H(sigma, a, b);
            for (int q = 0; q < n; ++q)
              for (int k = 0; k < n; ++k)
                sum -= Q(a, i) * Q(b, j) * Q(q, k) * g[static_cast<std::size_t>(q)] *
                       Hk[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          }
        }
        out.w.at(s, idx(n, {i, j})) = sum;
      }
    }
  }
  return out;
}

#define JETINV_INSTANTIATE(T)                                                                         \
  template GroupJet<T> compose_order2(const GroupJet<T>&, const GroupJet<T>&);                        \
  template GroupJet<T> invert_order2(const GroupJet<T>&, const Tolerance&);                           \
  template Velocity<T> act_order2(const Velocity<T>&, const GroupJet<T>&);                            \
  template GrassmannPoint<T> invariants_order2(const Velocity<T>&, const Tolerance&);                 \
  template Velocity<T> transform_order2(const ChartJet<T>&, const Velocity<T>&);                      \
  template GrassmannPoint<T> transform_grassmann_order2(const ChartJet<T>&, const GrassmannPoint<T>&, \
                                                        const Tolerance&);

JETINV_INSTANTIATE(Rational)
JETINV_INSTANTIATE(double)

#undef JETINV_INSTANTIATE

}  // namespace jetinv::checks
