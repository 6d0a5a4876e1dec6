#include "naive.hpp"

#include <algorithm>
#include <functional>

namespace naive {

Poly monomial(const Mono& e, const mpq_class& c) {
  Poly p;
  if (c != 0) p[e] = c;
  return p;
}

Poly add(const Poly& f, const Poly& g) {
  Poly out = f;
  for (const auto& [e, c] : g) {
    out[e] += c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

Poly scale(const Poly& f, const mpq_class& c) {
  Poly out;
  if (c == 0) return out;
  for (const auto& [e, x] : f) out[e] = x * c;
  return out;
}

Poly mul(const Poly& f, const Poly& g) {
  Poly out;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : g) {
      Mono e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      out[e] += x * y;
      if (out[e] == 0) out.erase(e);
    }
  return out;
}

Poly power(const Poly& f, int k) {
  if (f.empty()) return k == 0 ? Poly{} : f;
  Poly out = monomial(Mono(f.begin()->first.size(), 0));
  for (int i = 0; i < k; ++i) out = mul(out, f);
  return out;
}

Poly contract(const Poly& f, const Poly& F) {
  Poly out;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : F) {
      Mono e(a.size());
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) {
        e[i] = b[i] - a[i];
        ok = e[i] >= 0;
      }
      if (!ok) continue;
      out[e] += x * y;
      if (out[e] == 0) out.erase(e);
    }
  return out;
}

int degree(const Mono& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::vector<Mono> monomials(int n, int t) {
  std::vector<Mono> out;
  Mono e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (t == 0) out.push_back({});
    return out;
  }
  rec(0, t);
  return out;
}

std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  auto md = [p](long long x) { return ((x % p) + p) % p; };
  auto inv = [&](long long a) {
    long long result = 1, base = md(a), e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m)
    for (auto& x : row) x = md(x);
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c]);
    for (auto& x : m[r]) x = x * iv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = md(m[i][j] - f * m[r][j]);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<mpq_class>> kernel(const Mat& m0) {
  Mat m = m0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Columns: monomials of R_t. Rows: monomials of S_{d-t}.
Mat contraction_matrix(const Poly& F, const std::vector<Mono>& rt, const std::vector<Mono>& sdt) {
  Mat m(sdt.size(), std::vector<mpq_class>(rt.size(), 0));
  for (std::size_t c = 0; c < rt.size(); ++c) {
    const Poly g = contract(monomial(rt[c]), F);
    for (std::size_t r = 0; r < sdt.size(); ++r) {
      auto it = g.find(sdt[r]);
      if (it != g.end()) m[r][c] = it->second;
    }
  }
  return m;
}

// Basis of Ann(F)_t as coefficient vectors over monomials(n, t).
std::vector<std::vector<mpq_class>> annihilator(const Poly& F, int n, int d, int t) {
  const auto rt = monomials(n, t);
  if (t > d) {
    std::vector<std::vector<mpq_class>> id;
    for (std::size_t i = 0; i < rt.size(); ++i) {
      std::vector<mpq_class> v(rt.size(), 0);
      v[i] = 1;
      id.push_back(std::move(v));
    }
    return id;
  }
  return kernel(contraction_matrix(F, rt, monomials(n, d - t)));
}

}  // namespace

std::vector<std::size_t> hilbert(const Poly& F, int n, int d) {
  std::vector<std::size_t> h;
  for (int t = 0; t <= d; ++t) h.push_back(rank(contraction_matrix(F, monomials(n, t), monomials(n, d - t))));
  return h;
}

std::vector<int> generator_degrees(const Poly& F, int n, int d) {
  std::vector<int> out;
  std::vector<std::vector<mpq_class>> prev;
  std::vector<Mono> prev_monos;
  for (int t = 1; t <= d + 1; ++t) {
    const auto rt = monomials(n, t);
    const auto ann = annihilator(F, n, d, t);
    // R_1 * I_{t-1}
    Mat products;
    for (const auto& v : prev)
      for (int j = 0; j < n; ++j) {
        std::vector<mpq_class> w(rt.size(), 0);
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (v[k] == 0) continue;
          Mono e = prev_monos[k];
          ++e[j];
          w[std::find(rt.begin(), rt.end(), e) - rt.begin()] += v[k];
        }
        products.push_back(std::move(w));
      }
    const std::size_t generated = products.empty() ? 0 : rank(products);
    for (std::size_t g = generated; g < ann.size(); ++g) out.push_back(t);
    prev = ann;
    prev_monos = rt;
  }
  return out;
}

std::size_t mu(const Poly& F, int n, int d) { return generator_degrees(F, n, d).size(); }

std::size_t pairing_rank(const Poly& F, const Poly& ell, int n, int d, int i, int k) {
  const auto rows = monomials(n, i);
  const auto cols = monomials(n, d - i - k);
  const Poly lk = power(ell, k);
  Mat m(rows.size(), std::vector<mpq_class>(cols.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Poly f = mul(mul(monomial(rows[r]), lk), monomial(cols[c]));
      const Poly g = contract(f, F);
      if (!g.empty()) m[r][c] = g.begin()->second;  // degree 0: a single constant
    }
  return rank(m);
}

namespace {

bool standard(const Mono& e, const std::vector<Mono>& gens) {
  for (const auto& g : gens) {
    bool divides = true;
    for (std::size_t i = 0; i < e.size(); ++i) divides = divides && g[i] <= e[i];
    if (divides) return false;
  }
  return true;
}

std::vector<Mono> standard_monomials(const std::vector<Mono>& gens, int n, int t) {
  std::vector<Mono> out;
  for (auto& e : monomials(n, t))
    if (standard(e, gens)) out.push_back(e);
  return out;
}

}  // namespace

std::size_t monomial_quotient_dim(const std::vector<Mono>& gens, int n, int t) {
  return standard_monomials(gens, n, t).size();
}

std::size_t monomial_quotient_rank(const std::vector<Mono>& gens, const std::vector<long long>& ell, int i,
                                   long long p) {
  const int n = static_cast<int>(ell.size());
  const auto src = standard_monomials(gens, n, i);
  const auto dst = standard_monomials(gens, n, i + 1);
  std::vector<std::vector<long long>> m(src.size(), std::vector<long long>(dst.size(), 0));
  for (std::size_t r = 0; r < src.size(); ++r)
    for (int j = 0; j < n; ++j) {
      Mono e = src[r];
      ++e[j];
      auto it = std::find(dst.begin(), dst.end(), e);
      if (it != dst.end()) m[r][it - dst.begin()] += ell[j];
    }
  return rank_mod(m, p);
}

std::size_t monomial_socle_dim(const std::vector<Mono>& gens, int n, int max_degree) {
  std::size_t count = 0;
  for (int t = 0; t <= max_degree; ++t)
    for (const auto& e : standard_monomials(gens, n, t)) {
      bool socle = true;
      for (int j = 0; j < n && socle; ++j) {
        Mono f = e;
        ++f[j];
        socle = !standard(f, gens);
      }
      if (socle) ++count;
    }
  return count;
}

std::size_t sweep_count(int n, int max_a, int max_b, bool both_orientations) {
  auto binom = [](long long a, long long b) -> long long {
    if (b < 0 || a < b) return 0;
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::size_t a_count = 1;
  for (int i = 0; i < n; ++i) a_count *= static_cast<std::size_t>(max_a + 1);
  std::size_t configs = 0;
  for (int mask = 1; mask + 1 < (1 << n); ++mask) {
    const int left = __builtin_popcount(static_cast<unsigned>(mask));
    const int right = n - left;
    if (!both_orientations && left < right) continue;
    // Sum over b_L in [1, max_b]^left of C(B - 1, right - 1).
    std::vector<int> b(left, 1);
    while (true) {
      int B = 0;
      for (int x : b) B += x;
      configs += static_cast<std::size_t>(binom(B - 1, right - 1));
      int pos = left - 1;
      while (pos >= 0 && b[pos] == max_b) b[pos--] = 1;
      if (pos < 0) break;
      ++b[pos];
    }
  }
  return configs * a_count;
}

}  // namespace naive
