#include "invsys/lefschetz.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace invsys {

std::string to_string(LefschetzMode mode) { return mode == LefschetzMode::kWeak ? "WLP" : "SLP"; }

std::size_t LefschetzReport::total_achieved() const {
  std::size_t s = 0;
  for (const auto& e : rank_table) s += e.achieved;
  return s;
}

namespace {

void require_linear_form(const Polynomial& ell, const FieldSpec& field, std::size_t nvars) {
  if (ell.nvars() != nvars)
    throw LengthMismatch("linear form in " + std::to_string(ell.nvars()) + " variables, expected " +
                         std::to_string(nvars));
  if (ell.field() != field) throw FieldMismatch("linear form over " + ell.field().name());
  if (ell.is_zero() || !ell.is_homogeneous() || ell.homogeneous_degree() != 1)
    throw InvalidArgument("ell must be a nonzero linear form");
}

// Exponent vectors packed in radix (d + 1); sums of two vectors of total
// degree <= d never carry. Falls back to hashing when the radix overflows.
class MonomialKeys {
 public:
  MonomialKeys(std::size_t n, std::uint64_t d) {
    long double span = 1;
    for (std::size_t i = 0; i < n; ++i) span *= static_cast<long double>(d + 1);
    packed_ = span < 9.0e18L;
    radix_ = d + 1;
  }
  bool packed() const noexcept { return packed_; }
  std::uint64_t key(const ExponentVector& e) const {
    std::uint64_t k = 0;
    for (auto x : e) k = k * radix_ + x;
    return k;
  }

 private:
  bool packed_ = false;
  std::uint64_t radix_ = 1;
};

// Monomial bases of A_F in every degree, chosen greedily among divisors of
// the support of F, so pairing matrices only need h_i x h_j entries.
struct DualContext {
  Polynomial F;
  std::uint64_t d = 0;
  std::vector<std::vector<ExponentVector>> basis;
  HilbertData hilbert;

  explicit DualContext(const Polynomial& dual) : F(dual) {
    if (F.is_zero()) throw ZeroPolynomial("dual generator must be nonzero");
    if (!F.is_homogeneous()) throw NotHomogeneous("dual generator " + F.to_string() + " is not homogeneous");
    d = F.homogeneous_degree();
    const auto divisors = divisors_by_degree(F);
    basis.resize(d + 1);
    hilbert.socle_degree = d;
    for (std::uint64_t t = 0; t <= d; ++t) {
      std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> column;
      const auto& dual_piece = divisors[d - t];
      for (std::size_t c = 0; c < dual_piece.size(); ++c) column.emplace(dual_piece[c], c);
      EchelonBasis eb(F.field());
      for (const auto& alpha : divisors[t]) {
        SparseVector v;
        for (const auto& [s, c] : F.terms())
          if (s.divisible_by(alpha)) v.emplace_back(column.at(s - alpha), c);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (eb.insert(std::move(v))) basis[t].push_back(alpha);
      }
      hilbert.h_vector.push_back(basis[t].size());
    }
  }
};

// Coefficients of G = ell^k o F, reduced modulo p after clearing
// denominators (rationals) or taken as residues (prime fields).
class CoefficientTable {
 public:
  CoefficientTable(const Polynomial& G, const MonomialKeys& keys, std::uint32_t p) : keys_(keys) {
    mpz_class lcm = 1;
    if (G.field().is_rational())
      for (const auto& [e, c] : G.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    for (const auto& [e, c] : G.terms()) {
      std::uint32_t r;
      if (G.field().is_rational()) {
        const mpq_class& q = c.rational();
        r = modp::reduce(q.get_num() * (lcm / q.get_den()), p);
      } else {
        r = c.residue();
      }
      if (r == 0) continue;
      if (keys_.packed())
        packed_.emplace(keys_.key(e), r);
      else
        hashed_.emplace(e, r);
    }
  }

  std::uint32_t at(const ExponentVector& alpha, const ExponentVector& beta, std::uint64_t ka,
                   std::uint64_t kb) const {
    if (keys_.packed()) {
      auto it = packed_.find(ka + kb);
      return it == packed_.end() ? 0 : it->second;
    }
    auto it = hashed_.find(alpha + beta);
    return it == hashed_.end() ? 0 : it->second;
  }

 private:
  const MonomialKeys& keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> packed_;
  std::unordered_map<ExponentVector, std::uint32_t, ExponentVectorHash> hashed_;
};

std::size_t exact_pairing_rank(const Polynomial& G, const std::vector<ExponentVector>& rows,
                               const std::vector<ExponentVector>& cols) {
  std::vector<SparseVector> m;
  m.reserve(rows.size());
  for (const auto& alpha : rows) {
    SparseVector v;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Scalar s = G.coefficient(alpha + cols[c]);
      if (!s.is_zero()) v.emplace_back(c, std::move(s));
    }
    m.push_back(std::move(v));
  }
  return sparse_rank(G.field(), m);
}

// Rank of the pairing matrix of G = ell^k o F between A_i and A_{d-i-k}.
std::size_t pairing_rank_from(const DualContext& ctx, const Polynomial& G, const MonomialKeys& keys,
                              std::uint64_t i, std::uint64_t k) {
  const std::uint64_t j = ctx.d - i - k;
  const auto& rows = ctx.basis[i];
  const auto& cols = ctx.basis[j];
  const std::size_t required = std::min(rows.size(), cols.size());
  if (required == 0 || G.is_zero()) return 0;

  const bool rational = G.field().is_rational();
  const std::uint32_t p = rational ? kCertificatePrime : G.field().characteristic();
  const CoefficientTable table(G, keys, p);
  std::vector<std::uint64_t> col_keys(cols.size(), 0);
  if (keys.packed())
    for (std::size_t c = 0; c < cols.size(); ++c) col_keys[c] = keys.key(cols[c]);
  std::vector<std::vector<std::uint32_t>> m(rows.size(), std::vector<std::uint32_t>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::uint64_t ka = keys.packed() ? keys.key(rows[r]) : 0;
    for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = table.at(rows[r], cols[c], ka, col_keys[c]);
  }
  const std::size_t r_mod_p = rank_mod_p(m, p);
  // Over QQ the rank mod p is a lower bound; reaching the maximum settles it.
  if (!rational || r_mod_p == required) return r_mod_p;
  return exact_pairing_rank(G, rows, cols);
}

void finish_report(LefschetzReport& report) {
  std::sort(report.rank_table.begin(), report.rank_table.end(),
            [](const RankEntry& a, const RankEntry& b) { return std::pair(a.k, a.i) < std::pair(b.k, b.i); });
  report.wlp = true;
  bool all = true;
  for (const auto& e : report.rank_table) {
    if (e.maximal()) continue;
    all = false;
    if (e.k == 1) report.wlp = false;
    if (!report.first_failure) {
      report.first_failure = std::pair(e.i, e.k);
      report.failure_degree = e.i + e.k;
    }
  }
  if (report.mode == LefschetzMode::kStrong) report.slp = all;
  report.certified = report.holds();
}

LefschetzReport evaluate_dual(const DualContext& ctx, const Polynomial& ell, LefschetzMode mode) {
  require_linear_form(ell, ctx.F.field(), ctx.F.nvars());
  LefschetzReport report;
  report.ell = ell;
  report.field = ctx.F.field();
  report.mode = mode;
  report.hilbert = ctx.hilbert;
  const std::uint64_t d = ctx.d;
  const MonomialKeys keys(ctx.F.nvars(), d);
  const std::uint64_t k_max = mode == LefschetzMode::kWeak ? std::min<std::uint64_t>(1, d) : d;
  Polynomial G = ctx.F;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    G = contract(ell, G);
    // rank(i, k) = rank(d - i - k, k) by the symmetry of the pairing.
    for (std::uint64_t i = 0; 2 * i <= d - k; ++i) {
      const std::size_t required = std::min(ctx.hilbert.at(i), ctx.hilbert.at(i + k));
      const std::size_t achieved = pairing_rank_from(ctx, G, keys, i, k);
      report.rank_table.push_back({i, k, achieved, required});
      if (d - k - i != i) report.rank_table.push_back({d - k - i, k, achieved, required});
    }
  }
  finish_report(report);
  return report;
}

std::vector<ExponentVector> quotient_basis(const GradedQuotient::Piece& piece) {
  std::vector<bool> pivot(piece.standard.size(), false);
  for (auto c : piece.relations.pivot_columns()) pivot[c] = true;
  std::vector<ExponentVector> out;
  for (std::size_t c = 0; c < piece.standard.size(); ++c)
    if (!pivot[c]) out.push_back(piece.standard[c]);
  return out;
}

std::size_t multiplication_rank_with_power(const GradedQuotient& A, const Polynomial& ell_k, std::uint64_t i,
                                           std::uint64_t k) {
  const FieldSpec& field = A.ideal().field();
  std::vector<SparseVector> images;
  for (const auto& m : quotient_basis(A.piece(i)))
    images.push_back(A.normal_form(ell_k * Polynomial::monomial(field, m), i + k));
  return sparse_rank(field, images);
}

LefschetzReport evaluate_quotient(const GradedQuotient& A, const HilbertData& hilbert, const Polynomial& ell,
                                  LefschetzMode mode) {
  const auto& I = A.ideal();
  require_linear_form(ell, I.field(), I.nvars());
  LefschetzReport report;
  report.ell = ell;
  report.field = I.field();
  report.mode = mode;
  report.hilbert = hilbert;
  const std::uint64_t d = hilbert.socle_degree;
  const std::uint64_t k_max = mode == LefschetzMode::kWeak ? std::min<std::uint64_t>(1, d) : d;
  Polynomial ell_k = Polynomial::constant(I.field(), I.nvars(), Scalar::one(I.field()));
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    ell_k = ell_k * ell;
    for (std::uint64_t i = 0; i + k <= d; ++i) {
      const std::size_t required = std::min(hilbert.at(i), hilbert.at(i + k));
      const std::size_t achieved = required == 0 ? 0 : multiplication_rank_with_power(A, ell_k, i, k);
      report.rank_table.push_back({i, k, achieved, required});
    }
  }
  finish_report(report);
  return report;
}

Polynomial linear_form(const FieldSpec& field, const std::vector<long long>& coeffs) {
  Polynomial::Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    terms.emplace(ExponentVector::unit(coeffs.size(), i), Scalar::from_integer(field, coeffs[i]));
  return Polynomial(field, coeffs.size(), std::move(terms));
}

// Number of nonzero forms up to scaling over F_p, or nullopt past `limit`.
std::optional<std::size_t> projective_count(std::uint32_t p, std::size_t n, std::size_t limit) {
  // (p^n - 1) / (p - 1) = 1 + p + ... + p^(n-1)
  unsigned __int128 total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    if (total > limit) return std::nullopt;
    power *= p;
  }
  return static_cast<std::size_t>(total);
}

template <class Evaluate>
LefschetzReport search(const FieldSpec& field, std::size_t n, const LefschetzSearchStrategy& strategy,
                       Evaluate evaluate) {
  if (strategy.ell) {
    LefschetzReport r = evaluate(*strategy.ell);
    r.trials = 1;
    return r;
  }
  std::optional<LefschetzReport> best;
  std::size_t trials = 0;
  auto consider = [&](const Polynomial& ell) {
    LefschetzReport r = evaluate(ell);
    ++trials;
    const bool success = r.holds();
    if (!best || success || r.total_achieved() > best->total_achieved()) best = std::move(r);
    return success;
  };
  auto done = [&]() {
    best->trials = trials;
    return *best;
  };

  const std::vector<long long> ones(n, 1);
  if (n == 0) throw InvalidArgument("no variables");
  if (consider(linear_form(field, ones))) return done();

  if (field.is_prime()) {
    const std::uint32_t p = field.characteristic();
    if (auto count = projective_count(p, n, strategy.exhaustive_limit)) {
      // Forms whose first nonzero coefficient is 1, in lex order of coefficients.
      for (std::size_t lead = 0; lead < n; ++lead) {
        std::vector<long long> c(n, 0);
        c[lead] = 1;
        bool exhausted = false;
        while (!exhausted) {
          if (c != ones && consider(linear_form(field, c))) return done();
          exhausted = true;
          for (std::size_t pos = n; pos-- > lead + 1;) {
            if (static_cast<std::uint32_t>(++c[pos]) < p) {
              exhausted = false;
              break;
            }
            c[pos] = 0;
          }
        }
      }
      best->certified = true;  // every form up to scaling failed
      return done();
    }
  }

  std::mt19937_64 rng(strategy.seed);
  const std::size_t T = strategy.trials;
  for (std::size_t t = 0; t < T; ++t) {
    const long long range = t < T / 3 ? 1 : (t < 2 * T / 3 ? 3 : 99);
    const long long low = range == 1 ? 0 : -range;
    std::uniform_int_distribution<long long> dist(low, range);
    Polynomial ell;
    do {
      std::vector<long long> c(n);
      for (auto& x : c) x = dist(rng);
      ell = linear_form(field, c);
    } while (ell.is_zero());
    if (consider(ell)) return done();
  }
  return done();
}

}  // namespace

std::size_t pairing_rank(const Polynomial& F, const Polynomial& ell, std::uint64_t i, std::uint64_t k) {
  if (F.is_zero()) throw ZeroPolynomial("dual generator must be nonzero");
  if (!F.is_homogeneous()) throw NotHomogeneous("dual generator " + F.to_string() + " is not homogeneous");
  const std::uint64_t d = F.homogeneous_degree();
  if (k == 0 || i + k > d)
    throw DegreeOutOfRange("need k >= 1 and i + k <= " + std::to_string(d) + ", got i=" + std::to_string(i) +
                           " k=" + std::to_string(k));
  require_linear_form(ell, F.field(), F.nvars());
  const DualContext ctx(F);
  Polynomial G = F;
  for (std::uint64_t s = 0; s < k; ++s) G = contract(ell, G);
  return pairing_rank_from(ctx, G, MonomialKeys(F.nvars(), d), i, k);
}

std::size_t ideal_multiplication_rank(const GradedQuotient& A, const Polynomial& ell, std::uint64_t i,
                                      std::uint64_t k) {
  require_linear_form(ell, A.ideal().field(), A.ideal().nvars());
  if (k == 0) throw DegreeOutOfRange("k must be at least 1");
  return multiplication_rank_with_power(A, ell.pow(static_cast<std::uint32_t>(k)), i, k);
}

LefschetzReport evaluate_lefschetz(const Polynomial& F, const Polynomial& ell, LefschetzMode mode) {
  return evaluate_dual(DualContext(F), ell, mode);
}

LefschetzReport evaluate_lefschetz(const GradedIdealPresentation& I, const Polynomial& ell, LefschetzMode mode) {
  const GradedQuotient A(I);
  return evaluate_quotient(A, A.hilbert_data(), ell, mode);
}

LefschetzReport find_lefschetz_element(const Polynomial& F, LefschetzMode mode,
                                       const LefschetzSearchStrategy& strategy) {
  const DualContext ctx(F);
  return search(F.field(), F.nvars(), strategy,
                [&](const Polynomial& ell) { return evaluate_dual(ctx, ell, mode); });
}

LefschetzReport find_lefschetz_element(const GradedIdealPresentation& I, LefschetzMode mode,
                                       const LefschetzSearchStrategy& strategy) {
  const GradedQuotient A(I);
  const HilbertData hilbert = A.hilbert_data();
  return search(I.field(), I.nvars(), strategy,
                [&](const Polynomial& ell) { return evaluate_quotient(A, hilbert, ell, mode); });
}

LefschetzReport check_slp(const Polynomial& F, const LefschetzSearchStrategy& strategy) {
  return find_lefschetz_element(F, LefschetzMode::kStrong, strategy);
}

LefschetzReport check_wlp(const Polynomial& F, const LefschetzSearchStrategy& strategy) {
  return find_lefschetz_element(F, LefschetzMode::kWeak, strategy);
}

LefschetzReport check_wlp_from_ideal(const GradedIdealPresentation& I, const LefschetzSearchStrategy& strategy) {
  return find_lefschetz_element(I, LefschetzMode::kWeak, strategy);
}

LefschetzReport check_slp_from_ideal(const GradedIdealPresentation& I, const LefschetzSearchStrategy& strategy) {
  return find_lefschetz_element(I, LefschetzMode::kStrong, strategy);
}

}  // namespace invsys
