#include "invsys/inverse_system.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace invsys {

namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

using MonomialIndex = std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash>;

struct DegreePiece {
  std::vector<ExponentVector> monomials;  // decreasing lex
  MonomialIndex index;
};

// Divisors of the support monomials of F, grouped by degree. Any monomial
// outside this set contracts F to zero.
std::vector<DegreePiece> divisor_pieces(const Polynomial& F, std::uint64_t d) {
  std::vector<std::set<ExponentVector, std::greater<>>> sets(d + 1);
  const std::size_t n = F.nvars();
  for (const auto& [s, c] : F.terms()) {
    std::vector<std::uint64_t> bound(s.begin(), s.end());
    for (std::uint64_t t = 0; t <= d; ++t)
      for_each_bounded_monomial(n, t, bound, [&](const ExponentVector& e) { sets[t].insert(e); });
  }
  std::vector<DegreePiece> pieces(d + 1);
  for (std::uint64_t t = 0; t <= d; ++t) {
    pieces[t].monomials.assign(sets[t].begin(), sets[t].end());
    for (std::size_t i = 0; i < pieces[t].monomials.size(); ++i)
      pieces[t].index.emplace(pieces[t].monomials[i], i);
  }
  return pieces;
}

// Rows indexed by beta in D_{d-t}, columns by alpha in D_t; entry is the
// coefficient of X^beta in x^alpha o F. Its right kernel is Ann(F)_t
// restricted to D_t, and its rank is h_t.
std::vector<SparseVector> transposed_contraction_rows(const Polynomial& F, const DegreePiece& rows_t,
                                                      const DegreePiece& cols_dual) {
  std::vector<SparseVector> rows(cols_dual.monomials.size());
  for (std::size_t a = 0; a < rows_t.monomials.size(); ++a) {
    const auto& alpha = rows_t.monomials[a];
    for (const auto& [s, c] : F.terms()) {
      if (!s.divisible_by(alpha)) continue;
      rows[cols_dual.index.at(s - alpha)].emplace_back(a, c);
    }
  }
  return rows;
}

Polynomial sparse_to_polynomial(const FieldSpec& field, std::size_t n, const SparseVector& v,
                                const std::vector<ExponentVector>& monomials) {
  Polynomial::Terms terms;
  for (const auto& [i, c] : v) terms.emplace(monomials[i], c);
  return Polynomial(field, n, std::move(terms));
}

void require_dual_generator(const Polynomial& F) {
  if (F.is_zero()) throw ZeroPolynomial("dual generator must be nonzero");
  if (!F.is_homogeneous()) throw NotHomogeneous("dual generator " + F.to_string() + " is not homogeneous");
}

}  // namespace

// --- HilbertData -----------------------------------------------------------

bool HilbertData::is_palindromic() const {
  return std::equal(h_vector.begin(), h_vector.end(), h_vector.rbegin());
}

std::size_t HilbertData::total_dimension() const {
  std::size_t s = 0;
  for (auto h : h_vector) s += h;
  return s;
}

std::size_t HilbertData::at(std::int64_t t) const {
  if (t < 0 || static_cast<std::size_t>(t) >= h_vector.size()) return 0;
  return h_vector[static_cast<std::size_t>(t)];
}

// --- GradedIdealPresentation ----------------------------------------------

GradedIdealPresentation::GradedIdealPresentation(FieldSpec field, std::size_t nvars,
                                                 std::vector<Polynomial> generators)
    : field_(field), nvars_(nvars), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.field() != field_) throw FieldMismatch("generator over " + g.field().name());
    if (g.nvars() != nvars_) throw LengthMismatch("generator in the wrong number of variables");
    if (g.is_zero()) throw ZeroPolynomial("ideal generators must be nonzero");
    if (!g.is_homogeneous()) throw NotHomogeneous("generator " + g.to_string() + " is not homogeneous");
  }
}

std::vector<std::uint64_t> GradedIdealPresentation::generator_degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& g : generators_) out.push_back(g.homogeneous_degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GradedIdealPresentation::dimension_in_degree(std::uint64_t t) const {
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->dims.find(t); it != cache_->dims.end()) return it->second;
  }
  const std::size_t dim = GradedQuotient(*this).ideal_dim(t);
  record_dimension(t, dim);
  return dim;
}

void GradedIdealPresentation::record_dimension(std::uint64_t t, std::size_t dim) const {
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->dims.emplace(t, dim);
  if (!inserted && it->second != dim)
    throw Error("conflicting dimensions recorded for degree " + std::to_string(t));
}

std::map<std::uint64_t, std::size_t> GradedIdealPresentation::degreewise_dims() const {
  std::lock_guard lock(cache_->mu);
  return cache_->dims;
}

// --- GradedQuotient --------------------------------------------------------

GradedQuotient::GradedQuotient(const GradedIdealPresentation& ideal)
    : ideal_(ideal), pure_power_bound_(ideal.nvars(), kUnbounded) {
  for (const auto& g : ideal_.generators()) {
    if (g.term_count() != 1) {
      other_gens_.push_back(g);
      continue;
    }
    const auto& e = g.terms().begin()->first;
    monomial_gens_.push_back(e);
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) ++nonzero, last = i;
    if (nonzero == 1) pure_power_bound_[last] = std::min<std::uint64_t>(pure_power_bound_[last], e[last] - 1);
    if (nonzero == 0) std::fill(pure_power_bound_.begin(), pure_power_bound_.end(), 0);  // unit ideal
  }
}

const GradedQuotient::Piece& GradedQuotient::piece(std::uint64_t t) const {
  if (auto it = pieces_.find(t); it != pieces_.end()) return *it->second;
  const std::size_t n = ideal_.nvars();
  const bool unit = std::any_of(monomial_gens_.begin(), monomial_gens_.end(),
                                [](const ExponentVector& e) { return e.degree() == 0; });
  auto p = std::make_unique<Piece>(Piece{{}, {}, EchelonBasis(ideal_.field())});
  if (!unit) {
    for_each_bounded_monomial(n, t, pure_power_bound_, [&](const ExponentVector& e) {
      for (const auto& m : monomial_gens_)
        if (e.divisible_by(m)) return;
      p->index.emplace(e, p->standard.size());
      p->standard.push_back(e);
    });
  }
  for (const auto& g : other_gens_) {
    const auto dg = g.homogeneous_degree();
    if (dg > t) continue;
    const Piece& lower = piece(t - dg);
    for (const auto& m : lower.standard) {
      SparseVector v;
      for (const auto& [e, c] : g.terms()) {
        auto it = p->index.find(e + m);
        if (it != p->index.end()) v.emplace_back(it->second, c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      p->relations.insert(std::move(v));
    }
  }
  auto [it, inserted] = pieces_.emplace(t, std::move(p));
  return *it->second;
}

std::size_t GradedQuotient::dim(std::uint64_t t) const {
  const Piece& p = piece(t);
  return p.standard.size() - p.relations.rank();
}

std::size_t GradedQuotient::ideal_dim(std::uint64_t t) const {
  return count_monomials(ideal_.nvars(), t) - dim(t);
}

SparseVector GradedQuotient::normal_form(const Polynomial& f, std::uint64_t t) const {
  if (!f.is_zero() && f.homogeneous_degree() != t)
    throw DegreeOutOfRange("normal_form expects a form of degree " + std::to_string(t));
  const Piece& p = piece(t);
  SparseVector v;
  for (const auto& [e, c] : f.terms()) {
    auto it = p.index.find(e);
    if (it != p.index.end()) v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return p.relations.reduce(std::move(v));
}

HilbertData GradedQuotient::hilbert_data() const {
  std::uint64_t max_deg = 0;
  for (const auto& g : ideal_.generators()) max_deg = std::max(max_deg, g.homogeneous_degree());
  const std::uint64_t limit = ideal_.nvars() * (max_deg == 0 ? 0 : max_deg - 1) + 1;
  HilbertData h;
  for (std::uint64_t t = 0; t <= limit; ++t) {
    const std::size_t d = dim(t);
    if (d == 0) {
      if (t == 0) throw NotArtinian("ideal is the unit ideal");
      h.socle_degree = t - 1;
      return h;
    }
    h.h_vector.push_back(d);
  }
  throw NotArtinian("quotient does not vanish by degree " + std::to_string(limit));
}

// --- dual generator computations ------------------------------------------

AnnihilatorDegree annihilator_in_degree(const Polynomial& F, std::uint64_t t) {
  require_dual_generator(F);
  const std::uint64_t d = F.homogeneous_degree();
  if (t > d) return AnnihilatorDegree{true, {}};
  const std::size_t n = F.nvars();
  const GradedBasis rows_t = monomials_of_degree(n, t);
  const GradedBasis dual = monomials_of_degree(n, d - t);
  const DegreePiece rows_piece{rows_t.monomials, rows_t.index()};
  const DegreePiece dual_piece{dual.monomials, dual.index()};
  const auto rows = transposed_contraction_rows(F, rows_piece, dual_piece);
  AnnihilatorDegree out;
  for (const auto& k : sparse_kernel_basis(F.field(), rows, rows_t.size()))
    out.basis.push_back(sparse_to_polynomial(F.field(), n, k, rows_t.monomials));
  return out;
}

std::vector<std::vector<ExponentVector>> divisors_by_degree(const Polynomial& F) {
  require_dual_generator(F);
  auto pieces = divisor_pieces(F, F.homogeneous_degree());
  std::vector<std::vector<ExponentVector>> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) out.push_back(std::move(p.monomials));
  return out;
}

HilbertData hilbert_function(const Polynomial& F) {
  require_dual_generator(F);
  const std::uint64_t d = F.homogeneous_degree();
  const auto pieces = divisor_pieces(F, d);
  HilbertData h{d, {}};
  for (std::uint64_t t = 0; t <= d; ++t) {
    const auto rows = transposed_contraction_rows(F, pieces[t], pieces[d - t]);
    h.h_vector.push_back(sparse_rank(F.field(), rows));
  }
  return h;
}

GradedIdealPresentation minimal_generators(const Polynomial& F, std::optional<std::uint64_t> t_max) {
  require_dual_generator(F);
  const std::uint64_t d = F.homogeneous_degree();
  const std::uint64_t last = t_max.value_or(d + 1);
  if (last < d + 1) throw InvalidArgument("t_max must be at least deg F + 1");
  const std::size_t n = F.nvars();
  const FieldSpec& field = F.field();
  const auto pieces = divisor_pieces(F, d);
  const DegreePiece empty;
  auto piece_at = [&](std::uint64_t t) -> const DegreePiece& { return t <= d ? pieces[t] : empty; };

  std::vector<Polynomial> generators;
  GradedIdealPresentation scratch(field, n, {});
  std::vector<SparseVector> kernel_prev;  // K_{t-1} over D_{t-1}

  for (std::uint64_t t = 0; t <= last; ++t) {
    const DegreePiece& dt = piece_at(t);
    const DegreePiece& dprev = t > 0 ? piece_at(t - 1) : empty;

    // Minimal monomial generators of the monomial ideal killing F: outside
    // D_t, with every predecessor inside D_{t-1}.
    std::set<ExponentVector, std::greater<>> nmin_set;
    for (const auto& delta : dprev.monomials) {
      for (std::size_t i = 0; i < n; ++i) {
        ExponentVector alpha = delta;
        ++alpha[i];
        if (dt.index.count(alpha)) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < n && minimal; ++j) {
          if (alpha[j] == 0) continue;
          ExponentVector pred = alpha;
          --pred[j];
          minimal = dprev.index.count(pred) > 0;
        }
        if (minimal) nmin_set.insert(alpha);
      }
    }
    const std::vector<ExponentVector> nmin(nmin_set.begin(), nmin_set.end());
    MonomialIndex nmin_index;
    for (std::size_t i = 0; i < nmin.size(); ++i) nmin_index.emplace(nmin[i], dt.monomials.size() + i);

    // K_t: kernel of the contraction map restricted to D_t.
    std::vector<SparseVector> kernel_t;
    if (t <= d)
      kernel_t = sparse_kernel_basis(field, transposed_contraction_rows(F, dt, piece_at(d - t)),
                                     dt.monomials.size());

    // Projection of m * I_{t-1} onto the coordinates D_t + N^min_t.
    EchelonBasis span(field);
    for (const auto& k : kernel_prev) {
      for (std::size_t i = 0; i < n; ++i) {
        SparseVector v;
        for (const auto& [a, c] : k) {
          ExponentVector alpha = dprev.monomials[a];
          ++alpha[i];
          if (auto it = dt.index.find(alpha); it != dt.index.end())
            v.emplace_back(it->second, c);
          else if (auto jt = nmin_index.find(alpha); jt != nmin_index.end())
            v.emplace_back(jt->second, c);
        }
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        span.insert(std::move(v));
      }
    }

    for (std::size_t i = 0; i < nmin.size(); ++i) {
      SparseVector unit{{dt.monomials.size() + i, Scalar::one(field)}};
      if (span.insert(std::move(unit))) generators.push_back(Polynomial::monomial(field, nmin[i]));
    }
    for (const auto& k : kernel_t)
      if (span.insert(k)) generators.push_back(sparse_to_polynomial(field, n, k, dt.monomials));

    // dim Ann(F)_t = (monomials outside D_t) + dim K_t
    scratch.record_dimension(t, count_monomials(n, t) - dt.monomials.size() + kernel_t.size());
    kernel_prev = std::move(kernel_t);
  }

  GradedIdealPresentation out(field, n, std::move(generators));
  for (const auto& [t, dim] : scratch.degreewise_dims()) out.record_dimension(t, dim);
  return out;
}

CompleteIntersectionVerdict is_complete_intersection_oracle(const Polynomial& F) {
  require_dual_generator(F);
  const auto kept = F.support_variables();
  std::vector<std::size_t> dropped;
  std::vector<std::size_t> new_index(F.nvars(), 0);
  for (std::size_t i = 0, k = 0; i < F.nvars(); ++i) {
    if (k < kept.size() && kept[k] == i)
      new_index[i] = k++;
    else
      dropped.push_back(i);
  }
  const Polynomial core = F.remap(kept.size(), new_index);
  GradedIdealPresentation ideal = kept.empty()
                                      ? GradedIdealPresentation(F.field(), 0, {})
                                      : minimal_generators(core);
  const bool ci = ideal.mu() == kept.size();
  return CompleteIntersectionVerdict{ci, kept.size(), kept, std::move(dropped), std::move(ideal)};
}

bool ideal_equals_annihilator(const GradedIdealPresentation& J, const Polynomial& F) {
  require_dual_generator(F);
  if (J.field() != F.field() || J.nvars() != F.nvars()) return false;
  for (const auto& g : J.generators())
    if (!contract(g, F).is_zero()) return false;
  const HilbertData h = hilbert_function(F);
  const GradedQuotient quotient(J);
  for (std::uint64_t t = 0; t <= h.socle_degree + 1; ++t) {
    if (quotient.dim(t) != h.at(static_cast<std::int64_t>(t))) return false;
    J.record_dimension(t, quotient.ideal_dim(t));
  }
  return true;
}

std::size_t socle_dimension(const GradedIdealPresentation& I) {
  const GradedQuotient quotient(I);
  const HilbertData h = quotient.hilbert_data();
  const std::size_t n = I.nvars();
  const FieldSpec& field = I.field();
  std::size_t socle = 0;
  for (std::uint64_t t = 0; t <= h.socle_degree; ++t) {
    const auto& here = quotient.piece(t);
    const std::size_t block = quotient.piece(t + 1).standard.size();
    // a in A_t lies in the socle iff x_i * a = 0 for every i.
    EchelonBasis images(field);
    for (const auto& m : here.standard) {
      SparseVector v;
      for (std::size_t i = 0; i < n; ++i) {
        const auto nf = quotient.normal_form(
            Polynomial::monomial(field, m + ExponentVector::unit(n, i)), t + 1);
        for (const auto& [c, s] : nf) v.emplace_back(i * block + c, s);
      }
      images.insert(std::move(v));
    }
    socle += quotient.dim(t) - images.rank();
  }
  return socle;
}

std::size_t socle_dimension(const Polynomial& F) {
  require_dual_generator(F);
  return socle_dimension(minimal_generators(F));
}

}  // namespace invsys
