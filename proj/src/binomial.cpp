#include "invsys/binomial.hpp"

#include <algorithm>
#include <limits>

namespace invsys {

std::string to_string(ClassificationReason reason) {
  switch (reason) {
    case ClassificationReason::kCompleteIntersection: return "CI";
    case ClassificationReason::kRTooSmall: return "R_TOO_SMALL";
    case ClassificationReason::kNoIndexSatisfiesALtQB: return "NO_INDEX_SATISFIES_A_LT_QB";
    case ClassificationReason::kCodimensionTwo: return "CI_CODIMENSION_TWO";
  }
  return "UNKNOWN";
}

std::uint64_t BinomialNormalForm::degree() const {
  std::uint64_t d = 0;
  for (auto x : a) d += x;
  for (std::size_t i = 0; i < r; ++i) d += b[i];
  for (const auto& t : tensor_factors) d += t.exponent;
  return d;
}

Polynomial BinomialNormalForm::core_polynomial() const {
  ExponentVector left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = a[i] + (i < r ? b[i] : 0);
    right[i] = a[i] + (i < r ? 0 : b[i]);
  }
  return Polynomial::monomial(field, left) - Polynomial::monomial(field, right, c);
}

Polynomial BinomialNormalForm::original_polynomial() const {
  std::vector<std::size_t> index(variable_map);
  Polynomial core = core_polynomial().remap(original_nvars, index);
  ExponentVector split(original_nvars);
  for (const auto& t : tensor_factors) split[t.variable] = t.exponent;
  return (core * Polynomial::monomial(field, split)).scaled(scale);
}

BinomialNormalForm normalize(const Polynomial& F) {
  if (F.term_count() != 2)
    throw NotBinomial("expected exactly two terms, got " + std::to_string(F.term_count()));
  if (!F.is_homogeneous()) throw NotHomogeneous("binomial " + F.to_string() + " is not homogeneous");
  auto it = F.terms().begin();
  const auto& [m1, lambda1] = *it++;
  const auto& [m2, lambda2] = *it;
  if (m1 == m2) throw DegenerateBinomial("both terms share one monomial");

  BinomialNormalForm nf;
  nf.field = F.field();
  nf.original_nvars = F.nvars();
  nf.scale = lambda1;
  nf.c = -(lambda2 / lambda1);
  const ExponentVector g = gcd(m1, m2);
  std::vector<std::size_t> left, right;
  for (std::size_t i = 0; i < F.nvars(); ++i) {
    if (m1[i] > g[i])
      left.push_back(i);
    else if (m2[i] > g[i])
      right.push_back(i);
    else
      nf.tensor_factors.push_back(TensorFactor{i, g[i]});
  }
  if (left.empty() || right.empty()) throw DegenerateBinomial("one monomial divides the other");
  nf.r = left.size();
  nf.variable_map = left;
  nf.variable_map.insert(nf.variable_map.end(), right.begin(), right.end());
  nf.n = nf.variable_map.size();
  for (std::size_t k = 0; k < nf.n; ++k) {
    const std::size_t i = nf.variable_map[k];
    nf.a.push_back(g[i]);
    nf.b.push_back(k < nf.r ? m1[i] - g[i] : m2[i] - g[i]);
  }
  return nf;
}

namespace {

struct Orientation {
  bool mirrored = false;
  std::vector<std::size_t> order;  // core indices, single-variable block last
  std::vector<std::uint32_t> a, b;
  Scalar c;
  std::uint64_t q = 0;
  std::optional<std::size_t> witness;  // 0-based
  std::uint64_t m = 0;
};

Orientation orient(const BinomialNormalForm& nf, bool mirrored) {
  Orientation o;
  o.mirrored = mirrored;
  if (!mirrored) {
    for (std::size_t k = 0; k < nf.n; ++k) o.order.push_back(k);
    o.c = nf.c;
  } else {
    for (std::size_t k = nf.r; k < nf.n; ++k) o.order.push_back(k);
    for (std::size_t k = 0; k < nf.r; ++k) o.order.push_back(k);
    o.c = nf.c.inverse();
  }
  for (auto k : o.order) {
    o.a.push_back(nf.a[k]);
    o.b.push_back(nf.b[k]);
  }
  const std::size_t last = nf.n - 1;
  o.q = (std::uint64_t{o.a[last]} + 1) / o.b[last];
  std::uint64_t min_ratio = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < last; ++i) {
    if (!o.witness && std::uint64_t{o.a[i]} < o.q * o.b[i]) o.witness = i;
    min_ratio = std::min<std::uint64_t>(min_ratio, o.a[i] / o.b[i]);
  }
  o.m = min_ratio + 1;
  return o;
}

std::vector<Orientation> valid_orientations(const BinomialNormalForm& nf) {
  std::vector<Orientation> out;
  if (nf.n - nf.r == 1) out.push_back(orient(nf, false));
  if (nf.r == 1) out.push_back(orient(nf, true));
  return out;
}

std::vector<Polynomial> closed_form_generators(const BinomialNormalForm& nf, const Orientation& o) {
  const std::size_t n = nf.n;
  const std::size_t N = nf.original_nvars;
  const FieldSpec& field = nf.field;
  auto original = [&](std::size_t oriented) { return nf.variable_map[o.order[oriented]]; };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i + 1 < n; ++i)
    gens.push_back(Polynomial::monomial(field, ExponentVector::unit(N, original(i), o.a[i] + o.b[i] + 1)));

  const std::size_t xn = original(n - 1);
  const std::uint64_t top = std::uint64_t{o.a[n - 1]} + 1;
  Polynomial G = Polynomial::monomial(field, ExponentVector::unit(N, xn, static_cast<std::uint32_t>(top)));
  Scalar coeff = Scalar::one(field);
  for (std::uint64_t j = 1; j <= o.m; ++j) {
    coeff *= o.c;
    ExponentVector e(N);
    for (std::size_t i = 0; i + 1 < n; ++i) e[original(i)] = static_cast<std::uint32_t>(j * o.b[i]);
    e[xn] = static_cast<std::uint32_t>(top - j * o.b[n - 1]);
    G = G + Polynomial::monomial(field, e, coeff);
  }
  gens.push_back(std::move(G));
  return gens;
}

std::vector<Polynomial> codimension_two_generators(const BinomialNormalForm& nf) {
  const auto ideal = minimal_generators(nf.core_polynomial());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(nf.original_nvars, nf.variable_map));
  return gens;
}

void append_tensor_generators(const BinomialNormalForm& nf, std::vector<Polynomial>& gens) {
  for (const auto& t : nf.tensor_factors)
    gens.push_back(Polynomial::monomial(
        nf.field, ExponentVector::unit(nf.original_nvars, t.variable, t.exponent + 1)));
}

void assert_annihilates(const std::vector<Polynomial>& gens, const Polynomial& F) {
  for (const auto& g : gens)
    if (!contract(g, F).is_zero())
      throw Error("generator " + g.to_string(default_variable_names(F.nvars(), false)) +
                  " does not annihilate " + F.to_string());
}

}  // namespace

ClassificationReport classify(const BinomialNormalForm& nf) {
  ClassificationReport report;
  report.normal_form = nf;
  const auto orientations = valid_orientations(nf);

  const Orientation* chosen = nullptr;
  for (const auto& o : orientations)
    if (o.witness) {
      chosen = &o;
      break;
    }

  if (chosen) {
    report.is_ci = true;
    report.reason = ClassificationReason::kCompleteIntersection;
    report.mirrored = chosen->mirrored;
    report.oriented_order = chosen->order;
    report.q = chosen->q;
    report.m = chosen->m;
    report.witness_index = *chosen->witness + 1;
    report.generators = explicit_generators(nf);
    return report;
  }
  if (!orientations.empty()) {
    report.mirrored = orientations.front().mirrored;
    report.oriented_order = orientations.front().order;
    report.q = orientations.front().q;
  }
  if (nf.n == 2) {
    report.is_ci = true;
    report.reason = ClassificationReason::kCodimensionTwo;
    report.generators = explicit_generators(nf);
    return report;
  }
  report.reason = orientations.empty() ? ClassificationReason::kRTooSmall
                                       : ClassificationReason::kNoIndexSatisfiesALtQB;
  return report;
}

std::vector<Polynomial> explicit_generators(const BinomialNormalForm& nf) {
  std::vector<Polynomial> gens;
  bool found = false;
  for (const auto& o : valid_orientations(nf)) {
    if (!o.witness) continue;
    // m <= q keeps every exponent of G nonnegative.
    if (o.m > o.q) throw Error("internal: m exceeds q for a witnessed orientation");
    gens = closed_form_generators(nf, o);
    found = true;
    break;
  }
  if (!found) {
    if (nf.n != 2) throw NotCI("binomial does not satisfy the complete intersection criterion");
    gens = codimension_two_generators(nf);
  }
  append_tensor_generators(nf, gens);
  assert_annihilates(gens, nf.original_polynomial());
  return gens;
}

CrossValidation cross_validate_report(const Polynomial& F) {
  CrossValidation cv{false, classify(normalize(F)), is_complete_intersection_oracle(F), std::nullopt};
  cv.agree = cv.report.is_ci == cv.oracle.is_ci;
  if (cv.report.is_ci) {
    const GradedIdealPresentation J(F.field(), F.nvars(), *cv.report.generators);
    cv.generators_match = ideal_equals_annihilator(J, F);
    cv.agree = cv.agree && *cv.generators_match;
  }
  return cv;
}

bool cross_validate(const Polynomial& F) { return cross_validate_report(F).agree; }

}  // namespace invsys
