#include "invsys/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace invsys {

std::uint64_t ExponentVector::degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExponentVector::divisible_by(const ExponentVector& alpha) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (alpha.e_[i] > e_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
  if (rhs.size() != size()) throw LengthMismatch("exponent vectors of different length");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += rhs.e_[i];
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const {
  if (rhs.size() != size()) throw LengthMismatch("exponent vectors of different length");
  ExponentVector r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (rhs.e_[i] > e_[i]) throw InvalidArgument("exponent subtraction underflow");
    r.e_[i] -= rhs.e_[i];
  }
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vectors of different length");
  ExponentVector g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g[i] = std::min(a[i], b[i]);
  return g;
}

std::optional<ExponentVector> contract_monomial(const ExponentVector& alpha,
                                                const ExponentVector& beta) {
  if (alpha.size() != beta.size())
    throw LengthMismatch("contracting exponent vectors of length " +
                         std::to_string(alpha.size()) + " and " + std::to_string(beta.size()));
  if (!beta.divisible_by(alpha)) return std::nullopt;
  return beta - alpha;
}

// --- Polynomial ------------------------------------------------------------

Polynomial::Polynomial(FieldSpec field, std::size_t nvars, Terms terms)
    : field_(field), nvars_(nvars) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != nvars)
      throw LengthMismatch("term has " + std::to_string(it->first.size()) +
                           " exponents, ring has " + std::to_string(nvars) + " variables");
    if (it->second.field() != field)
      throw FieldMismatch("coefficient in " + it->second.field().name() + ", polynomial in " +
                          field.name());
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, const Scalar& c) {
  return monomial(field, ExponentVector(nvars), c);
}

Polynomial Polynomial::monomial(FieldSpec field, const ExponentVector& e, const Scalar& c) {
  Terms t;
  t.emplace(e, c);
  return Polynomial(field, e.size(), std::move(t));
}

Polynomial Polynomial::monomial(FieldSpec field, const ExponentVector& e) {
  return monomial(field, e, Scalar::one(field));
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  return monomial(field, ExponentVector::unit(nvars, i));
}

std::optional<std::uint64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::uint64_t Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no degree");
  if (!is_homogeneous()) throw NotHomogeneous("polynomial " + to_string() + " is not homogeneous");
  return terms_.begin()->first.degree();
}

Scalar Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<std::size_t> Polynomial::support_variables() const {
  std::vector<bool> seen(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.field() != b.field())
    throw FieldMismatch(std::string(op) + " of polynomials over " + a.field().name() + " and " +
                        b.field().name());
  if (a.nvars() != b.nvars())
    throw LengthMismatch(std::string(op) + " of polynomials in " + std::to_string(a.nvars()) +
                         " and " + std::to_string(b.nvars()) + " variables");
}

void accumulate(Polynomial::Terms& acc, const ExponentVector& e, const Scalar& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

Polynomial Polynomial::operator-() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e, -c);
  return Polynomial(field_, nvars_, std::move(t));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Terms t;
  for (const auto& [e, v] : terms_) t.emplace_hint(t.end(), e, v * c);
  return Polynomial(field_, nvars_, std::move(t));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b, "sum");
  Polynomial::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) accumulate(t, e, c);
  return Polynomial(a.field_, a.nvars_, std::move(t));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b, "product");
  Polynomial::Terms t;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate(t, ea + eb, ca * cb);
  return Polynomial(a.field_, a.nvars_, std::move(t));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(field_, nvars_, Scalar::one(field_));
  for (std::uint32_t i = 0; i < k; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::remap(std::size_t new_nvars,
                             const std::vector<std::size_t>& new_index) const {
  if (new_index.size() != nvars_) throw LengthMismatch("remap table has wrong length");
  Terms t;
  for (const auto& [e, c] : terms_) {
    ExponentVector ne(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (new_index[i] >= new_nvars) throw InvalidArgument("remap target out of range");
      ne[new_index[i]] += e[i];
    }
    accumulate(t, ne, c);
  }
  return Polynomial(field_, new_nvars, std::move(t));
}

Polynomial Polynomial::to_field(const FieldSpec& target) const {
  if (target == field_) return *this;
  if (field_.is_prime()) throw FieldMismatch("cannot lift " + field_.name() + " to " + target.name());
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, Scalar::from_rational(target, c.rational()));
  return Polynomial(target, nvars_, std::move(t));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_display_string();
    bool negative = false;
    if (field_.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      coeff = mpq_class(-c.rational()).get_str();
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool constant = e.degree() == 0;
    if (coeff != "1" || constant) {
      os << coeff;
      if (!constant) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << (i < names.size() ? names[i] : "X" + std::to_string(i + 1));
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::string Polynomial::to_string() const { return to_string(default_variable_names(nvars_)); }

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial contract(const Polynomial& f, const Polynomial& F) {
  require_compatible(f, F, "contraction");
  Polynomial::Terms t;
  for (const auto& [alpha, cf] : f.terms())
    for (const auto& [beta, cF] : F.terms())
      if (beta.divisible_by(alpha)) accumulate(t, beta - alpha, cf * cF);
  return Polynomial(F.field(), F.nvars(), std::move(t));
}

// --- monomial enumeration --------------------------------------------------

void for_each_bounded_monomial(std::size_t n, std::uint64_t t,
                               const std::vector<std::uint64_t>& bound,
                               const std::function<void(const ExponentVector&)>& fn) {
  if (n == 0) {
    if (t == 0) fn(ExponentVector());
    return;
  }
  // suffix_cap[i] = max total degree placeable on variables i..n-1
  std::vector<std::uint64_t> suffix_cap(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    const auto b = bound[i];
    suffix_cap[i] = (b == std::numeric_limits<std::uint64_t>::max() ||
                     suffix_cap[i + 1] == std::numeric_limits<std::uint64_t>::max())
                        ? std::numeric_limits<std::uint64_t>::max()
                        : suffix_cap[i + 1] + b;
  }
  ExponentVector e(n);
  // Depth-first, largest exponent first, which yields decreasing lex order.
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == n) {
      if (left <= bound[i]) {
        e[i] = static_cast<ExponentVector::value_type>(left);
        fn(e);
        e[i] = 0;
      }
      return;
    }
    const std::uint64_t hi = std::min(left, bound[i]);
    for (std::uint64_t k = hi + 1; k-- > 0;) {
      if (left - k > suffix_cap[i + 1]) break;
      e[i] = static_cast<ExponentVector::value_type>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, t);
}

GradedBasis monomials_of_degree(std::size_t n, std::uint64_t t) {
  if (n == 0) throw InvalidArgument("monomials_of_degree needs at least one variable");
  GradedBasis basis{n, t, {}};
  basis.monomials.reserve(count_monomials(n, t));
  for_each_bounded_monomial(n, t, std::vector<std::uint64_t>(n, std::numeric_limits<std::uint64_t>::max()),
                            [&](const ExponentVector& e) { basis.monomials.push_back(e); });
  return basis;
}

std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> GradedBasis::index() const {
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> idx;
  idx.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) idx.emplace(monomials[i], i);
  return idx;
}

std::size_t count_monomials(std::size_t n, std::uint64_t t) {
  if (n == 0) return t == 0 ? 1 : 0;
  // C(t + n - 1, n - 1), computed incrementally so every step is exact.
  unsigned __int128 c = 1;
  for (std::size_t k = 1; k < n; ++k) {
    c = c * (t + k) / k;
    if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

std::vector<std::string> default_variable_names(std::size_t n, bool dual) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back((dual ? "X" : "x") + std::to_string(i + 1));
  return names;
}

}  // namespace invsys
