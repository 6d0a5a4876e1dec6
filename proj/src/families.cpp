#include "invsys/families.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace invsys {

Polynomial monomial_family(const ExponentVector& a, FieldSpec field) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0) throw InvalidArgument("monomial family needs every exponent positive");
  return Polynomial::monomial(field, a);
}

Polynomial sum_family(std::size_t s, const ExponentVector& tail, FieldSpec field) {
  if (s == 0) throw InvalidArgument("sum family needs s >= 1");
  const std::size_t n = 2 + tail.size();
  ExponentVector tail_exp(n);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (tail[i] == 0) throw InvalidArgument("tail exponents must be positive");
    tail_exp[2 + i] = tail[i];
  }
  Polynomial::Terms terms;
  for (std::size_t j = 0; j < s; ++j) {
    ExponentVector e = tail_exp;
    e[0] = static_cast<std::uint32_t>(s - 1 - j);
    e[1] = static_cast<std::uint32_t>(j);
    terms.emplace(e, Scalar::one(field));
  }
  return Polynomial(field, n, std::move(terms));
}

Polynomial tensor_dual(const Polynomial& F1, const Polynomial& F2) {
  if (F1.nvars() != F2.nvars()) throw LengthMismatch("tensor factors live in different rings");
  const auto s1 = F1.support_variables();
  for (auto v : F2.support_variables())
    if (std::binary_search(s1.begin(), s1.end(), v))
      throw OverlappingSupport("variable " + std::to_string(v + 1) + " occurs in both factors");
  return F1 * F2;
}

Polynomial tensor_dual_shifted(const Polynomial& F1, const Polynomial& F2) {
  const std::size_t n = F1.nvars() + F2.nvars();
  std::vector<std::size_t> first(F1.nvars()), second(F2.nvars());
  for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
  for (std::size_t i = 0; i < second.size(); ++i) second[i] = F1.nvars() + i;
  return tensor_dual(F1.remap(n, first), F2.remap(n, second));
}

namespace {

// Positive compositions of total into parts pieces, in lex order.
void compositions(std::uint32_t total, std::size_t parts, std::vector<std::uint32_t>& prefix,
                  const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (parts == 0) {
    if (total == 0) fn(prefix);
    return;
  }
  if (total < parts) return;
  const std::uint32_t hi = parts == 1 ? total : total - static_cast<std::uint32_t>(parts - 1);
  for (std::uint32_t x = parts == 1 ? total : 1; x <= hi; ++x) {
    prefix.push_back(x);
    compositions(total - x, parts - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

BinomialEnumerator::BinomialEnumerator(const SweepSpec& spec) : spec_(spec) {
  const std::size_t n = spec.n;
  if (n < 2) throw InvalidArgument("sweeps need at least two variables");
  if (n > 20) throw InvalidArgument("sweeps support at most 20 variables");
  if (spec.max_b == 0) throw InvalidArgument("max_b must be at least 1");

  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;  // (m1, m2) b-exponents
  std::set<Key> seen;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? left : right).push_back(i);
    if (!spec.both_orientations && left.size() < right.size()) continue;

    std::vector<std::uint32_t> bl(left.size(), 1);
    while (true) {
      std::uint32_t total = 0;
      for (auto x : bl) total += x;
      std::vector<std::uint32_t> prefix;
      compositions(total, right.size(), prefix, [&](const std::vector<std::uint32_t>& br) {
        Config c;
        c.left = left;
        c.b.assign(n, 0);
        std::vector<std::uint32_t> m1(n, 0), m2(n, 0);
        for (std::size_t i = 0; i < left.size(); ++i) c.b[left[i]] = m1[left[i]] = bl[i];
        for (std::size_t i = 0; i < right.size(); ++i) c.b[right[i]] = m2[right[i]] = br[i];
        c.duplicate = seen.count(Key{m2, m1}) > 0;
        seen.insert(Key{m1, m2});
        configs_.push_back(std::move(c));
      });
      std::size_t pos = bl.size();
      while (pos > 0 && bl[pos - 1] == spec.max_b) bl[--pos] = 1;
      if (pos == 0) break;
      ++bl[pos - 1];
    }
  }
  for (std::size_t i = 0; i < n; ++i) a_count_ *= spec.max_a + 1;
  a_.assign(n, 0);
}

std::size_t BinomialEnumerator::size() const noexcept { return configs_.size() * a_count_; }

std::optional<BinomialCase> BinomialEnumerator::next() {
  if (config_ >= configs_.size()) return std::nullopt;
  const Config& c = configs_[config_];
  const std::size_t n = spec_.n;

  BinomialCase out;
  out.index = emitted_++;
  out.a = a_;
  out.b = c.b;
  out.left = c.left;
  out.duplicate = c.duplicate;
  ExponentVector m1(n), m2(n);
  std::vector<bool> in_left(n, false);
  for (auto i : c.left) in_left[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    m1[i] = a_[i] + (in_left[i] ? c.b[i] : 0);
    m2[i] = a_[i] + (in_left[i] ? 0 : c.b[i]);
  }
  out.F = Polynomial::monomial(spec_.field, m1) - Polynomial::monomial(spec_.field, m2);

  // Advance the a-odometer, then the configuration.
  std::size_t pos = n;
  while (pos > 0 && a_[pos - 1] == spec_.max_a) a_[--pos] = 0;
  if (pos == 0)
    ++config_;
  else
    ++a_[pos - 1];
  return out;
}

std::vector<BinomialCase> enumerate_binomials(const SweepSpec& spec) {
  BinomialEnumerator e(spec);
  std::vector<BinomialCase> out;
  out.reserve(e.size());
  while (auto c = e.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace invsys
