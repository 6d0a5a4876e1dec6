#include "invsys/parse.hpp"

#include <cctype>
#include <limits>
#include <memory>

namespace invsys {

namespace {

struct Node {
  enum class Kind { kSum, kProduct, kPower, kVariable, kNumber } kind;
  std::vector<std::unique_ptr<Node>> children;
  std::vector<bool> negated;  // per child of a sum
  std::size_t variable = 0;
  mpz_class number;
  std::uint32_t exponent = 0;
};

using NodePtr = std::unique_ptr<Node>;

class VariableTable {
 public:
  explicit VariableTable(const std::optional<std::vector<std::string>>& fixed) {
    if (fixed) {
      names_ = *fixed;
      fixed_ = true;
      for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (names_[i] == names_[j]) throw InvalidArgument("variable " + names_[i] + " listed twice");
    }
  }

  std::size_t lookup(const std::string& name, std::size_t pos) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    if (fixed_)
      throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(pos));
    names_.push_back(name);
    return names_.size() - 1;
  }

  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
  bool fixed_ = false;
};

class Parser {
 public:
  Parser(std::string_view src, std::size_t offset, VariableTable& vars) : src_(src), offset_(offset), vars_(vars) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == src_.size()) fail("empty expression");
    NodePtr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t at = offset_ + pos_;
    throw SyntaxError(what, at);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  // '+', '-', U+2212, '*', U+00B7 are recognised; returns the token length.
  std::size_t match_minus() const {
    if (pos_ < src_.size() && src_[pos_] == '-') return 1;
    if (src_.substr(pos_, 3) == "\xE2\x88\x92") return 3;
    return 0;
  }
  std::size_t match_times() const {
    if (pos_ < src_.size() && src_[pos_] == '*') return 1;
    if (src_.substr(pos_, 2) == "\xC2\xB7") return 2;
    return 0;
  }

  bool starts_factor() const {
    if (pos_ >= src_.size()) return false;
    const unsigned char ch = static_cast<unsigned char>(src_[pos_]);
    return std::isalpha(ch) || std::isdigit(ch) || ch == '(';
  }

  NodePtr expr() {
    auto sum = std::make_unique<Node>();
    sum->kind = Node::Kind::kSum;
    bool negate = false;
    if (std::size_t len = match_minus()) {
      negate = true;
      pos_ += len;
    } else if (pos_ < src_.size() && src_[pos_] == '+') {
      ++pos_;
    }
    skip_space();
    sum->children.push_back(term());
    sum->negated.push_back(negate);
    while (true) {
      skip_space();
      if (std::size_t len = match_minus()) {
        pos_ += len;
        negate = true;
      } else if (pos_ < src_.size() && src_[pos_] == '+') {
        ++pos_;
        negate = false;
      } else {
        break;
      }
      skip_space();
      sum->children.push_back(term());
      sum->negated.push_back(negate);
    }
    return sum;
  }

  NodePtr term() {
    auto prod = std::make_unique<Node>();
    prod->kind = Node::Kind::kProduct;
    prod->children.push_back(factor());
    while (true) {
      skip_space();
      if (std::size_t len = match_times()) {
        pos_ += len;
        skip_space();
        prod->children.push_back(factor());
      } else if (starts_factor()) {
        prod->children.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  NodePtr factor() {
    NodePtr b = base();
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      skip_space();
      if (match_minus()) {
        const std::size_t at = offset_ + pos_;
        throw NegativeExponent("negative exponent at position " + std::to_string(at));
      }
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("expected a nonnegative integer exponent");
      const mpz_class e = natural();
      if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
      auto p = std::make_unique<Node>();
      p->kind = Node::Kind::kPower;
      p->exponent = static_cast<std::uint32_t>(e.get_ui());
      p->children.push_back(std::move(b));
      return p;
    }
    return b;
  }

  NodePtr base() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const unsigned char ch = static_cast<unsigned char>(src_[pos_]);
    if (ch == '(') {
      ++pos_;
      skip_space();
      NodePtr e = expr();
      skip_space();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(ch)) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::kNumber;
      n->number = natural();
      return n;
    }
    if (std::isalpha(ch)) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      auto v = std::make_unique<Node>();
      v->kind = Node::Kind::kVariable;
      v->variable = vars_.lookup(std::string(src_.substr(start, pos_ - start)), offset_ + start);
      return v;
    }
    fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  mpz_class natural() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return mpz_class(std::string(src_.substr(start, pos_ - start)));
  }

  std::string_view src_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  VariableTable& vars_;
};

Polynomial evaluate(const Node& node, const FieldSpec& field, std::size_t n) {
  switch (node.kind) {
    case Node::Kind::kNumber:
      return Polynomial::constant(field, n, Scalar::from_integer(field, node.number));
    case Node::Kind::kVariable:
      return Polynomial::variable(field, n, node.variable);
    case Node::Kind::kPower:
      return evaluate(*node.children.front(), field, n).pow(node.exponent);
    case Node::Kind::kProduct: {
      Polynomial p = evaluate(*node.children.front(), field, n);
      for (std::size_t i = 1; i < node.children.size(); ++i) p = p * evaluate(*node.children[i], field, n);
      return p;
    }
    case Node::Kind::kSum: {
      Polynomial s(field, n);
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        Polynomial t = evaluate(*node.children[i], field, n);
        s = node.negated[i] ? s - t : s + t;
      }
      return s;
    }
  }
  throw Error("unreachable expression node");
}

bool valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view src, const FieldSpec& field,
                                  const std::optional<std::vector<std::string>>& vars) {
  VariableTable table(vars);
  Parser parser(src, 0, table);
  const NodePtr ast = parser.parse();
  const std::size_t n = table.names().size();
  return ParsedPolynomial{evaluate(*ast, field, n), table.names()};
}

ParsedIdeal parse_ideal(std::string_view src, const FieldSpec& field,
                        const std::optional<std::vector<std::string>>& vars) {
  VariableTable table(vars);
  std::vector<NodePtr> asts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = src.find(';', start);
    const std::string_view piece = src.substr(start, end == std::string_view::npos ? end : end - start);
    Parser parser(piece, start, table);
    asts.push_back(parser.parse());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  ParsedIdeal out;
  out.variables = table.names();
  for (const auto& ast : asts) out.generators.push_back(evaluate(*ast, field, out.variables.size()));
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view src) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) return;
    if (!valid_variable_name(current)) throw SyntaxError("invalid variable name '" + current + "'", 0);
    out.push_back(current);
    current.clear();
  };
  for (char ch : src) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      current.push_back(ch);
  }
  flush();
  if (out.empty()) throw SyntaxError("empty variable list", 0);
  return out;
}

}  // namespace invsys
