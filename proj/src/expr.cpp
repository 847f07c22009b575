#include "sliceq/expr.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "sliceq/error.hpp"
#include "sliceq/json_io.hpp"

namespace sliceq {

namespace {

using Kind = ExprNode::Kind;
using NodePtr = std::shared_ptr<const ExprNode>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SliceError(ErrorKind::ParseError,
                     "column " + std::to_string(i_ + 1) + ": " + msg + " in \"" +
                         std::string(s_) + "\"");
  }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  double number() {
    skip_ws();
    const char* begin = s_.data() + i_;
    const char* end = s_.data() + s_.size();
    if (begin != end && *begin == '+') ++begin;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  Quaternion quat() {
    expect('(');
    double x[4];
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      x[k] = number();
    }
    expect(')');
    return {x[0], x[1], x[2], x[3]};
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
      ++i_;
    }
    return std::string(s_.substr(start, i_ - start));
  }

  std::string path() {
    skip_ws();
    std::string out;
    if (i_ < s_.size() && s_[i_] == '"') {
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') out += s_[i_++];
      if (i_ == s_.size()) fail("unterminated string");
      ++i_;
    } else {
      while (i_ < s_.size() && s_[i_] != ')') out += s_[i_++];
      while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    }
    if (out.empty()) fail("expected a file path");
    return out;
  }

  NodePtr expr() {
    skip_ws();
    auto node = std::make_shared<ExprNode>();
    node->pos = i_ + 1;
    if (i_ == s_.size()) fail("expected an expression");
    const char c = s_[i_];
    if (c == '(') {
      node->kind = Kind::Literal;
      node->value = quat();
      return node;
    }
    if (c == '-' || c == '+' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      node->kind = Kind::Literal;
      node->value = Quaternion{number()};
      return node;
    }
    const std::size_t name_pos = i_;
    const std::string name = ident();
    if (name.empty()) fail("unexpected character");
    if (name == "q") {
      node->kind = Kind::Var;
      return node;
    }
    static const std::map<std::string, Kind> calls = {
        {"moebius", Kind::Moebius}, {"pow", Kind::Pow},     {"star", Kind::Star},
        {"sum", Kind::Sum},         {"rmul", Kind::RMul},   {"recip", Kind::Recip},
        {"cayley_conj", Kind::CayleyConj}, {"coeffs", Kind::Coeffs}};
    const auto it = calls.find(name);
    if (it == calls.end()) {
      i_ = name_pos;
      fail("unknown function '" + name + "'");
    }
    node->kind = it->second;
    expect('(');
    switch (node->kind) {
      case Kind::Moebius:
        node->value = quat();
        break;
      case Kind::Pow: {
        const std::size_t at = i_;
        const double n = number();
        if (n < 0 || n != static_cast<double>(static_cast<std::size_t>(n))) {
          i_ = at;
          fail("pow needs a non-negative integer");
        }
        node->power = static_cast<std::size_t>(n);
        break;
      }
      case Kind::Star:
      case Kind::Sum:
        node->args.push_back(expr());
        expect(',');
        node->args.push_back(expr());
        break;
      case Kind::RMul:
        node->args.push_back(expr());
        expect(',');
        skip_ws();
        node->value = peek('(') ? quat() : Quaternion{number()};
        break;
      case Kind::Recip:
      case Kind::CayleyConj:
        node->args.push_back(expr());
        break;
      case Kind::Coeffs:
        node->path = path();
        break;
      default:
        break;
    }
    expect(')');
    return node;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

[[noreturn]] void context_error(const ExprNode& n, const std::string& msg) {
  throw SliceError(ErrorKind::ParseError, "column " + std::to_string(n.pos) + ": " + msg);
}

RegularSeries series_of(const ExprNode& n, std::size_t trunc) {
  switch (n.kind) {
    case Kind::Var:
      return RegularSeries::identity();
    case Kind::Literal:
      return RegularSeries::constant(n.value);
    case Kind::Moebius:
      return moebius(n.value, trunc);
    case Kind::Pow:
      return RegularSeries::power(n.power);
    case Kind::Star:
      return star(series_of(*n.args[0], trunc), series_of(*n.args[1], trunc),
                  std::max(kDefaultStarCap, trunc));
    case Kind::Sum:
      return series_of(*n.args[0], trunc) + series_of(*n.args[1], trunc);
    case Kind::RMul:
      return series_of(*n.args[0], trunc) * n.value;
    case Kind::Recip:
      return reciprocal(series_of(*n.args[0], trunc), trunc);
    case Kind::CayleyConj:
      context_error(n, "cayley_conj yields a half-space map, not a ball series");
    case Kind::Coeffs:
      return load_coeffs(n.path);
  }
  context_error(n, "unsupported expression");
}

SliceMap map_of(const ExprNode& n, std::size_t trunc) {
  switch (n.kind) {
    case Kind::Var:
      return SliceMap::identity();
    case Kind::Literal:
      return SliceMap::constant(n.value);
    case Kind::Moebius: {
      // (1 - qū)^{-*} * (q - u)
      const Quaternion u = n.value;
      if (u.norm() >= 1.0) {
        throw SliceError(ErrorKind::ParameterOutOfBall, "moebius parameter " + to_string(u));
      }
      return quotient(SliceMap::affine(-u.conj(), Quaternion{1.0}),
                      SliceMap::affine(Quaternion{1.0}, -u));
    }
    case Kind::Pow:
      return SliceMap::power(n.power);
    case Kind::Star:
      return star(map_of(*n.args[0], trunc), map_of(*n.args[1], trunc));
    case Kind::Sum:
      return map_of(*n.args[0], trunc) + map_of(*n.args[1], trunc);
    case Kind::RMul:
      return rmul(map_of(*n.args[0], trunc), n.value);
    case Kind::Recip:
      return reciprocal(map_of(*n.args[0], trunc));
    case Kind::CayleyConj:
      return SliceMap::cayley_conjugate(series_of(*n.args[0], trunc));
    case Kind::Coeffs:
      return SliceMap::from_series(load_coeffs(n.path), n.path);
  }
  context_error(n, "unsupported expression");
}

}  // namespace

FunctionSpec parse_function(std::string_view text) {
  return FunctionSpec{std::string(text), Parser(text).parse()};
}

RegularSeries ball_function(const FunctionSpec& spec, std::size_t truncation) {
  return series_of(*spec.root, truncation);
}

SliceMap halfspace_function(const FunctionSpec& spec, std::size_t truncation) {
  return map_of(*spec.root, truncation);
}

}  // namespace sliceq
