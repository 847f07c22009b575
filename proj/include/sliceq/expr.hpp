#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sliceq/series.hpp"
#include "sliceq/slice_map.hpp"

namespace sliceq {

/// Function mini-language:
///
///   expr   := 'q' | quat | number | call
///   quat   := '(' number ',' number ',' number ',' number ')'
///   call   := moebius(quat) | pow(int) | star(expr, expr) | sum(expr, expr)
///           | rmul(expr, quat) | recip(expr) | cayley_conj(expr) | coeffs(path)
///
/// A path is either double-quoted or runs to the closing parenthesis.
struct ExprNode {
  enum class Kind { Var, Literal, Moebius, Pow, Star, Sum, RMul, Recip, CayleyConj, Coeffs };
  Kind kind = Kind::Var;
  Quaternion value;
  std::size_t power = 0;
  std::string path;
  std::vector<std::shared_ptr<const ExprNode>> args;
  std::size_t pos = 0;  // column of the first character, 1-based
};

struct FunctionSpec {
  std::string text;
  std::shared_ptr<const ExprNode> root;
};

/// Throws ParseError with the offending column.
FunctionSpec parse_function(std::string_view text);

/// Ball context: a power series. cayley_conj is rejected here.
RegularSeries ball_function(const FunctionSpec& spec, std::size_t truncation);

/// Half-space context: a pointwise map. Series-valued pieces (coeffs files)
/// are evaluated pointwise; cayley_conj takes a ball-context argument.
SliceMap halfspace_function(const FunctionSpec& spec, std::size_t truncation);

}  // namespace sliceq
