#pragma once

// Arithmetic expressions over one representation's variables.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-' unary | atom
//   atom   := number | ident | ident '(' args ')' | '(' expr ')'
//
// '^' is right-associative. Unary minus binds tighter than '^', so "-2^2" is
// (-2)^2 = 4; write "-(2^2)" for the other reading. Numbers are decimal with
// an optional exponent ("1e-3"). Whitespace is ignored.
//
// Functions: exp log sqrt sin cos sinh cosh abs (one argument),
//            min max pow (two arguments).

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isoconv/scalar_fn.hpp"

namespace isoconv {

enum class VarSet { H, F, FTilde, Z, G, WVol };

/// Variable names of a set: {t}, {theta}, {eta}, {r}, {l1, l2}, {J}.
const std::vector<std::string>& variables(VarSet set);
/// "h", "f", "ftilde", "z", "g", "wvol".
std::string_view to_string(VarSet set);
/// Raises InvalidConfig for unknown names.
VarSet var_set_from_string(std::string_view name);

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, Variable, Negate, Binary, Call };

  Kind kind = Kind::Number;
  double number = 0.0;
  std::string name;   // variable or function name
  int slot = -1;      // variable index within its set
  char op = 0;        // '+', '-', '*', '/', '^' for Binary
  std::vector<Expr> args;
};

Expr parse(std::string_view src, VarSet set);
Expr parse(std::string_view src, const std::vector<std::string>& vars);

/// Evaluates with variables bound by slot. Every non-finite intermediate raises
/// DomainError naming the operation.
double eval(const Expr& e, const std::vector<double>& slots);
/// Evaluates with variables bound by name; UnboundVariable if one is missing.
double eval(const Expr& e, const std::map<std::string, double>& bindings);

/// Fully parenthesized text that parses back to a structurally equal tree.
std::string print(const Expr& e);
bool structurally_equal(const Expr& a, const Expr& b);

/// Wraps a one-variable expression; the domain follows the set:
/// h (0, inf), f and ftilde [0, inf), z [1, inf), wvol (0, inf).
ScalarFn to_scalar_fn(const Expr& e, VarSet set);
/// Wraps an {l1, l2} expression; raises RegistrationFailed if not symmetric.
SymmetricFn2 to_symmetric_fn(const Expr& e);

/// Replaces whole identifiers equal to a key with the parenthesized value.
/// Raises ParamOutOfRange if a key does not occur in src, and InvalidConfig
/// if a key shadows a variable or function name.
std::string substitute_params(std::string_view src, const std::map<std::string, double>& params,
                              const std::vector<std::string>& vars);

}  // namespace isoconv
