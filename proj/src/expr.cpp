#include "isoconv/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "isoconv/format.hpp"

namespace isoconv {

const std::vector<std::string>& variables(VarSet set) {
  static const std::array<std::vector<std::string>, 6> sets = {{
      {"t"},
      {"theta"},
      {"eta"},
      {"r"},
      {"l1", "l2"},
      {"J"},
  }};
  return sets[static_cast<std::size_t>(set)];
}

std::string_view to_string(VarSet set) {
  static constexpr std::array<std::string_view, 6> names = {"h", "f", "ftilde", "z", "g", "wvol"};
  return names[static_cast<std::size_t>(set)];
}

VarSet var_set_from_string(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    const auto s = static_cast<VarSet>(i);
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown representation '" + std::string(name) + "'");
}

namespace {

struct FunctionInfo {
  std::string_view name;
  int arity;
};

constexpr std::array<FunctionInfo, 11> kFunctions = {{
    {"exp", 1},
    {"log", 1},
    {"sqrt", 1},
    {"sin", 1},
    {"cos", 1},
    {"sinh", 1},
    {"cosh", 1},
    {"abs", 1},
    {"min", 2},
    {"max", 2},
    {"pow", 2},
}};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Length of the number literal starting at i, 0 if none.
std::size_t number_length(std::string_view s, std::size_t i) {
  std::size_t j = i;
  bool mantissa = false;
  while (j < s.size() && digit(s[j])) ++j, mantissa = true;
  if (j < s.size() && s[j] == '.') {
    ++j;
    while (j < s.size() && digit(s[j])) ++j, mantissa = true;
  }
  if (!mantissa) return 0;
  if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
    std::size_t k = j + 1;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
    if (k < s.size() && digit(s[k])) {
      while (k < s.size() && digit(s[k])) ++k;
      j = k;
    }
  }
  return j - i;
}

Expr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  Expr run() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "expression");
    Expr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "operator or end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  static Expr binary(char op, Expr a, Expr b) {
    Node n;
    n.kind = Node::Kind::Binary;
    n.op = op;
    n.args = {std::move(a), std::move(b)};
    return make_node(std::move(n));
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary('+', lhs, term());
      } else if (accept('-')) {
        lhs = binary('-', lhs, term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = binary('*', lhs, factor());
      } else if (accept('/')) {
        lhs = binary('/', lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = unary();
    if (accept('^')) return binary('^', base, factor());
    return base;
  }

  Expr unary() {
    if (accept('-')) {
      Node n;
      n.kind = Node::Kind::Negate;
      n.args = {unary()};
      return make_node(std::move(n));
    }
    return atom();
  }

  Expr atom() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "operand");
    const char c = src_[pos_];

    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }

    if (const std::size_t len = number_length(src_, pos_); len > 0) {
      Node n;
      n.kind = Node::Kind::Number;
      const char* first = src_.data() + pos_;
      const auto res = std::from_chars(first, first + len, n.number);
      if (res.ec != std::errc() || !std::isfinite(n.number)) throw SyntaxError(pos_, "finite number");
      pos_ += len;
      return make_node(std::move(n));
    }

    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      skip_ws();
      const bool call = pos_ < src_.size() && src_[pos_] == '(';
      if (call) return call_node(name, start);

      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end()) {
        Node n;
        n.kind = Node::Kind::Variable;
        n.name = name;
        n.slot = static_cast<int>(it - vars_.begin());
        return make_node(std::move(n));
      }
      if (find_function(name)) throw SyntaxError(pos_, "'(' after function name '" + name + "'");
      throw Error(ErrorKind::UnknownIdentifier,
                  "unknown identifier '" + name + "' at position " + std::to_string(start));
    }

    throw SyntaxError(pos_, "operand");
  }

  Expr call_node(const std::string& name, std::size_t start) {
    const FunctionInfo* fn = find_function(name);
    if (!fn) {
      throw Error(ErrorKind::UnknownIdentifier,
                  "unknown function '" + name + "' at position " + std::to_string(start));
    }
    expect('(');
    Node n;
    n.kind = Node::Kind::Call;
    n.name = name;
    if (!accept(')')) {
      do {
        n.args.push_back(expr());
      } while (accept(','));
      expect(')');
    }
    if (static_cast<int>(n.args.size()) != fn->arity) {
      throw Error(ErrorKind::ArityError, name + " takes " + std::to_string(fn->arity) + " argument(s), got " +
                                             std::to_string(n.args.size()) + " at position " +
                                             std::to_string(start));
    }
    return make_node(std::move(n));
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::DomainError, std::string(what) + " produced a non-finite value");
  return v;
}

double apply(const std::string& fn, double a, double b) {
  if (fn == "exp") return finite(std::exp(a), "exp");
  if (fn == "log") {
    if (!(a > 0.0)) throw Error(ErrorKind::DomainError, "log of non-positive argument " + format_real(a));
    return std::log(a);
  }
  if (fn == "sqrt") {
    if (a < 0.0) throw Error(ErrorKind::DomainError, "sqrt of negative argument " + format_real(a));
    return std::sqrt(a);
  }
  if (fn == "sin") return std::sin(a);
  if (fn == "cos") return std::cos(a);
  if (fn == "sinh") return finite(std::sinh(a), "sinh");
  if (fn == "cosh") return finite(std::cosh(a), "cosh");
  if (fn == "abs") return std::abs(a);
  if (fn == "min") return std::min(a, b);
  if (fn == "max") return std::max(a, b);
  if (fn == "pow") return finite(std::pow(a, b), "pow");
  throw Error(ErrorKind::UnknownIdentifier, "unknown function '" + fn + "'");
}

double eval_node(const Node& n, const std::vector<double>& slots) {
  switch (n.kind) {
    case Node::Kind::Number: return n.number;
    case Node::Kind::Variable:
      if (n.slot < 0 || static_cast<std::size_t>(n.slot) >= slots.size()) {
        throw Error(ErrorKind::UnboundVariable, "variable '" + n.name + "' is not bound");
      }
      return finite(slots[static_cast<std::size_t>(n.slot)], "variable binding");
    case Node::Kind::Negate: return -eval_node(*n.args[0], slots);
    case Node::Kind::Binary: {
      const double a = eval_node(*n.args[0], slots);
      const double b = eval_node(*n.args[1], slots);
      switch (n.op) {
        case '+': return finite(a + b, "addition");
        case '-': return finite(a - b, "subtraction");
        case '*': return finite(a * b, "multiplication");
        case '/':
          if (b == 0.0) throw Error(ErrorKind::DomainError, "division by zero");
          return finite(a / b, "division");
        case '^': return finite(std::pow(a, b), "power");
        default: break;
      }
      throw Error(ErrorKind::SyntaxError, "unknown operator");
    }
    case Node::Kind::Call: {
      const double a = eval_node(*n.args[0], slots);
      const double b = n.args.size() > 1 ? eval_node(*n.args[1], slots) : 0.0;
      return apply(n.name, a, b);
    }
  }
  return 0.0;
}

}  // namespace

Expr parse(std::string_view src, const std::vector<std::string>& vars) { return Parser(src, vars).run(); }

Expr parse(std::string_view src, VarSet set) { return parse(src, variables(set)); }

double eval(const Expr& e, const std::vector<double>& slots) { return eval_node(*e, slots); }

double eval(const Expr& e, const std::map<std::string, double>& bindings) {
  // Slots were fixed at parse time; rebuild the slot vector from names.
  int max_slot = -1;
  std::vector<std::pair<int, std::string>> slot_names;
  std::vector<const Node*> stack{e.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->kind == Node::Kind::Variable) {
      slot_names.emplace_back(n->slot, n->name);
      max_slot = std::max(max_slot, n->slot);
    }
    for (const auto& a : n->args) stack.push_back(a.get());
  }
  std::vector<double> slots(static_cast<std::size_t>(max_slot + 1), 0.0);
  for (const auto& [slot, name] : slot_names) {
    const auto it = bindings.find(name);
    if (it == bindings.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + name + "' is not bound");
    slots[static_cast<std::size_t>(slot)] = it->second;
  }
  return eval(e, slots);
}

std::string print(const Expr& e) {
  const Node& n = *e;
  switch (n.kind) {
    case Node::Kind::Number: return format_real(n.number);
    case Node::Kind::Variable: return n.name;
    case Node::Kind::Negate: return "(-" + print(n.args[0]) + ")";
    case Node::Kind::Binary: return "(" + print(n.args[0]) + " " + n.op + " " + print(n.args[1]) + ")";
    case Node::Kind::Call: {
      std::string out = n.name + "(";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ", ";
        out += print(n.args[i]);
      }
      return out + ")";
    }
  }
  return "";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case Node::Kind::Number:
      if (a->number != b->number) return false;
      break;
    case Node::Kind::Variable:
      if (a->name != b->name || a->slot != b->slot) return false;
      break;
    case Node::Kind::Binary:
      if (a->op != b->op) return false;
      break;
    case Node::Kind::Call:
      if (a->name != b->name) return false;
      break;
    case Node::Kind::Negate: break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!structurally_equal(a->args[i], b->args[i])) return false;
  }
  return true;
}

namespace {

// Variables must have been parsed against exactly `names`.
void require_slots(const Node& n, const std::vector<std::string>& names, std::string_view set) {
  if (n.kind == Node::Kind::Variable) {
    const auto it = std::find(names.begin(), names.end(), n.name);
    if (it == names.end() || n.slot != static_cast<int>(it - names.begin())) {
      throw Error(ErrorKind::UnknownIdentifier,
                  "variable '" + n.name + "' does not belong to the variables of " + std::string(set));
    }
  }
  for (const auto& a : n.args) require_slots(*a, names, set);
}

}  // namespace

ScalarFn to_scalar_fn(const Expr& e, VarSet set) {
  Domain dom;
  switch (set) {
    case VarSet::H:
    case VarSet::WVol: dom = Domain::open_from(0.0); break;
    case VarSet::F:
    case VarSet::FTilde: dom = Domain::closed_from(0.0); break;
    case VarSet::Z: dom = Domain::closed_from(1.0); break;
    case VarSet::G: throw Error(ErrorKind::ArityError, "g expressions take two variables; use to_symmetric_fn");
  }
  require_slots(*e, variables(set), to_string(set));
  return ScalarFn::registered([e](double x) { return eval(e, std::vector<double>{x}); }, dom);
}

SymmetricFn2 to_symmetric_fn(const Expr& e) {
  require_slots(*e, variables(VarSet::G), "g");
  return SymmetricFn2::registered([e](double x, double y) { return eval(e, std::vector<double>{x, y}); });
}

std::string substitute_params(std::string_view src, const std::map<std::string, double>& params,
                              const std::vector<std::string>& vars) {
  for (const auto& [key, value] : params) {
    if (key.empty() || !ident_start(key[0]) || !std::all_of(key.begin(), key.end(), ident_char)) {
      throw Error(ErrorKind::InvalidConfig, "parameter name '" + key + "' is not an identifier");
    }
    if (std::find(vars.begin(), vars.end(), key) != vars.end() || find_function(key)) {
      throw Error(ErrorKind::InvalidConfig, "parameter '" + key + "' shadows a variable or function");
    }
    if (!std::isfinite(value)) throw Error(ErrorKind::ParamOutOfRange, "parameter '" + key + "' is not finite");
  }

  std::string out;
  std::vector<std::string> used;
  std::size_t i = 0;
  while (i < src.size()) {
    if (const std::size_t len = number_length(src, i); len > 0) {
      out.append(src.substr(i, len));
      i += len;
      continue;
    }
    if (ident_start(src[i])) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      const std::string name(src.substr(i, j - i));
      const auto it = params.find(name);
      if (it != params.end()) {
        out += "(" + format_real(it->second) + ")";
        used.push_back(name);
      } else {
        out += name;
      }
      i = j;
      continue;
    }
    out += src[i++];
  }
  for (const auto& [key, value] : params) {
    if (std::find(used.begin(), used.end(), key) == used.end()) {
      throw Error(ErrorKind::ParamOutOfRange, "parameter '" + key + "' does not occur in the expression");
    }
  }
  return out;
}

}  // namespace isoconv
