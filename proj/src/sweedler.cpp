#include "coquasi/sweedler.hpp"

#include <sstream>

#include "coquasi/convolution.hpp"
#include "coquasi/integrals.hpp"
#include "coquasi/pipeline.hpp"

namespace coquasi {

bool operator==(const ElemExpr& a, const ElemExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ElemExpr::Kind::Var:
      return a.var == b.var && a.subscript == b.subscript;
    case ElemExpr::Kind::Unit:
      return true;
    case ElemExpr::Kind::Apply:
      return a.op == b.op && *a.child == *b.child;
    case ElemExpr::Kind::Product:
      return *a.left == *b.left && *a.right == *b.right;
  }
  return false;
}

bool operator==(const ScalarFactor& a, const ScalarFactor& b) {
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

bool operator==(const IdentitySide& a, const IdentitySide& b) {
  if (a.factors != b.factors) return false;
  if (static_cast<bool>(a.element) != static_cast<bool>(b.element)) return false;
  return !a.element || *a.element == *b.element;
}

bool operator==(const SweedlerIdentity& a, const SweedlerIdentity& b) {
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

namespace {

constexpr int kMaxSubscript = 9;

struct Token {
  enum class Kind { Ident, One, LParen, RParen, Comma, Equals, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token current_;

  void bump(char c) {
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      bump(text_[pos_]);
    current_ = {Token::Kind::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    current_.line = line_;
    current_.column = col_;
    if (c == '(') {
      current_ = {Token::Kind::LParen, "(", line_, col_};
      bump(c);
    } else if (c == ')') {
      current_ = {Token::Kind::RParen, ")", line_, col_};
      bump(c);
    } else if (c == ',') {
      current_ = {Token::Kind::Comma, ",", line_, col_};
      bump(c);
    } else if (c == '=') {
      current_ = {Token::Kind::Equals, "=", line_, col_};
      bump(c);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        word += text_[pos_], bump(text_[pos_]);
      current_.kind = Token::Kind::Ident;
      current_.text = word;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_], bump(text_[pos_]);
      if (digits != "1")
        throw SyntaxError(current_.line, current_.column,
                          "unexpected number '" + digits + "' (only the unit 1 is allowed)");
      current_.kind = Token::Kind::One;
      current_.text = digits;
    } else {
      throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
    }
  }
};

// Splits an identifier into a trailing-digit subscript, if any.
bool split_var(const std::string& word, std::string& name, int& subscript) {
  std::size_t i = word.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(word[i - 1]))) --i;
  if (i == word.size() || i == 0) return false;  // no digits, or digits only
  name = word.substr(0, i);
  subscript = std::stoi(word.substr(i));
  return true;
}

const std::map<std::string, std::size_t>& fixed_arities() {
  static const std::map<std::string, std::size_t> table = {
      {"phi", 3}, {"phiinv", 3}, {"alpha", 1}, {"beta", 1}, {"eps", 1}, {"T", 1}};
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  SweedlerIdentity parse() {
    SweedlerIdentity id;
    int rhs_line = 1, rhs_col = 1;
    id.lhs = parse_side();
    if (lex_.peek().kind != Token::Kind::Equals)
      throw SyntaxError(lex_.peek().line, lex_.peek().column, "expected '='");
    lex_.take();
    rhs_line = lex_.peek().line;
    rhs_col = lex_.peek().column;
    id.rhs = parse_side();
    if (lex_.peek().kind != Token::Kind::End)
      throw SyntaxError(lex_.peek().line, lex_.peek().column,
                        "unexpected input after the right-hand side");

    validate_side(id.lhs);
    validate_side(id.rhs);

    for (const auto& [v, d] : id.lhs.depth)
      if (!id.rhs.depth.count(v))
        throw SyntaxError(rhs_line, rhs_col, "variable '" + v + "' is missing on one side");
    for (const auto& [v, d] : id.rhs.depth)
      if (!id.lhs.depth.count(v))
        throw SyntaxError(rhs_line, rhs_col, "variable '" + v + "' is missing on one side");

    if (static_cast<bool>(id.lhs.element) != static_cast<bool>(id.rhs.element))
      throw MixedResultKind(rhs_line, rhs_col,
                            "one side is element-valued and the other scalar-valued");
    id.element_valued = static_cast<bool>(id.lhs.element);

    for (const std::string& v : appearance_order_)
      id.variables.push_back(v);
    return id;
  }

 private:
  Lexer lex_;
  std::vector<std::string> appearance_order_;

  void note_variable(const std::string& v) {
    for (const auto& seen : appearance_order_)
      if (seen == v) return;
    appearance_order_.push_back(v);
  }

  IdentitySide parse_side() {
    IdentitySide side;
    bool saw_any = false;
    for (;;) {
      Token t = peek_token();
      if (t.kind == Token::Kind::Equals || t.kind == Token::Kind::End) break;
      if (t.kind == Token::Kind::RParen || t.kind == Token::Kind::Comma)
        throw SyntaxError(t.line, t.column, "unexpected '" + t.text + "'");
      saw_any = true;
      if (t.kind == Token::Kind::Ident && t.text != "S" && t.text != "Sl") {
        Token ident = take_token();
        bool call = peek_token().kind == Token::Kind::LParen;
        pushed_ = ident;
        if (call) {
          side.factors.push_back(parse_factor());
          continue;
        }
      }
      ElemPtr e = parse_elem();
      if (side.element)
        throw AmbiguousProduct(e->line, e->column,
                               "second element expression on one side; element products "
                               "need explicit parentheses");
      side.element = std::move(e);
    }
    if (!saw_any)
      throw SyntaxError(peek_token().line, peek_token().column, "empty identity side");
    return side;
  }

  std::optional<Token> pushed_;

  Token take_token() {
    if (pushed_) {
      Token t = *pushed_;
      pushed_.reset();
      return t;
    }
    return lex_.take();
  }

  const Token& peek_token() {
    if (pushed_) return *pushed_;
    return lex_.peek();
  }

  ScalarFactor parse_factor() {
    Token name = take_token();
    ScalarFactor f;
    f.name = name.text;
    f.line = name.line;
    f.column = name.column;
    expect(Token::Kind::LParen, "'('");
    f.args.push_back(parse_elem());
    while (peek_token().kind == Token::Kind::Comma) {
      take_token();
      f.args.push_back(parse_elem());
    }
    expect(Token::Kind::RParen, "')'");
    auto fixed = fixed_arities().find(f.name);
    if (fixed != fixed_arities().end() && fixed->second != f.args.size())
      throw SyntaxError(f.line, f.column,
                        "'" + f.name + "' takes " + std::to_string(fixed->second) +
                            " argument(s), got " + std::to_string(f.args.size()));
    return f;
  }

  ElemPtr parse_elem() {
    Token t = take_token();
    auto node = std::make_shared<ElemExpr>();
    node->line = t.line;
    node->column = t.column;
    if (t.kind == Token::Kind::One) {
      node->kind = ElemExpr::Kind::Unit;
      return node;
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "S" || t.text == "Sl") {
        if (peek_token().kind != Token::Kind::LParen)
          throw SyntaxError(t.line, t.column,
                            "operator '" + t.text + "' must be applied as " + t.text + "(...)");
        take_token();
        node->kind = ElemExpr::Kind::Apply;
        node->op = t.text;
        node->child = parse_elem();
        expect(Token::Kind::RParen, "')'");
        return node;
      }
      if (peek_token().kind == Token::Kind::LParen)
        throw SyntaxError(t.line, t.column,
                          "functional '" + t.text + "' cannot appear inside an element expression");
      std::string name;
      int sub = 0;
      if (!split_var(t.text, name, sub))
        throw SyntaxError(t.line, t.column,
                          "variable '" + t.text + "' must carry a Sweedler subscript (e.g. " +
                              t.text + "1)");
      if (name == "S" || name == "Sl" || fixed_arities().count(name))
        throw SyntaxError(t.line, t.column,
                          "'" + name + "' is a reserved name and cannot be used as a variable");
      if (sub < 1 || sub > kMaxSubscript)
        throw SyntaxError(t.line, t.column,
                          "subscript " + std::to_string(sub) + " outside the supported range 1.." +
                              std::to_string(kMaxSubscript));
      node->kind = ElemExpr::Kind::Var;
      node->var = name;
      node->subscript = sub;
      note_variable(name);
      return node;
    }
    if (t.kind == Token::Kind::LParen) {
      node->kind = ElemExpr::Kind::Product;
      node->left = parse_elem();
      node->right = parse_elem();
      if (peek_token().kind != Token::Kind::RParen)
        throw AmbiguousProduct(peek_token().line, peek_token().column,
                               "a parenthesized product takes exactly two factors");
      take_token();
      return node;
    }
    throw SyntaxError(t.line, t.column, "expected an element expression, got '" + t.text + "'");
  }

  void expect(Token::Kind kind, const char* what) {
    Token t = take_token();
    if (t.kind != kind)
      throw SyntaxError(t.line, t.column, std::string("expected ") + what + ", got '" +
                                              (t.text.empty() ? "end of input" : t.text) + "'");
  }

  // ---- validation ----

  struct Occurrence {
    int subscript;
    int line, column;
  };

  static void collect(const ElemPtr& e, std::map<std::string, std::vector<Occurrence>>& occ) {
    if (!e) return;
    switch (e->kind) {
      case ElemExpr::Kind::Var:
        occ[e->var].push_back({e->subscript, e->line, e->column});
        break;
      case ElemExpr::Kind::Apply:
        collect(e->child, occ);
        break;
      case ElemExpr::Kind::Product:
        collect(e->left, occ);
        collect(e->right, occ);
        break;
      case ElemExpr::Kind::Unit:
        break;
    }
  }

  static void validate_side(IdentitySide& side) {
    std::map<std::string, std::vector<Occurrence>> occ;
    for (const auto& f : side.factors)
      for (const auto& a : f.args) collect(a, occ);
    collect(side.element, occ);

    for (auto& [var, list] : occ) {
      int depth = 0;
      for (const auto& o : list) depth = std::max(depth, o.subscript);
      std::vector<const Occurrence*> seen(static_cast<std::size_t>(depth) + 1, nullptr);
      for (const auto& o : list) {
        if (seen[o.subscript])
          throw DuplicateSubscript(o.line, o.column,
                                   "subscript " + var + std::to_string(o.subscript) +
                                       " occurs more than once on one side");
        seen[o.subscript] = &o;
      }
      for (int s = 1; s <= depth; ++s)
        if (!seen[s])
          throw SubscriptGap(list.front().line, list.front().column,
                             "variable '" + var + "' uses subscript " + std::to_string(depth) +
                                 " but " + var + std::to_string(s) + " is missing");
      side.depth[var] = depth;
    }
  }
};

void print_elem(std::ostream& os, const ElemPtr& e) {
  switch (e->kind) {
    case ElemExpr::Kind::Var:
      os << e->var << e->subscript;
      break;
    case ElemExpr::Kind::Unit:
      os << '1';
      break;
    case ElemExpr::Kind::Apply:
      os << e->op << '(';
      print_elem(os, e->child);
      os << ')';
      break;
    case ElemExpr::Kind::Product:
      os << '(';
      print_elem(os, e->left);
      os << ' ';
      print_elem(os, e->right);
      os << ')';
      break;
  }
}

void print_side(std::ostream& os, const IdentitySide& side) {
  bool first = true;
  for (const auto& f : side.factors) {
    if (!first) os << ' ';
    first = false;
    os << f.name << '(';
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i) os << ',';
      print_elem(os, f.args[i]);
    }
    os << ')';
  }
  if (side.element) {
    if (!first) os << ' ';
    print_elem(os, side.element);
  }
}

// ---- evaluation ----

struct EvalContext {
  const AlgebraInstance& H;
  const Binding& binding;
  // legs of the current expansion term: (variable, subscript-1) -> basis index
  std::map<std::string, Key> legs;
};

SparseTensor eval_elem(const ElemPtr& e, EvalContext& ctx) {
  switch (e->kind) {
    case ElemExpr::Kind::Var:
      return ctx.H.basis_elem(ctx.legs.at(e->var)[static_cast<std::size_t>(e->subscript - 1)]);
    case ElemExpr::Kind::Unit:
      return ctx.H.unit;
    case ElemExpr::Kind::Apply: {
      auto it = ctx.binding.operators.find(e->op);
      if (it == ctx.binding.operators.end()) throw UnboundName(e->op);
      return it->second.apply(eval_elem(e->child, ctx));
    }
    case ElemExpr::Kind::Product:
      return ctx.H.product(eval_elem(e->left, ctx), eval_elem(e->right, ctx));
  }
  throw Error("unreachable");
}

Scalar eval_factor(const ScalarFactor& f, EvalContext& ctx) {
  auto it = ctx.binding.functionals.find(f.name);
  if (it == ctx.binding.functionals.end()) throw UnboundName(f.name);
  const SparseTensor& func = it->second;
  if (func.arity() != f.args.size())
    throw ArityMismatch("'" + f.name + "' is bound with arity " + std::to_string(func.arity()) +
                        " but applied to " + std::to_string(f.args.size()) + " argument(s)");
  std::vector<SparseTensor> args;
  args.reserve(f.args.size());
  for (const auto& a : f.args) args.push_back(eval_elem(a, ctx));
  Scalar acc = Scalar::zero(ctx.H.field);
  for (const auto& [k, v] : func.entries()) {
    Scalar term = v;
    for (std::size_t i = 0; i < k.size() && !term.is_zero(); ++i)
      term *= args[i].coeff({k[i]});
    acc += term;
  }
  return acc;
}

struct SideValue {
  Scalar scalar;
  SparseTensor element;  // used when the identity is element-valued
};

SideValue eval_side(const IdentitySide& side, const std::vector<std::string>& vars,
                    const Key& assignment, const AlgebraInstance& H, const Binding& binding,
                    std::size_t& cost) {
  // expand each variable to its per-side Sweedler depth
  std::vector<std::pair<std::string, SparseTensor>> expansions;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    int depth = side.depth.at(vars[v]);
    expansions.emplace_back(vars[v],
                            H.sweedler_legs(assignment[v], static_cast<unsigned>(depth)));
  }

  SideValue out{Scalar::zero(H.field), SparseTensor(Variance::Element, H.field, {H.dim})};
  EvalContext ctx{H, binding, {}};

  auto rec = [&](auto&& self, std::size_t v, const Scalar& coeff) -> void {
    if (v == expansions.size()) {
      if (++cost > term_ceiling()) throw CostExceeded(term_ceiling());
      Scalar scalars = coeff;
      for (const auto& f : side.factors) {
        if (scalars.is_zero()) break;
        scalars *= eval_factor(f, ctx);
      }
      if (scalars.is_zero()) return;
      if (side.element)
        out.element = out.element + eval_elem(side.element, ctx).scaled(scalars);
      else
        out.scalar += scalars;
      return;
    }
    for (const auto& [k, c] : expansions[v].second.entries()) {
      ctx.legs[expansions[v].first] = k;
      self(self, v + 1, coeff * c);
    }
  };
  rec(rec, 0, Scalar::one(H.field));
  return out;
}

}  // namespace

SweedlerIdentity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string print_identity(const SweedlerIdentity& id) {
  std::ostringstream os;
  print_side(os, id.lhs);
  os << " = ";
  print_side(os, id.rhs);
  return os.str();
}

Binding default_binding(const AlgebraInstance& H) {
  Binding b;
  b.functionals["eps"] = H.counit;
  b.functionals["phi"] = H.phi;
  try {
    b.functionals["phiinv"] = convolution_inverse(H.phi, {&H, 3});
  } catch (const NotInvertible&) {
    // phiinv stays unbound; identities using it will report UnboundName
  }
  if (H.alpha) b.functionals["alpha"] = *H.alpha;
  if (H.beta) b.functionals["beta"] = *H.beta;
  if (H.antipode) {
    b.operators["S"] = *H.antipode;
    Matrix S = matrix_of(*H.antipode);
    if (S.rank() == H.dim) b.operators["Sl"] = linmap_of(S.inverse());
  }
  auto left = left_integrals(H);
  if (!left.empty()) b.functionals["T"] = left[0];
  return b;
}

Report evaluate_identity(const SweedlerIdentity& id, const AlgebraInstance& H, const Binding& b,
                         const std::string& name) {
  Report rep;
  const Index n = H.dim;
  std::size_t cost = 0;

  Key assignment(id.variables.size(), 0);
  std::optional<Witness> bad;
  std::size_t total = 1;
  for (std::size_t i = 0; i < id.variables.size(); ++i) total *= n;
  for (std::size_t step = 0; step < total && !bad; ++step) {
    SideValue lhs = eval_side(id.lhs, id.variables, assignment, H, b, cost);
    SideValue rhs = eval_side(id.rhs, id.variables, assignment, H, b, cost);
    if (id.element_valued) {
      if (!(lhs.element == rhs.element))
        bad = Witness{assignment, format_tensor(H, lhs.element), format_tensor(H, rhs.element)};
    } else {
      if (!(lhs.scalar == rhs.scalar))
        bad = Witness{assignment, lhs.scalar.to_string(), rhs.scalar.to_string()};
    }
    for (std::size_t j = assignment.size(); j-- > 0;) {
      if (++assignment[j] < n) break;
      assignment[j] = 0;
    }
  }
  if (bad)
    rep.fail(name, *bad);
  else
    rep.pass(name);
  return rep;
}

const std::vector<std::pair<std::string, SweedlerIdentity>>& builtin_corpus() {
  static const std::vector<std::pair<std::string, SweedlerIdentity>> corpus = [] {
    std::vector<std::pair<std::string, std::string>> texts = {
        {"e1", "(h1 (g1 f1)) phi(h2,g2,f2) = phi(h1,g1,f1) ((h2 g2) f2)"},
        {"e2a", "(1 h1) = h1"},
        {"e2b", "(h1 1) = h1"},
        {"e3",
         "phi(h1,g1,(f1 e1)) phi((h2 g2),f2,e2) = "
         "phi(g1,f1,e1) phi(h1,(g2 f2),e2) phi(h2,g3,f3)"},
        {"e4", "phi(h1,1,g1) = eps(h1) eps(g1)"},
        {"e5a", "(S(h1) h3) alpha(h2) = alpha(h1) 1"},
        {"e5b", "(h1 S(h3)) beta(h2) = beta(h1) 1"},
        {"e6a", "phi(h1,S(h3),h5) beta(h2) alpha(h4) = eps(h1)"},
        {"e6b", "phiinv(S(h1),h3,S(h5)) alpha(h2) beta(h4) = eps(h1)"},
    };
    std::vector<std::pair<std::string, SweedlerIdentity>> out;
    for (const auto& [name, text] : texts) out.emplace_back(name, parse_identity(text));
    return out;
  }();
  return corpus;
}

}  // namespace coquasi
