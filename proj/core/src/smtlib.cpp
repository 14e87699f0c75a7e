#include "cadlab/smtlib.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <variant>

#include "cadlab/error.hpp"

namespace cadlab {

namespace {

struct Node {
  enum class Kind { list, symbol, numeral, decimal, string, keyword } kind = Kind::list;
  std::string text;
  std::vector<Node> items;
  int line = 1, col = 1;

  std::string where() const { return std::to_string(line) + ":" + std::to_string(col); }
  bool is_list() const { return kind == Kind::list; }
  bool is_symbol(const char* s) const { return kind == Kind::symbol && text == s; }
  const std::string& head() const;
};

[[noreturn]] void fail(const Node& n, const std::string& what) { throw ParseError(n.where(), what); }
[[noreturn]] void unsupported(const Node& n, const std::string& construct) {
  throw ParseError(n.where(), "unsupported construct: " + construct);
}

const std::string& Node::head() const {
  static const std::string empty;
  if (!is_list() || items.empty() || items[0].kind != Kind::symbol) return empty;
  return items[0].text;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : s_(text) {}

  std::vector<Node> read_all() {
    std::vector<Node> out;
    while (skip(), pos_ < s_.size()) out.push_back(read());
    return out;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == ';') {
        while (pos_ < s_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError(std::to_string(line_) + ":" + std::to_string(col_), what);
  }

  Node read() {
    Node n;
    n.line = line_;
    n.col = col_;
    const char c = peek();
    if (c == '(') {
      advance();
      while (true) {
        skip();
        if (pos_ >= s_.size()) throw ParseError(n.where(), "unbalanced parenthesis");
        if (peek() == ')') {
          advance();
          break;
        }
        n.items.push_back(read());
      }
      return n;
    }
    if (c == ')') error("unexpected ')'");
    if (c == '"') {
      n.kind = Node::Kind::string;
      advance();
      while (true) {
        if (pos_ >= s_.size()) throw ParseError(n.where(), "unterminated string literal");
        if (peek() == '"') {
          advance();
          if (pos_ < s_.size() && peek() == '"') {
            n.text += '"';
            advance();
            continue;
          }
          break;
        }
        n.text += peek();
        advance();
      }
      return n;
    }
    if (c == '|') {
      n.kind = Node::Kind::symbol;
      advance();
      while (true) {
        if (pos_ >= s_.size()) throw ParseError(n.where(), "unterminated quoted symbol");
        if (peek() == '|') {
          advance();
          break;
        }
        n.text += peek();
        advance();
      }
      return n;
    }
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' && peek() != ')' &&
           peek() != ';' && peek() != '"') {
      n.text += peek();
      advance();
    }
    if (n.text.empty()) error("unexpected character");
    const bool digits = std::all_of(n.text.begin(), n.text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (n.text[0] == ':') {
      n.kind = Node::Kind::keyword;
    } else if (digits) {
      n.kind = Node::Kind::numeral;
    } else if (std::isdigit(static_cast<unsigned char>(n.text[0]))) {
      const auto dot = n.text.find('.');
      const bool ok = dot != std::string::npos && dot + 1 < n.text.size() &&
                      std::all_of(n.text.begin(), n.text.end(), [](char ch) { return ch == '.' || std::isdigit(static_cast<unsigned char>(ch)); }) &&
                      std::count(n.text.begin(), n.text.end(), '.') == 1;
      if (!ok) throw ParseError(n.where(), "malformed numeric literal '" + n.text + "'");
      n.kind = Node::Kind::decimal;
    } else {
      n.kind = Node::Kind::symbol;
    }
    return n;
  }
};

using Value = std::variant<Poly, Formula>;

class Builder {
 public:
  Builder(Problem& p) : p_(p) {}

  void declare(const Node& at, const std::string& name) {
    if (std::find(p_.vars.begin(), p_.vars.end(), name) != p_.vars.end()) fail(at, "variable '" + name + "' declared twice");
    p_.vars.push_back(name);
  }

  Formula formula(const Node& n) {
    Value v = eval(n);
    if (auto* f = std::get_if<Formula>(&v)) return std::move(*f);
    fail(n, "expected a Boolean term");
  }

  Poly poly(const Node& n) {
    Value v = eval(n);
    if (auto* q = std::get_if<Poly>(&v)) return std::move(*q);
    fail(n, "expected a Real term");
  }

 private:
  Problem& p_;
  std::vector<std::map<std::string, Value>> scopes_;

  std::size_t nv() const { return p_.vars.size(); }

  Value eval(const Node& n) {
    using K = Node::Kind;
    switch (n.kind) {
      case K::numeral:
      case K::decimal: return Poly::constant(nv(), parse_rational(n.text));
      case K::string: fail(n, "unexpected string literal");
      case K::keyword: fail(n, "unexpected keyword " + n.text);
      case K::symbol: return symbol(n);
      case K::list: break;
    }
    if (n.items.empty()) fail(n, "empty term");
    const Node& h = n.items[0];
    if (h.kind != K::symbol) {
      if (h.is_list()) unsupported(h, "indexed or qualified identifier");
      fail(h, "expected an operator");
    }
    const std::string& op = h.text;
    const std::span<const Node> args(n.items.data() + 1, n.items.size() - 1);
    auto need = [&](std::size_t k) {
      if (args.size() < k) fail(n, "'" + op + "' expects at least " + std::to_string(k) + " argument(s)");
    };

    if (op == "+" || op == "*") {
      need(1);
      Poly acc = poly(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) acc = op == "+" ? acc + poly(args[i]) : acc * poly(args[i]);
      return acc;
    }
    if (op == "-") {
      need(1);
      if (args.size() == 1) return -poly(args[0]);
      Poly acc = poly(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) acc = acc - poly(args[i]);
      return acc;
    }
    if (op == "/") {
      need(2);
      Poly acc = poly(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) {
        Poly d = poly(args[i]);
        if (!d.is_constant()) unsupported(args[i], "division by a non-constant term");
        if (d.is_zero()) fail(args[i], "division by zero");
        acc = acc * Rational(1 / d.constant_value());
      }
      return acc;
    }
    if (op == "=" || op == "<" || op == "<=" || op == ">" || op == ">=") {
      need(2);
      std::vector<Poly> terms;
      for (const auto& a : args) {
        Value v = eval(a);
        if (std::holds_alternative<Formula>(v)) unsupported(a, "'" + op + "' over Boolean terms");
        terms.push_back(std::get<Poly>(std::move(v)));
      }
      std::vector<Formula> chain;
      for (std::size_t i = 0; i + 1 < terms.size(); ++i) chain.push_back(Formula::atom(terms[i] - terms[i + 1], parse_rel(op)));
      return chain.size() == 1 ? std::move(chain[0]) : Formula::conjunction(std::move(chain));
    }
    if (op == "distinct") {
      need(2);
      std::vector<Poly> terms;
      for (const auto& a : args) terms.push_back(poly(a));
      std::vector<Formula> parts;
      for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j) parts.push_back(Formula::atom(terms[i] - terms[j], Rel::ne));
      return parts.size() == 1 ? std::move(parts[0]) : Formula::conjunction(std::move(parts));
    }
    if (op == "and" || op == "or") {
      std::vector<Formula> parts;
      for (const auto& a : args) parts.push_back(formula(a));
      return op == "and" ? Formula::conjunction(std::move(parts)) : Formula::disjunction(std::move(parts));
    }
    if (op == "not") {
      if (args.size() != 1) fail(n, "'not' expects one argument");
      return Formula::negation(formula(args[0]));
    }
    if (op == "=>") {
      need(2);
      Formula acc = formula(args[args.size() - 1]);
      for (std::size_t i = args.size() - 1; i-- > 0;)
        acc = Formula::disjunction({Formula::negation(formula(args[i])), std::move(acc)});
      return acc;
    }
    if (op == "!") {
      need(1);
      Value v = eval(args[0]);
      for (std::size_t i = 1; i + 1 < args.size(); i += 2)
        if (args[i].kind == K::keyword && args[i].text == ":named") {
          if (auto* f = std::get_if<Formula>(&v); f && f->is_atom()) f->name = args[i + 1].text;
        }
      return v;
    }
    if (op == "let") {
      if (args.size() != 2 || !args[0].is_list()) fail(n, "malformed let");
      std::map<std::string, Value> scope;
      for (const auto& b : args[0].items) {
        if (!b.is_list() || b.items.size() != 2 || b.items[0].kind != K::symbol) fail(b, "malformed let binding");
        scope[b.items[0].text] = eval(b.items[1]);
      }
      scopes_.push_back(std::move(scope));
      Value v = eval(args[1]);
      scopes_.pop_back();
      return v;
    }
    if (op == "exists" || op == "forall") unsupported(n, "quantifier below the top of an assertion");
    unsupported(h, "'" + op + "'");
  }

  Value symbol(const Node& n) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(n.text);
      if (f != it->end()) return f->second;
    }
    if (n.text == "true") return Formula::make_true();
    if (n.text == "false") return Formula::make_false();
    auto it = std::find(p_.vars.begin(), p_.vars.end(), n.text);
    if (it == p_.vars.end()) fail(n, "undeclared symbol '" + n.text + "'");
    return Poly::variable(nv(), Var{static_cast<std::size_t>(it - p_.vars.begin())});
  }
};

void check_sort(const Node& sort) {
  if (sort.is_symbol("Real")) return;
  if (sort.kind == Node::Kind::symbol) unsupported(sort, "sort " + sort.text);
  unsupported(sort, "composite sort");
}

// Walks the quantifier prefix of an assertion; returns the matrix.
const Node& prefix(const Node& n, std::vector<std::pair<Quantifier, std::vector<std::pair<const Node*, std::string>>>>& out) {
  const Node* cur = &n;
  while (cur->head() == "exists" || cur->head() == "forall") {
    if (cur->items.size() != 3 || !cur->items[1].is_list()) fail(*cur, "malformed quantifier");
    const Quantifier q = cur->head() == "exists" ? Quantifier::exists : Quantifier::forall;
    std::vector<std::pair<const Node*, std::string>> vars;
    for (const auto& b : cur->items[1].items) {
      if (!b.is_list() || b.items.size() != 2 || b.items[0].kind != Node::Kind::symbol) fail(b, "malformed sorted variable");
      check_sort(b.items[1]);
      vars.emplace_back(&b, b.items[0].text);
    }
    out.emplace_back(q, std::move(vars));
    cur = &cur->items[2];
  }
  return *cur;
}

std::string info_value(const Node& n) {
  return n.text;
}

}  // namespace

Problem parse_smtlib(const std::string& text, const std::string& name) {
  const auto commands = Reader(text).read_all();
  Problem p;
  p.name = name;
  Builder builder(p);

  struct Assertion {
    const Node* matrix;
  };
  std::vector<Assertion> asserts;

  for (const auto& c : commands) {
    if (!c.is_list() || c.items.empty() || c.items[0].kind != Node::Kind::symbol) fail(c, "expected a command");
    const std::string& cmd = c.items[0].text;
    if (cmd == "set-logic") {
      if (c.items.size() != 2) fail(c, "malformed set-logic");
      const std::string& logic = c.items[1].text;
      if (logic != "QF_NRA" && logic != "NRA") unsupported(c.items[1], "logic " + logic);
    } else if (cmd == "set-info") {
      if (c.items.size() < 2 || c.items[1].kind != Node::Kind::keyword) fail(c, "malformed set-info");
      const std::string key = c.items[1].text.substr(1);
      const std::string value = c.items.size() > 2 ? info_value(c.items[2]) : "";
      if (key == "name")
        p.name = value;
      else
        p.metadata[key] = value;
    } else if (cmd == "set-option" || cmd == "check-sat" || cmd == "exit" || cmd == "get-model" || cmd == "get-value" ||
               cmd == "get-info") {
      continue;
    } else if (cmd == "declare-fun") {
      if (c.items.size() != 4 || c.items[1].kind != Node::Kind::symbol || !c.items[2].is_list())
        fail(c, "malformed declare-fun");
      if (!c.items[2].items.empty()) unsupported(c.items[2], "function symbols with arguments");
      check_sort(c.items[3]);
      builder.declare(c.items[1], c.items[1].text);
    } else if (cmd == "declare-const") {
      if (c.items.size() != 3 || c.items[1].kind != Node::Kind::symbol) fail(c, "malformed declare-const");
      check_sort(c.items[2]);
      builder.declare(c.items[1], c.items[1].text);
    } else if (cmd == "assert") {
      if (c.items.size() != 2) fail(c, "assert expects one term");
      std::vector<std::pair<Quantifier, std::vector<std::pair<const Node*, std::string>>>> blocks;
      const Node& matrix = prefix(c.items[1], blocks);
      for (auto& [q, vars] : blocks) {
        QuantifierBlock qb;
        qb.quantifier = q;
        for (const auto& [at, v] : vars) {
          builder.declare(*at, v);
          qb.vars.push_back(Var{p.vars.size() - 1});
        }
        if (!p.blocks.empty() && p.blocks.back().quantifier == q)
          p.blocks.back().vars.insert(p.blocks.back().vars.end(), qb.vars.begin(), qb.vars.end());
        else
          p.blocks.push_back(std::move(qb));
      }
      asserts.push_back({&matrix});
    } else {
      unsupported(c.items[0], "command '" + cmd + "'");
    }
  }

  // Variables are all known now, so polynomials get their final arity.
  std::vector<Formula> parts;
  for (const auto& a : asserts) parts.push_back(builder.formula(*a.matrix));
  if (parts.size() == 1)
    p.formula = std::move(parts[0]);
  else
    p.formula = Formula::conjunction(std::move(parts));
  return p;
}

namespace {

std::string quote_symbol(const std::string& s) {
  const bool simple = !s.empty() && !std::isdigit(static_cast<unsigned char>(s[0])) &&
                      std::all_of(s.begin(), s.end(), [](char c) {
                        return std::isalnum(static_cast<unsigned char>(c)) || std::string("~!@$%^&*_-+=<>.?/").find(c) != std::string::npos;
                      });
  return simple ? s : "|" + s + "|";
}

std::string emit_rational(const Rational& q) {
  const Rational a = abs(q);
  std::string body = a.get_den() == 1 ? a.get_num().get_str() : "(/ " + a.get_num().get_str() + " " + a.get_den().get_str() + ")";
  return q < 0 ? "(- " + body + ")" : body;
}

std::string emit_poly(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> factors;
    if (c != 1 || m.is_one()) factors.push_back(emit_rational(c));
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) factors.push_back(quote_symbol(names[i]));
    if (factors.size() == 1) {
      terms.push_back(factors[0]);
    } else {
      std::string t = "(*";
      for (const auto& f : factors) t += " " + f;
      terms.push_back(t + ")");
    }
  }
  if (terms.size() == 1) return terms[0];
  std::string out = "(+";
  for (const auto& t : terms) out += " " + t;
  return out + ")";
}

std::string emit_formula(const Formula& f, const std::vector<std::string>& names) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::truth: return "true";
    case K::falsity: return "false";
    case K::atom: {
      std::string a;
      if (f.rel == Rel::ne)
        a = "(distinct " + emit_poly(f.poly, names) + " 0)";
      else
        a = std::string("(") + to_string(f.rel) + " " + emit_poly(f.poly, names) + " 0)";
      return f.name.empty() ? a : "(! " + a + " :named " + quote_symbol(f.name) + ")";
    }
    case K::neg: return "(not " + emit_formula(f.args.at(0), names) + ")";
    case K::conj:
    case K::disj: {
      std::string out = f.kind == K::conj ? "(and" : "(or";
      for (const auto& a : f.args) out += " " + emit_formula(a, names);
      return out + ")";
    }
  }
  return {};
}

std::string string_literal(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_smtlib(const Problem& p) {
  if (!p.formula) throw DomainError("a bare polynomial set has no SMT-LIB form");
  std::vector<bool> bound(p.nvars(), false);
  for (const auto& b : p.blocks)
    for (Var v : b.vars) bound[v.id] = true;
  std::string out = std::string("(set-logic ") + (p.blocks.empty() ? "QF_NRA" : "NRA") + ")\n";
  if (!p.name.empty()) out += "(set-info :name " + string_literal(p.name) + ")\n";
  for (const auto& [k, v] : p.metadata) {
    if (k == "logic") continue;
    out += "(set-info :" + k + " " + string_literal(v) + ")\n";
  }
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (!bound[i]) out += "(declare-fun " + quote_symbol(p.vars[i]) + " () Real)\n";
  std::string body = emit_formula(*p.formula, p.vars);
  for (auto b = p.blocks.rbegin(); b != p.blocks.rend(); ++b) {
    std::string vars;
    for (Var v : b->vars) vars += (vars.empty() ? "(" : " (") + quote_symbol(p.vars[v.id]) + " Real)";
    body = std::string("(") + (b->quantifier == Quantifier::exists ? "exists" : "forall") + " (" + vars + ") " + body + ")";
  }
  out += "(assert " + body + ")\n(check-sat)\n";
  return out;
}

}  // namespace cadlab
