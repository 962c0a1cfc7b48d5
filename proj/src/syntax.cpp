#include "lukeff/syntax.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace lukeff {

Coalition::Coalition(std::uint32_t bits, int players) : bits_(bits), players_(players) {
  if (players < 0 || players > 16) fail(Errc::invalid_argument, "player count must lie in 0..16");
  if (players < 32 && (bits >> players) != 0u)
    fail(Errc::unknown_player, "coalition " + format_coalition(bits) + " exceeds " + std::to_string(players) +
                                   " players");
}

std::string format_coalition(std::uint32_t bits) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!((bits >> i) & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string Coalition::to_string() const { return format_coalition(bits_); }

Coalition parse_coalition(std::string_view text, int players) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "N") return Coalition::grand(players);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(Errc::invalid_argument, "malformed coalition '" + std::string(text) + "'");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::uint32_t bits = 0;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty() || item.size() > 3)
      fail(Errc::invalid_argument, "malformed coalition '" + std::string(text) + "'");
    int player = 0;
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(Errc::invalid_argument, "malformed coalition '" + std::string(text) + "'");
      player = player * 10 + (c - '0');
    }
    if (player < 1 || player > players)
      fail(Errc::unknown_player, "player " + std::to_string(player) + " not in 1.." + std::to_string(players));
    bits |= 1u << (player - 1);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) fail(Errc::invalid_argument, "trailing comma in coalition");
  }
  return {bits, players};
}

// ---------------------------------------------------------------------------
// Construction

Formula Formula::top() {
  static const auto node = std::make_shared<const FormulaNode>(FormulaNode{NodeKind::top});
  return Formula(node);
}

Formula Formula::prop(int id) {
  if (id < 0) fail(Errc::invalid_argument, "negative proposition index");
  FormulaNode n{NodeKind::prop};
  n.prop = id;
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::implies(Formula a, Formula b) {
  FormulaNode n{NodeKind::implies};
  n.tree_size = 1 + a.tree_size() + b.tree_size();
  n.has_box_o = a.uses_box_o() || b.uses_box_o();
  n.children = {std::move(a), std::move(b)};
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::neg(Formula a) {
  FormulaNode n{NodeKind::neg};
  n.tree_size = 1 + a.tree_size();
  n.has_box_o = a.uses_box_o();
  n.children = {std::move(a)};
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::box(Coalition c, Formula a) {
  FormulaNode n{NodeKind::box};
  n.coalition = c;
  n.tree_size = 1 + a.tree_size();
  n.has_box_o = a.uses_box_o();
  n.children = {std::move(a)};
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::box_o(Formula a) {
  FormulaNode n{NodeKind::box_o};
  n.tree_size = 1 + a.tree_size();
  n.has_box_o = true;
  n.children = {std::move(a)};
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

Formula Formula::bottom() { return neg(top()); }
Formula Formula::oplus(Formula a, Formula b) { return implies(neg(std::move(a)), std::move(b)); }
Formula Formula::odot(Formula a, Formula b) { return neg(implies(std::move(a), neg(std::move(b)))); }
Formula Formula::join(Formula a, Formula b) { return implies(implies(std::move(a), b), b); }
Formula Formula::meet(Formula a, Formula b) { return neg(join(neg(std::move(a)), neg(std::move(b)))); }
Formula Formula::iff(Formula a, Formula b) { return odot(implies(a, b), implies(b, a)); }

Formula Formula::multiple(int m, Formula a) {
  if (m < 0) fail(Errc::invalid_argument, "negative multiple");
  if (m == 0) return bottom();
  Formula acc = a;
  for (int k = 1; k < m; ++k) acc = oplus(acc, a);
  return acc;
}

Formula Formula::tau(Chain chain, int i, Formula a) {
  const TauTerm term = synthesize_tau_term(chain, i);
  for (TauOp op : term.ops) a = op == TauOp::oplus ? oplus(a, a) : odot(a, a);
  return a;
}

NodeKind Formula::kind() const { return node_->kind; }
int Formula::prop_id() const { return node_->prop; }
const Coalition& Formula::coalition() const { return node_->coalition; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
std::size_t Formula::tree_size() const { return node_->tree_size; }
bool Formula::uses_box_o() const { return node_->has_box_o; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.tree_size <=> y.tree_size; c != 0) return c;
  if (auto c = x.prop <=> y.prop; c != 0) return c;
  if (auto c = x.coalition.bits() <=> y.coalition.bits(); c != 0) return c;
  for (std::size_t k = 0; k < x.children.size(); ++k)
    if (auto c = x.children[k] <=> y.children[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Printing

namespace {
void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case NodeKind::top: out += '1'; return;
    case NodeKind::prop: out += 'p' + std::to_string(f.prop_id()); return;
    case NodeKind::neg: out += '~'; print_into(f.left(), out); return;
    case NodeKind::implies:
      out += '(';
      print_into(f.left(), out);
      out += " -> ";
      print_into(f.right(), out);
      out += ')';
      return;
    case NodeKind::box:
      out += '[' + f.coalition().to_string() + ']';
      print_into(f.left(), out);
      return;
    case NodeKind::box_o: out += "[O]"; print_into(f.left(), out); return;
  }
}
}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { end, lparen, rparen, neg, implies, iff, amp, bar, oplus, odot, box, box_o, tau, multiple, one, zero, prop };

struct Token {
  Tok kind;
  std::size_t pos;
  int value = 0;         // prop id, multiplier, tau index
  bool chain_multiple = false;  // "n.F"
  std::string coalition{};  // raw text between [ and ]
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  [[noreturn]] void error(const std::string& what) const { throw SyntaxError(pos_, what); }

  int read_int() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) throw SyntaxError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) error("expected digits");
    return static_cast<int>(v);
  }

  bool dot_follows() const {
    return pos_ < text_.size() && text_[pos_] == '.' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == ')');
  }

  Token next() {
    const std::size_t start = pos_;
    if (starts("(+)")) { pos_ += 3; return {Tok::oplus, start}; }
    if (starts("(.)")) { pos_ += 3; return {Tok::odot, start}; }
    if (starts("<->")) { pos_ += 3; return {Tok::iff, start}; }
    if (starts("->")) { pos_ += 2; return {Tok::implies, start}; }
    if (starts("tau")) {
      pos_ += 3;
      skip_space();
      if (!starts("(")) error("expected '(' after tau");
      ++pos_;
      skip_space();
      Token t{Tok::tau, start};
      t.value = read_int();
      skip_space();
      if (!starts(")")) error("expected ')' after tau index");
      ++pos_;
      return t;
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; return {Tok::lparen, start};
      case ')': ++pos_; return {Tok::rparen, start};
      case '~': ++pos_; return {Tok::neg, start};
      case '&': ++pos_; return {Tok::amp, start};
      case '|': ++pos_; return {Tok::bar, start};
      case '[': {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) error("unterminated modality");
        std::string inner(text_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
        std::string trimmed;
        for (char ch : inner)
          if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed == "O") return {Tok::box_o, start};
        Token t{Tok::box, start};
        t.coalition = inner;
        return t;
      }
      case 'p': {
        ++pos_;
        Token t{Tok::prop, start};
        t.value = read_int();
        return t;
      }
      case 'n':
        ++pos_;
        if (!dot_follows()) error("expected '.' after n");
        ++pos_;
        return {Tok::multiple, start, 0, true};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const int v = read_int();
      if (dot_follows()) {
        ++pos_;
        return {Tok::multiple, start, v};
      }
      if (v == 1) return {Tok::one, start};
      if (v == 0) return {Tok::zero, start};
      throw SyntaxError(start, "numeric constant must be 0 or 1");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : toks_(std::move(tokens)), opt_(options) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Tok::end) throw SyntaxError(peek().pos, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& take() { return toks_[idx_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++idx_;
    return true;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::iff)) f = Formula::iff(f, parse_implies());
    return f;
  }
  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::implies)) return Formula::implies(f, parse_implies());
    return f;
  }
  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::bar)) f = Formula::join(f, parse_and());
    return f;
  }
  Formula parse_and() {
    Formula f = parse_oplus();
    while (accept(Tok::amp)) f = Formula::meet(f, parse_oplus());
    return f;
  }
  Formula parse_oplus() {
    Formula f = parse_odot();
    while (accept(Tok::oplus)) f = Formula::oplus(f, parse_odot());
    return f;
  }
  Formula parse_odot() {
    Formula f = parse_unary();
    while (accept(Tok::odot)) f = Formula::odot(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::neg: return Formula::neg(parse_unary());
      case Tok::box: {
        Coalition c = coalition_of(t);
        return Formula::box(c, parse_unary());
      }
      case Tok::box_o:
        if (opt_.dialect == Dialect::L) fail(Errc::dialect_violation, "[O] is not part of the language L");
        return Formula::box_o(parse_unary());
      case Tok::tau: return Formula::tau(opt_.chain, t.value, parse_unary());
      case Tok::multiple: return Formula::multiple(t.chain_multiple ? opt_.chain.n() : t.value, parse_unary());
      case Tok::one: return Formula::top();
      case Tok::zero: return Formula::bottom();
      case Tok::prop: return Formula::prop(t.value);
      case Tok::lparen: {
        Formula f = parse_iff();
        if (!accept(Tok::rparen)) throw SyntaxError(peek().pos, "expected ')'");
        return f;
      }
      case Tok::end: throw SyntaxError(t.pos, "unexpected end of input");
      default: throw SyntaxError(t.pos, "expected a formula");
    }
  }

  Coalition coalition_of(const Token& t) const {
    try {
      return parse_coalition(t.coalition, opt_.players);
    } catch (const Error& e) {
      if (e.code() == Errc::unknown_player) throw;
      throw SyntaxError(t.pos, "malformed coalition '" + t.coalition + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  const ParseOptions& opt_;
};

}  // namespace

Formula parse(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text).run(), options).run();
}

// ---------------------------------------------------------------------------
// Structural utilities

bool ClosureSet::contains(const Formula& f) const {
  for (const Formula& m : members)
    if (m == f) return true;
  return false;
}

ClosureSet subformulas(const Formula& f) {
  ClosureSet out{f, {}};
  std::set<Formula> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    if (seen.count(g)) return;
    for (std::size_t k = 0; k < g.node()->children.size(); ++k) visit(g.node()->children[k]);
    seen.insert(g);
    out.members.push_back(g);
  };
  visit(f);
  return out;
}

Formula substitute(const Formula& f, int prop, const Formula& replacement) {
  std::map<const FormulaNode*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    Formula r = g;
    switch (g.kind()) {
      case NodeKind::top: break;
      case NodeKind::prop:
        if (g.prop_id() == prop) r = replacement;
        break;
      case NodeKind::neg: r = Formula::neg(go(g.left())); break;
      case NodeKind::implies: r = Formula::implies(go(g.left()), go(g.right())); break;
      case NodeKind::box: r = Formula::box(g.coalition(), go(g.left())); break;
      case NodeKind::box_o: r = Formula::box_o(go(g.left())); break;
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(f);
}

std::set<int> propositions(const Formula& f) {
  std::set<int> out;
  for (const Formula& g : subformulas(f).members)
    if (g.kind() == NodeKind::prop) out.insert(g.prop_id());
  return out;
}

}  // namespace lukeff
