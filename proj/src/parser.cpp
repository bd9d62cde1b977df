#include "ringlab/parser.hpp"

#include <algorithm>
#include <cctype>

#include "ringlab/groups.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

bool RingExpression::operator==(const RingExpression& other) const {
  if (kind != other.kind || a != other.a || b != other.b ||
      endo != other.endo || group_atoms != other.group_atoms ||
      gens != other.gens || children.size() != other.children.size())
    return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!(*children[i] == *other.children[i])) return false;
  }
  return true;
}

namespace {

struct Token {
  enum class Type { Word, Number, Times, LParen, RParen, Comma, Semi, End };
  Type type = Type::End;
  std::string word;          // uppercased letters of a Word
  std::uint64_t number = 0;  // trailing digits of a Word, or a Number
  bool has_number = false;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.type = Token::Type::End;
      return;
    }
    char c = text_[i_];
    if (c == '(') { tok_.type = Token::Type::LParen; ++i_; return; }
    if (c == ')') { tok_.type = Token::Type::RParen; ++i_; return; }
    if (c == ',') { tok_.type = Token::Type::Comma; ++i_; return; }
    if (c == ';') { tok_.type = Token::Type::Semi; ++i_; return; }
    if (c == 'x' || c == 'X') {
      // the product operator; never part of a name
      tok_.type = Token::Type::Times;
      ++i_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.type = Token::Type::Number;
      std::uint64_t v = 0;
      while (i_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        v = v * 10 + (text_[i_] - '0');
        if (v > (1ull << 40)) throw parse_error(tok_.pos, "number too large");
        ++i_;
      }
      tok_.number = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      tok_.type = Token::Type::Word;
      while (i_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[i_])) &&
             text_[i_] != 'x' && text_[i_] != 'X') {
        tok_.word.push_back(static_cast<char>(
            std::toupper(static_cast<unsigned char>(text_[i_]))));
        ++i_;
      }
      if (i_ < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        std::uint64_t v = 0;
        while (i_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          v = v * 10 + (text_[i_] - '0');
          if (v > (1ull << 40))
            throw parse_error(tok_.pos, "number too large");
          ++i_;
        }
        tok_.number = v;
        tok_.has_number = true;
      }
      return;
    }
    throw parse_error(i_, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_expr() {
    ExprPtr first = parse_primary();
    if (lex_.peek().type != Token::Type::Times) return first;
    auto node = std::make_shared<RingExpression>();
    node->kind = RingExpression::Kind::Product;
    auto flatten = [&node](const ExprPtr& e) {
      if (e->kind == RingExpression::Kind::Product) {
        for (const auto& c : e->children) node->children.push_back(c);
      } else {
        node->children.push_back(e);
      }
    };
    flatten(first);
    while (lex_.peek().type == Token::Type::Times) {
      lex_.take();
      flatten(parse_primary());
    }
    return node;
  }

  void expect_end() {
    if (lex_.peek().type != Token::Type::End) {
      throw parse_error(lex_.peek().pos, "trailing input");
    }
  }

 private:
  Token expect(Token::Type type, const std::string& what) {
    if (lex_.peek().type != type) {
      throw parse_error(lex_.peek().pos, "expected " + what);
    }
    return lex_.take();
  }

  std::uint64_t expect_number(const std::string& what) {
    Token t = expect(Token::Type::Number, what);
    return t.number;
  }

  void expect_separator() {
    auto type = lex_.peek().type;
    if (type != Token::Type::Comma && type != Token::Type::Semi) {
      throw parse_error(lex_.peek().pos, "expected ',' or ';'");
    }
    lex_.take();
  }

  ExprPtr parse_primary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::LParen) {
      lex_.take();
      ExprPtr inner = parse_expr();
      expect(Token::Type::RParen, "')'");
      return inner;
    }
    if (t.type != Token::Type::Word) {
      throw parse_error(t.pos, "expected a ring constructor");
    }
    Token head = lex_.take();
    auto node = std::make_shared<RingExpression>();

    if (head.word == "Z") {
      if (!head.has_number)
        throw parse_error(head.pos, "Z needs a modulus, e.g. Z4");
      node->kind = RingExpression::Kind::Zmod;
      node->a = head.number;
      return node;
    }
    if (head.word == "GF") {
      if (head.has_number)
        throw parse_error(head.pos, "write GF(p, k), not GF<n>");
      expect(Token::Type::LParen, "'('");
      node->kind = RingExpression::Kind::GaloisFieldExpr;
      node->a = expect_number("a prime p");
      expect_separator();
      node->b = expect_number("an exponent k");
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "M" || head.word == "T" || head.word == "S") {
      if (!head.has_number)
        throw parse_error(head.pos, head.word + " needs a dimension, e.g. " +
                                        head.word + "2(...)");
      node->kind = head.word == "M"
                       ? RingExpression::Kind::Matrix
                       : (head.word == "T"
                              ? RingExpression::Kind::UpperTriangular
                              : RingExpression::Kind::EqualDiagTriangular);
      node->a = head.number;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "TSKEW") {
      if (!head.has_number)
        throw parse_error(head.pos, "Tskew needs a dimension");
      node->kind = RingExpression::Kind::SkewTriangular;
      node->a = head.number;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect_separator();
      Token endo = expect(Token::Type::Word, "an endomorphism name");
      std::string name = endo.word;
      std::transform(name.begin(), name.end(), name.begin(), ::tolower);
      if (endo.has_number || (name != "identity" && name != "frobenius")) {
        throw parse_error(endo.pos,
                          "unknown endomorphism (identity or frobenius)");
      }
      node->endo = name;
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "K") {
      if (head.has_number)
        throw parse_error(head.pos, "write K(ring, s)");
      node->kind = RingExpression::Kind::FormalKs;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect_separator();
      node->b = expect_number("an element index s");
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "MF") {
      if (!head.has_number)
        throw parse_error(head.pos, "MF needs a dimension, e.g. MF2(...)");
      node->kind = RingExpression::Kind::FormalNs;
      node->a = head.number;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect_separator();
      node->b = expect_number("an element index s");
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "TE") {
      node->kind = RingExpression::Kind::TrivialExt;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "GR") {
      node->kind = RingExpression::Kind::GroupRingExpr;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      expect_separator();
      node->group_atoms.push_back(parse_group_atom());
      while (lex_.peek().type == Token::Type::Times) {
        lex_.take();
        node->group_atoms.push_back(parse_group_atom());
      }
      expect(Token::Type::RParen, "')'");
      return node;
    }
    if (head.word == "Q") {
      if (head.has_number)
        throw parse_error(head.pos, "write Q(ring, gens...)");
      node->kind = RingExpression::Kind::Quotient;
      expect(Token::Type::LParen, "'('");
      node->children.push_back(parse_expr());
      while (lex_.peek().type == Token::Type::Comma ||
             lex_.peek().type == Token::Type::Semi) {
        lex_.take();
        node->gens.push_back(expect_number("an ideal generator index"));
      }
      expect(Token::Type::RParen, "')'");
      return node;
    }
    throw parse_error(head.pos, "unknown constructor " + head.word);
  }

  std::string parse_group_atom() {
    Token t = expect(Token::Type::Word, "a group name");
    if (t.word == "C" && t.has_number && t.number >= 1) {
      return "C" + std::to_string(t.number);
    }
    if (t.word == "D" && t.has_number && t.number >= 1) {
      return "D" + std::to_string(t.number);
    }
    if (t.word == "Q" && t.has_number && t.number == 8) return "Q8";
    if (t.word == "S" && t.has_number && t.number == 3) return "S3";
    throw parse_error(t.pos, "unknown group (C<n>, D<n>, Q8, S3)");
  }

  Lexer lex_;
};

GroupPtr build_group_atom(const std::string& atom) {
  if (atom == "Q8") return make_quaternion8();
  if (atom == "S3") return make_symmetric3();
  unsigned n = static_cast<unsigned>(std::stoul(atom.substr(1)));
  if (atom[0] == 'C') return make_cyclic(n);
  return make_dihedral(n);
}

}  // namespace

ExprPtr parse(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.parse_expr();
  p.expect_end();
  return e;
}

std::string print(const RingExpression& e) {
  using Kind = RingExpression::Kind;
  switch (e.kind) {
    case Kind::Zmod:
      return "Z" + std::to_string(e.a);
    case Kind::GaloisFieldExpr:
      return "GF(" + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
    case Kind::Product: {
      std::string out;
      for (const auto& c : e.children) {
        if (!out.empty()) out += " x ";
        out += print(*c);
      }
      return out;
    }
    case Kind::Matrix:
      return "M" + std::to_string(e.a) + "(" + print(*e.children[0]) + ")";
    case Kind::UpperTriangular:
      return "T" + std::to_string(e.a) + "(" + print(*e.children[0]) + ")";
    case Kind::EqualDiagTriangular:
      return "S" + std::to_string(e.a) + "(" + print(*e.children[0]) + ")";
    case Kind::SkewTriangular:
      return "Tskew" + std::to_string(e.a) + "(" + print(*e.children[0]) +
             ", " + e.endo + ")";
    case Kind::FormalKs:
      return "K(" + print(*e.children[0]) + ", " + std::to_string(e.b) + ")";
    case Kind::FormalNs:
      return "MF" + std::to_string(e.a) + "(" + print(*e.children[0]) + ", " +
             std::to_string(e.b) + ")";
    case Kind::TrivialExt:
      return "TE(" + print(*e.children[0]) + ")";
    case Kind::GroupRingExpr: {
      std::string g;
      for (const auto& atom : e.group_atoms) {
        if (!g.empty()) g += " x ";
        g += atom;
      }
      return "GR(" + print(*e.children[0]) + ", " + g + ")";
    }
    case Kind::Quotient: {
      std::string out = "Q(" + print(*e.children[0]);
      for (auto g : e.gens) out += ", " + std::to_string(g);
      return out + ")";
    }
  }
  throw ring_error("unhandled expression kind");
}

RingPtr evaluate(const RingExpression& e) {
  using Kind = RingExpression::Kind;
  switch (e.kind) {
    case Kind::Zmod:
      return make_zmod(e.a);
    case Kind::GaloisFieldExpr:
      return make_gf(static_cast<std::uint32_t>(e.a),
                     static_cast<std::uint32_t>(e.b))
          .ring;
    case Kind::Product: {
      std::vector<RingPtr> factors;
      for (const auto& c : e.children) factors.push_back(evaluate(*c));
      return direct_product(factors);
    }
    case Kind::Matrix:
      return matrix_ring(evaluate(*e.children[0]),
                         static_cast<unsigned>(e.a));
    case Kind::UpperTriangular:
      return upper_triangular(evaluate(*e.children[0]),
                              static_cast<unsigned>(e.a));
    case Kind::EqualDiagTriangular:
      return equal_diag_triangular(evaluate(*e.children[0]),
                                   static_cast<unsigned>(e.a));
    case Kind::SkewTriangular: {
      if (e.endo == "frobenius") {
        if (e.children[0]->kind != Kind::GaloisFieldExpr) {
          throw ring_error(
              "frobenius is only available over GF(p, k) base rings");
        }
        GaloisField gf =
            make_gf(static_cast<std::uint32_t>(e.children[0]->a),
                    static_cast<std::uint32_t>(e.children[0]->b));
        return skew_triangular(gf.ring, gf.frobenius,
                               static_cast<unsigned>(e.a));
      }
      RingPtr base = evaluate(*e.children[0]);
      return skew_triangular(base, identity_endomorphism(base),
                             static_cast<unsigned>(e.a));
    }
    case Kind::FormalKs: {
      RingPtr base = evaluate(*e.children[0]);
      if (e.b >= base->size()) {
        throw ring_error("element index " + std::to_string(e.b) +
                         " out of range for " + base->label());
      }
      return formal_matrix_ks(base, static_cast<Index>(e.b));
    }
    case Kind::FormalNs: {
      RingPtr base = evaluate(*e.children[0]);
      if (e.b >= base->size()) {
        throw ring_error("element index " + std::to_string(e.b) +
                         " out of range for " + base->label());
      }
      return formal_matrix_ns(base, static_cast<unsigned>(e.a),
                              static_cast<Index>(e.b));
    }
    case Kind::TrivialExt:
      return trivial_extension(evaluate(*e.children[0]));
    case Kind::GroupRingExpr: {
      RingPtr base = evaluate(*e.children[0]);
      GroupPtr G = build_group_atom(e.group_atoms[0]);
      for (std::size_t i = 1; i < e.group_atoms.size(); ++i) {
        G = make_group_product(G, build_group_atom(e.group_atoms[i]));
      }
      return make_group_ring(base, G).ring;
    }
    case Kind::Quotient: {
      RingPtr base = evaluate(*e.children[0]);
      std::vector<Index> gens;
      for (auto g : e.gens) {
        if (g >= base->size()) {
          throw ring_error("ideal generator index " + std::to_string(g) +
                           " out of range for " + base->label());
        }
        gens.push_back(static_cast<Index>(g));
      }
      ElementSet I = ideal_closure(base, gens);
      return quotient(base, I, print(e));
    }
  }
  throw ring_error("unhandled expression kind");
}

}  // namespace ringlab
