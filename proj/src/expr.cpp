#include "qdeform/expr.hpp"

#include <cctype>
#include <optional>

namespace qdeform {

namespace {

struct Parser {
  DatumPtr datum;  // null in scalar-only mode
  GroupSpecPtr group;
  Field field;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, static_cast<int>(pos));
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    return std::stol(s.substr(start, pos - start));
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  NcPoly make_scalar(const Scalar& c) { return NcPoly::scalar(datum, c); }

  NcPoly atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      NcPoly e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return make_scalar(Scalar::integer(field, parse_int()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = parse_ident();
      if (datum) {
        int li = datum->letter_index(name);
        if (li >= 0) return NcPoly::letter(datum, li);
      }
      for (int gi = 0; gi < group->rank(); ++gi)
        if (group->names[gi] == name)
          return NcPoly::group(datum, GroupElement::generator(group, gi));
      if (name == "q" || name == "z") {
        if (field.kind == FieldKind::rational)
          fail("'" + name + "' is not defined over the rationals");
        return make_scalar(Scalar::generator(field));
      }
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected character");
  }

  // returns the scalar value of a polynomial that must be scalar
  Scalar as_scalar(const NcPoly& p, const char* what) {
    if (p.is_zero()) return Scalar::zero(field);
    if (p.term_count() == 1) {
      auto [m, c] = p.leading();
      if (m.word.empty() && m.group.is_identity()) return c;
    }
    fail(std::string(what) + " requires a scalar operand");
  }

  NcPoly power() {
    NcPoly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    eat('^');
    long e = parse_int();
    if (e >= 0) {
      NcPoly r = NcPoly::one(datum);
      for (long k = 0; k < e; ++k) r = r * base;
      return r;
    }
    // negative power: scalar or group-like base
    if (base.term_count() == 1) {
      auto [m, c] = base.leading();
      if (m.word.empty()) {
        NcPoly r = NcPoly::monomial(datum, {Word{}, m.group.pow(e)},
                                    c.pow(e));
        return r;
      }
    }
    fail("negative power of a non-invertible element");
  }

  NcPoly term() {
    NcPoly r = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        eat('*');
        r = r * power();
      } else if (c == '/') {
        eat('/');
        NcPoly d = power();
        r = r * as_scalar(d, "division").inverse();
      } else {
        break;
      }
    }
    return r;
  }

  NcPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      eat('-');
      neg = true;
    } else if (peek() == '+') {
      eat('+');
    }
    NcPoly r = term();
    if (neg) r = -r;
    for (;;) {
      char c = peek();
      if (c == '+') {
        eat('+');
        r += term();
      } else if (c == '-') {
        eat('-');
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  NcPoly parse() {
    NcPoly r = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return r;
  }
};

// one-letter dummy datum so scalar/group parsing can reuse the machinery
DatumPtr scalar_dummy_datum(const Field& field, GroupSpecPtr spec) {
  Character chi = Character::trivial(spec, field);
  std::vector<Letter> letters = {
      {"__dummy", 0, GroupElement::identity(spec), chi}};
  return std::make_shared<YDDatum>(spec, std::vector<std::string>{"only"},
                                   std::move(letters));
}

}  // namespace

NcPoly parse_expression(DatumPtr datum, const std::string& text) {
  Parser p{datum, datum->group(), datum->field(), text};
  return p.parse();
}

Scalar parse_scalar(const Field& field, const std::string& text) {
  auto spec = GroupSpec::make({}, {});
  auto dummy = scalar_dummy_datum(field, spec);
  Parser p{dummy, spec, field, text};
  NcPoly r = p.parse();
  return p.as_scalar(r, "scalar context");
}

GroupElement parse_group_element(GroupSpecPtr spec, const std::string& text) {
  Field f = Field::rationals();
  auto dummy = scalar_dummy_datum(f, spec);
  Parser p{dummy, spec, f, text};
  NcPoly r = p.parse();
  if (r.term_count() != 1) throw error("expected a single group element");
  auto [m, c] = r.leading();
  if (!m.word.empty() || !c.is_one())
    throw error("expected a pure group element");
  return m.group;
}

}  // namespace qdeform
