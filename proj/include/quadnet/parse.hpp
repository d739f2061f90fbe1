#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "quadnet/error.hpp"
#include "quadnet/net.hpp"
#include "quadnet/poly.hpp"
#include "quadnet/rational.hpp"

namespace quadnet {

namespace detail {

// Recursive-descent reader for
//   expression := sign? term (('+'|'-') term)*
//   term       := rational? '*'? factor*       (at least one part present)
//   factor     := variable ('^' digits)?
// over single-letter variables. Offsets are relative to the whole input.
class PolyReader {
 public:
  PolyReader(std::string_view text, std::size_t offset, const std::vector<std::string>& vars)
      : text_(text), offset_(offset), vars_(vars) {}

  MultiPoly expression() {
    MultiPoly out(vars_);
    skip_space();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out += term() * Rational(sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
      ++pos_;
      out += term() * Rational(c == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  MultiPoly term() {
    skip_space();
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        const std::size_t at = pos_;
        Rational den = number();
        if (sgn(den) == 0) fail_at("zero denominator", at);
        coeff /= den;
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_variable(peek())) fail("expected variable after '*'");
      }
    }
    MultiPoly::Exponent e(vars_.size(), 0);
    bool have_monomial = false;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (have_monomial && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !is_variable(peek())) fail("expected variable after '*'");
      }
      if (!is_variable(peek())) {
        if (std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("unknown variable '") + peek() + "'");
        break;
      }
      const std::size_t v = variable_index(peek());
      ++pos_;
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        const std::size_t at = pos_;
        const Rational p = number();
        if (p > 1000) fail_at("exponent too large", at);
        power = static_cast<int>(p.get_num().get_si());
      }
      e[v] += power;
      have_monomial = true;
    }
    if (!have_coeff && !have_monomial) fail("expected a term");
    return MultiPoly::monomial(vars_, std::move(e), coeff);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 200) fail_at("number too long", start);
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  bool is_variable(char c) const {
    for (const auto& v : vars_)
      if (v.size() == 1 && v[0] == c) return true;
    return false;
  }
  std::size_t variable_index(char c) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i][0] == c) return i;
    return 0;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, offset_ + at); }

  std::string_view text_;
  std::size_t offset_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

struct Piece {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<Piece> split_commas(std::string_view text) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ',') {
      out.push_back({text.substr(start, i - start), start});
      start = i + 1;
    }
  return out;
}

inline QuadraticForm quadric_from_piece(const Piece& p) {
  MultiPoly f = PolyReader(p.text, p.offset, variable_names()).expression();
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (d != 2) throw ParseError("term of degree " + std::to_string(d) + " in a quadric (expected degree 2)", p.offset);
  }
  if (f.is_zero()) throw ParseError("quadric is identically zero", p.offset);
  return QuadraticForm::from_poly(f);
}

template <int Dim>
QuadricSystem<Dim> parse_system(std::string_view text) {
  const auto pieces = split_commas(text);
  if (pieces.size() != Dim) {
    const std::size_t at = pieces.size() > Dim ? pieces[Dim].offset - 1 : text.size();
    throw ParseError("expected " + std::to_string(Dim) + " comma-separated quadrics, got " +
                         std::to_string(pieces.size()),
                     at);
  }
  std::vector<QuadraticForm> forms;
  for (const auto& p : pieces) forms.push_back(quadric_from_piece(p));
  return QuadricSystem<Dim>(std::move(forms));
}

}  // namespace detail

/// Parses a polynomial in the given single-letter variables.
inline MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return detail::PolyReader(text, 0, variables).expression();
}

/// One homogeneous quadric in a..e, e.g. "ae - 2bd + c^2".
inline QuadraticForm parse_quadric(std::string_view text) { return detail::quadric_from_piece({text, 0}); }

/// Three comma-separated quadrics. Throws ParseError on bad syntax or a
/// non-quadratic term and RankError if the quadrics are dependent.
inline Net parse_net(std::string_view text) { return detail::parse_system<3>(text); }

inline Pencil parse_pencil(std::string_view text) { return detail::parse_system<2>(text); }

}  // namespace quadnet
