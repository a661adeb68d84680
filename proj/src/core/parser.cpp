#include "lctkit/core/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lctkit/core/error.hpp"

namespace lctkit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const VariableList& vars, std::size_t offset)
      : text_(text), vars_(vars), offset_(offset) {}

  Polynomial parse() {
    Polynomial result(vars_.size());
    skip_space();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(result, negative);
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      ++pos_;
      parse_term(result, c == '-');
    }
    return result;
  }

 private:
  void parse_term(Polynomial& result, bool negative) {
    skip_space();
    Rational coefficient = 1;
    ExponentVector exponents(vars_.size());
    bool need_factor = true;
    if (!at_end() && is_digit(peek())) {
      coefficient = parse_coefficient();
      skip_space();
      if (at_end() || peek() != '*') {
        need_factor = false;
      } else {
        ++pos_;
      }
    }
    if (need_factor) {
      parse_factor(exponents);
      for (;;) {
        skip_space();
        if (at_end() || peek() != '*') break;
        ++pos_;
        parse_factor(exponents);
      }
    }
    result.add_term(exponents, negative ? -coefficient : coefficient);
  }

  Rational parse_coefficient() {
    BigInt num = parse_natural("coefficient");
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      BigInt den = parse_natural("denominator");
      if (den == 0) fail_at("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  void parse_factor(ExponentVector& exponents) {
    skip_space();
    const std::size_t start = pos_;
    if (at_end() || !is_ident_start(peek())) fail("expected a variable");
    while (!at_end() && is_ident_char(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = vars_.index_of(name);
    if (!index) fail_at("unknown variable '" + std::string(name) + "'", start);
    skip_space();
    BigInt exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (!at_end() && peek() == '-') fail("negative exponent");
      exponent = parse_natural("exponent");
    }
    if (exponent > BigInt(1u << 30)) fail("exponent too large");
    exponents[*index] += static_cast<ExponentVector::value_type>(exponent.get_ui());
  }

  BigInt parse_natural(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, offset_ + at);
  }

  std::string_view text_;
  const VariableList& vars_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// Splits on commas, remembering where each piece starts.
std::vector<std::pair<std::string_view, std::size_t>> split_commas(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      pieces.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return pieces;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

VariableList::VariableList(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("variable list must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& name = names_[i];
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char))
      throw DomainError("invalid variable name '" + name + "'");
    if (std::find(names_.begin(), names_.begin() + i, name) != names_.begin() + i)
      throw DomainError("duplicate variable '" + name + "'");
  }
}

VariableList VariableList::parse(std::string_view text) {
  std::vector<std::string> names;
  for (auto [piece, at] : split_commas(text)) {
    std::string name;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    names.push_back(std::move(name));
  }
  return VariableList(std::move(names));
}

VariableList VariableList::standard(std::size_t n) {
  if (n == 0) throw DomainError("need at least one variable");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? std::string(1, "xyzw"[i]) : "x" + std::to_string(i + 1));
  return VariableList(std::move(names));
}

VariableList VariableList::infer(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (is_ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else if (is_digit(text[i])) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  static const std::vector<std::string> preferred = {"x", "y", "z", "w"};
  auto rank = [](const std::string& s) {
    auto it = std::find(preferred.begin(), preferred.end(), s);
    return static_cast<std::size_t>(it - preferred.begin());
  };
  std::sort(names.begin(), names.end(), [&](const std::string& a, const std::string& b) {
    const auto ra = rank(a), rb = rank(b);
    return ra != rb ? ra < rb : a < b;
  });
  if (names.empty()) names.push_back("x");
  return VariableList(std::move(names));
}

std::optional<std::size_t> VariableList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial parse_polynomial(std::string_view text, const VariableList& vars) {
  return PolynomialParser(text, vars, 0).parse();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const VariableList& vars) {
  std::vector<Polynomial> result;
  for (auto [piece, at] : split_commas(text)) {
    if (blank(piece)) throw ParseError("empty list entry", at);
    result.push_back(PolynomialParser(piece, vars, at).parse());
  }
  return result;
}

MonomialIdeal parse_monomial_ideal(std::string_view text, const VariableList& vars) {
  if (blank(text)) throw ParseError("empty monomial list", 0);
  std::vector<ExponentVector> raw;
  for (auto [piece, at] : split_commas(text)) {
    if (blank(piece)) throw ParseError("empty list entry", at);
    const Polynomial p = PolynomialParser(piece, vars, at).parse();
    if (p.term_count() != 1 || p.terms().begin()->second != Rational(1))
      throw ParseError("'" + std::string(piece) + "' is not a monomial", at);
    raw.push_back(p.terms().begin()->first);
  }
  return MonomialIdeal::minimalize(raw);
}

std::string to_string(const ExponentVector& e, const VariableList& vars) {
  require_same_dimension(vars.size(), e.size());
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const VariableList& vars) {
  require_same_dimension(vars.size(), p.dimension());
  if (p.is_zero()) return "0";
  std::string out;
  // Highest exponent vector first, so x^2 + y^3 prints as written.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = c.abs();
    if (e.is_zero()) {
      out += magnitude.str();
    } else {
      if (magnitude != Rational(1)) out += magnitude.str() + '*';
      out += to_string(e, vars);
    }
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal, const VariableList& vars) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += to_string(g, vars);
  }
  return out;
}

}  // namespace lctkit
