#include "bdkp/render.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bdkp {

namespace {

std::string mono_plain(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exps()) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string mono_latex(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.exps()) {
    if (!out.empty()) out += " ";
    std::string base = v.kind == VarKind::time_primed ? "t'" : (v.kind == VarKind::aux ? "x" : "t");
    out += base + "_{" + std::to_string(v.index) + "}";
    if (e > 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

}  // namespace

std::string to_plain(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      Rational a = c.rat();
      negative = a < 0;
      if (negative) a = -a;
      std::string num = a.get_num().get_str();
      std::string den = a.get_den().get_str();
      if (m.empty()) {
        body = num;
        if (den != "1") body += "/" + den;
      } else {
        body = num == "1" ? mono_plain(m) : num + "*" + mono_plain(m);
        if (den != "1") body += "/" + den;
      }
    } else {
      body = "(" + c.str() + ")";
      if (!m.empty()) body += "*" + mono_plain(m);
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string to_latex(const MPoly& p) {
  if (p.is_zero()) return "0";
  auto frac = [](const Rational& r) {
    std::string num = r.get_num().get_str();
    std::string den = r.get_den().get_str();
    if (den == "1") return num;
    bool neg = num.front() == '-';
    if (neg) num.erase(num.begin());
    std::string f = "\\frac{" + num + "}{" + den + "}";
    return neg ? "-" + f : f;
  };
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational a = c.rat();
      negative = a < 0;
      if (negative) a = -a;
      coeff = (a == 1 && !m.empty()) ? "" : frac(a);
    } else {
      std::string rad = c.rad() == 1 ? "\\sqrt{2}" : frac(c.rad()) + "\\sqrt{2}";
      coeff = c.rat() == 0 ? rad
                           : "\\left(" + frac(c.rat()) +
                                 (c.rad() > 0 ? " + " + rad
                                              : " - " + (c.rad() == -1
                                                             ? std::string("\\sqrt{2}")
                                                             : frac(Rational(-c.rad())) + "\\sqrt{2}")) +
                                 "\\right)";
    }
    std::string body = coeff;
    if (!m.empty()) {
      if (!body.empty()) body += " ";
      body += mono_latex(m);
    }
    if (body.empty()) body = "1";
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

nlohmann::json poly_to_json(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.exps()) exps[v.name()] = e;
    terms.push_back({{"exps", std::move(exps)},
                     {"coeff", {rational_to_string(c.rat()), rational_to_string(c.rad())}}});
  }
  return {{"terms", std::move(terms)}};
}

namespace {

VarId var_from_name(const std::string& name) {
  bool primed = name.rfind("t'_", 0) == 0;
  bool plain = name.rfind("t_", 0) == 0;
  if (!primed && !plain) throw std::invalid_argument("unknown variable: " + name);
  int idx = std::stoi(name.substr(primed ? 3 : 2));
  return primed ? VarId::time_primed(idx) : VarId::time(idx);
}

}  // namespace

MPoly poly_from_json(const nlohmann::json& j) {
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial json needs a terms array");
  MPoly out;
  for (const auto& t : j["terms"]) {
    std::vector<std::pair<VarId, std::uint32_t>> exps;
    for (const auto& [name, e] : t.at("exps").items())
      exps.emplace_back(var_from_name(name), e.get<std::uint32_t>());
    const auto& c = t.at("coeff");
    Scalar coeff(rational_from_string(c.at(0).get<std::string>()),
                 rational_from_string(c.at(1).get<std::string>()));
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

namespace {

// Recursive-descent parser over the plain rendering grammar.
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  MPoly expr() {
    skip_ws();
    bool neg = consume('-');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (consume('+'))
        acc += term();
      else if (consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      skip_ws();
      if (consume('*')) {
        acc *= factor();
      } else if (consume('/')) {
        MPoly d = factor();
        Scalar c = d.as_constant();
        if (c.is_zero()) fail("division by zero");
        acc *= c.inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base = atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      long e = integer();
      if (e < 0) fail("negative exponent");
      MPoly p(1);
      for (long i = 0; i < e; ++i) p *= base;
      return p;
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (consume('(')) {
      MPoly p = expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(std::uint8_t(s_[pos_]))) {
      // arbitrary-precision literal; GMP parses the digit run
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(std::uint8_t(s_[pos_]))) ++pos_;
      return MPoly(Scalar(rational_from_string(s_.substr(start, pos_ - start))));
    }
    if (match("sqrt2")) return MPoly(Scalar::sqrt2());
    if (pos_ < s_.size() && s_[pos_] == 't') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_' in variable");
      ++pos_;
      std::size_t num_start = pos_;
      while (pos_ < s_.size() && std::isdigit(std::uint8_t(s_[pos_]))) ++pos_;
      if (pos_ == num_start) fail("expected variable index");
      try {
        return MPoly::var(var_from_name(s_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail("expected a number, variable, sqrt2 or '('");
    return MPoly();
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(std::uint8_t(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool match(const std::string& word) {
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool consume(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(std::uint8_t(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace bdkp
