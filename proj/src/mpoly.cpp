#include "bdkp/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdkp {

VarId VarId::time(std::uint32_t j) {
  if (j == 0 || j % 2 == 0) throw std::invalid_argument("time variables must have odd index");
  return VarId{VarKind::time, j};
}

VarId VarId::time_primed(std::uint32_t j) {
  if (j == 0 || j % 2 == 0) throw std::invalid_argument("time variables must have odd index");
  return VarId{VarKind::time_primed, j};
}

VarId VarId::aux(std::uint32_t i) {
  if (i == 0) throw std::invalid_argument("aux index must be positive");
  return VarId{VarKind::aux, i};
}

std::string VarId::name() const {
  switch (kind) {
    case VarKind::time:
      return "t_" + std::to_string(index);
    case VarKind::time_primed:
      return "t'_" + std::to_string(index);
    case VarKind::aux:
      return "x_" + std::to_string(index);
  }
  return "?";
}

Monomial::Monomial(std::vector<std::pair<VarId, std::uint32_t>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i].second == 0) throw std::invalid_argument("zero exponent in monomial");
    if (i > 0 && exps_[i - 1].first == exps_[i].first)
      throw std::invalid_argument("duplicate variable in monomial");
  }
}

long Monomial::weighted_degree() const {
  long d = 0;
  for (const auto& [v, e] : exps_) d += v.weight() * long(e);
  return d;
}

std::uint32_t Monomial::exponent(const VarId& v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::pair<VarId, std::uint32_t>> out;
  out.reserve(exps_.size() + o.exps_.size());
  auto a = exps_.begin();
  auto b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (a->first < b->first)
      out.push_back(*a++);
    else if (b->first < a->first)
      out.push_back(*b++);
    else {
      out.emplace_back(a->first, a->second + b->second);
      ++a, ++b;
    }
  }
  out.insert(out.end(), a, exps_.end());
  out.insert(out.end(), b, o.exps_.end());
  Monomial m;
  m.exps_ = std::move(out);
  return m;
}

bool Monomial::operator<(const Monomial& o) const {
  return std::lexicographical_compare(
      exps_.begin(), exps_.end(), o.exps_.begin(), o.exps_.end(), [](const auto& a, const auto& b) {
        if (a.first.key() != b.first.key()) return a.first.key() < b.first.key();
        return a.second < b.second;
      });
}

MPoly::MPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MPoly MPoly::var(VarId v, std::uint32_t exp) {
  if (exp == 0) return MPoly(Scalar(1));
  MPoly p;
  p.terms_.emplace(Monomial({{v, exp}}), Scalar(1));
  return p;
}

MPoly MPoly::term(const Scalar& c, const Monomial& m) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Scalar MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar MPoly::as_constant() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  throw std::invalid_argument("polynomial is not constant");
}

long MPoly::weighted_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.weighted_degree());
  return d;
}

bool MPoly::is_weighted_homogeneous(long degree) const {
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree() != degree) return false;
  return true;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  out += o;
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  out -= o;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MPoly MPoly::operator*(const Scalar& c) const {
  if (c.is_zero()) return MPoly();
  MPoly out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& bindings) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    MPoly factor(c);
    Monomial rest;
    for (const auto& [v, e] : m.exps()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest = rest * Monomial({{v, e}});
      } else {
        for (std::uint32_t k = 0; k < e; ++k) factor *= it->second;
      }
    }
    out += factor * MPoly::term(Scalar(1), rest);
  }
  return out;
}

Scalar MPoly::eval(const std::map<VarId, Scalar>& bindings) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (const auto& [var, e] : m.exps()) {
      auto it = bindings.find(var);
      if (it == bindings.end())
        throw std::invalid_argument("eval: unbound variable " + var.name());
      for (std::uint32_t k = 0; k < e; ++k) v *= it->second;
    }
    out += v;
  }
  return out;
}

MPoly MPoly::to_primed() const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<std::pair<VarId, std::uint32_t>> exps;
    exps.reserve(m.exps().size());
    for (const auto& [v, e] : m.exps())
      exps.emplace_back(v.kind == VarKind::time ? VarId::time_primed(v.index) : v, e);
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

bool MPoly::has_primed_vars() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exps())
      if (v.kind == VarKind::time_primed) return true;
  return false;
}

}  // namespace bdkp
