#include "bialg/scalar.hpp"

#include <sstream>

namespace bialg {

namespace {

unsigned total(const Monomial& m) {
  unsigned t = 0;
  for (unsigned e : m) t += e;
  return t;
}

}  // namespace

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total(a);
  unsigned db = total(b);
  if (da != db) return da < db;
  return a < b;
}

Scalar::Scalar(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw StructureError("scalar: negative variable count");
}

Scalar Scalar::constant(int nvars, const Rational& c) {
  Scalar s(nvars);
  if (c != 0) s.terms_.emplace(Monomial(static_cast<size_t>(nvars), 0u), c);
  return s;
}

Scalar Scalar::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw StructureError("scalar: variable index out of range");
  Monomial m(static_cast<size_t>(nvars), 0u);
  m[static_cast<size_t>(index)] = 1;
  return monomial(nvars, std::move(m), 1);
}

Scalar Scalar::monomial(int nvars, Monomial exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw StructureError("scalar: exponent vector length mismatch");
  Scalar s(nvars);
  if (c != 0) s.terms_.emplace(std::move(exponents), c);
  return s;
}

int Scalar::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total(m)));
  return d;
}

void Scalar::require_same_patch(const Scalar& rhs) const {
  if (nvars_ != rhs.nvars_) throw StructureError("scalar: mismatched base patches");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_patch(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_patch(rhs);
  for (const auto& [m, c] : rhs.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_patch(rhs);
  std::map<Monomial, Rational, GradedLexLess> out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  for (auto& [m, v] : s.terms_) v = -v;
  return s;
}

Scalar Scalar::derivative(int index) const {
  if (index < 0 || index >= nvars_) throw StructureError("scalar: derivative index out of range");
  Scalar out(nvars_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m[static_cast<size_t>(index)];
    if (e == 0) continue;
    Monomial md(m);
    md[static_cast<size_t>(index)] = e - 1;
    out.terms_.emplace(std::move(md), c * e);
  }
  return out;
}

Rational Scalar::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw StructureError("scalar: evaluation point length mismatch");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    acc += term;
  }
  return acc;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

namespace {

std::string render_monomial(const Monomial& m, const BasePatch& base) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += base.coords[i];
    if (m[i] > 1) {
      out += "^";
      out += std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Scalar& p, const BasePatch& base) {
  if (base.dim() != p.nvars()) throw StructureError("scalar: rendering against wrong patch");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string mono = render_monomial(m, base);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag);
      out += "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace bialg
