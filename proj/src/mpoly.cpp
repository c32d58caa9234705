#include "polytime/mpoly.hpp"

#include <algorithm>
#include <map>

#include "polytime/errors.hpp"

namespace polytime {

namespace {

std::size_t total_degree(const Monomial& m) {
  std::size_t d = 0;
  for (const auto& [v, p] : m.factors) d += p;
  return d;
}

std::size_t max_exponent(const Monomial& m) {
  std::size_t e = 0;
  for (const auto& [v, p] : m.factors) e = std::max(e, p);
  return e;
}

std::size_t exponent_of(const Monomial& m, std::size_t var) {
  for (const auto& [v, p] : m.factors)
    if (v == var) return p;
  return 0;
}

// true if a is printed before b.
bool monomial_before(const Monomial& a, const Monomial& b) {
  std::size_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  std::size_t ea = max_exponent(a), eb = max_exponent(b);
  if (ea != eb) return ea > eb;
  std::size_t last = 0;
  if (!a.factors.empty()) last = std::max(last, a.factors.back().first + 1);
  if (!b.factors.empty()) last = std::max(last, b.factors.back().first + 1);
  for (std::size_t v = 0; v < last; ++v) {
    std::size_t pa = exponent_of(a, v), pb = exponent_of(b, v);
    if (pa != pb) return pa > pb;
  }
  return false;
}

}  // namespace

MPoly MPoly::constant(std::size_t n_vars, Nat c) {
  std::vector<Monomial> terms;
  if (c != 0) terms.push_back(Monomial{std::move(c), {}});
  return from_monomials(n_vars, std::move(terms));
}

MPoly MPoly::variable(std::size_t n_vars, std::size_t i) {
  if (i >= n_vars)
    throw PolyError("variable index " + std::to_string(i) +
                    " out of range for " + std::to_string(n_vars) + " variables");
  return from_monomials(n_vars, {Monomial{1, {{i, 1}}}});
}

MPoly MPoly::from_monomials(std::size_t n_vars, std::vector<Monomial> terms) {
  // Merge like terms via a normalized factor-list key.
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, Nat> merged;
  for (auto& t : terms) {
    if (t.coeff < 0) throw PolyError("negative coefficient");
    if (t.coeff == 0) continue;
    std::map<std::size_t, std::size_t> powers;
    for (const auto& [v, p] : t.factors) {
      if (v >= n_vars)
        throw PolyError("monomial mentions variable " + std::to_string(v) +
                        " but the polynomial has " + std::to_string(n_vars) +
                        " variables");
      powers[v] += p;
    }
    std::vector<std::pair<std::size_t, std::size_t>> key;
    for (const auto& [v, p] : powers)
      if (p > 0) key.emplace_back(v, p);
    merged[key] += t.coeff;
  }
  MPoly out;
  out.num_vars_ = n_vars;
  for (auto& [key, c] : merged)
    if (c != 0) out.monomials_.push_back(Monomial{c, key});
  std::sort(out.monomials_.begin(), out.monomials_.end(), monomial_before);
  return out;
}

MPoly add(const MPoly& p, const MPoly& q) {
  if (p.num_vars() != q.num_vars())
    throw PolyError("add: variable-count mismatch (" +
                    std::to_string(p.num_vars()) + " vs " +
                    std::to_string(q.num_vars()) + ")");
  std::vector<Monomial> terms = p.monomials();
  terms.insert(terms.end(), q.monomials().begin(), q.monomials().end());
  return MPoly::from_monomials(p.num_vars(), std::move(terms));
}

MPoly mul(const MPoly& p, const MPoly& q) {
  if (p.num_vars() != q.num_vars())
    throw PolyError("mul: variable-count mismatch (" +
                    std::to_string(p.num_vars()) + " vs " +
                    std::to_string(q.num_vars()) + ")");
  std::vector<Monomial> terms;
  for (const auto& a : p.monomials()) {
    for (const auto& b : q.monomials()) {
      Monomial t{a.coeff * b.coeff, a.factors};
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      terms.push_back(std::move(t));
    }
  }
  return MPoly::from_monomials(p.num_vars(), std::move(terms));
}

MPoly compose(const MPoly& p, const std::vector<MPoly>& qs, std::size_t n_vars) {
  if (qs.size() != p.num_vars())
    throw PolyError("compose: expected " + std::to_string(p.num_vars()) +
                    " substituends, got " + std::to_string(qs.size()));
  for (const auto& q : qs)
    if (q.num_vars() != n_vars)
      throw PolyError("compose: inconsistent variable counts in substituends");
  MPoly out = MPoly::constant(n_vars, 0);
  for (const auto& m : p.monomials()) {
    MPoly term = MPoly::constant(n_vars, m.coeff);
    for (const auto& [v, pow] : m.factors)
      for (std::size_t k = 0; k < pow; ++k) term = mul(term, qs[v]);
    out = add(out, term);
  }
  return out;
}

MPoly compose(const MPoly& p, const std::vector<MPoly>& qs) {
  return compose(p, qs, qs.empty() ? 0 : qs.front().num_vars());
}

MPoly inject(const MPoly& p, std::size_t n_vars) {
  if (n_vars < p.num_vars())
    throw PolyError("inject: cannot shrink from " +
                    std::to_string(p.num_vars()) + " to " +
                    std::to_string(n_vars) + " variables");
  return MPoly::from_monomials(n_vars, p.monomials());
}

MPoly shift(const MPoly& p) {
  std::vector<Monomial> terms = p.monomials();
  for (auto& t : terms)
    for (auto& [v, pow] : t.factors) ++v;
  return MPoly::from_monomials(p.num_vars() + 1, std::move(terms));
}

Nat eval(const MPoly& p, const std::vector<Nat>& vs) {
  if (vs.size() != p.num_vars())
    throw PolyError("eval: expected " + std::to_string(p.num_vars()) +
                    " values, got " + std::to_string(vs.size()));
  Nat sum = 0;
  for (const auto& m : p.monomials()) {
    Nat term = m.coeff;
    for (const auto& [v, pow] : m.factors)
      term *= boost::multiprecision::pow(vs[v], static_cast<unsigned>(pow));
    sum += term;
  }
  return sum;
}

namespace {

std::string render_monomial(const Monomial& m, const std::string& var_prefix) {
  std::vector<std::string> pieces;
  if (m.coeff != 1 || m.factors.empty()) pieces.push_back(m.coeff.str());
  for (const auto& [v, p] : m.factors) {
    std::string f = var_prefix + std::to_string(v);
    if (p != 1) f += "^" + std::to_string(p);
    pieces.push_back(std::move(f));
  }
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += "*";
    out += pieces[i];
  }
  return out;
}

}  // namespace

std::string print_canonical(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.monomials().size(); ++i) {
    if (i) out += " + ";
    out += render_monomial(p.monomials()[i], "x");
  }
  return out;
}

UPoly UPoly::constant(Nat c) {
  std::vector<Nat> cs;
  if (c != 0) cs.push_back(std::move(c));
  return from_coefficients(std::move(cs));
}

UPoly UPoly::variable() { return from_coefficients({0, 1}); }

UPoly UPoly::from_coefficients(std::vector<Nat> coeffs) {
  for (const auto& c : coeffs)
    if (c < 0) throw PolyError("negative coefficient");
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  UPoly out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

UPoly add(const UPoly& p, const UPoly& q) {
  std::vector<Nat> cs(std::max(p.coefficients().size(), q.coefficients().size()), 0);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) cs[i] += p.coefficients()[i];
  for (std::size_t i = 0; i < q.coefficients().size(); ++i) cs[i] += q.coefficients()[i];
  return UPoly::from_coefficients(std::move(cs));
}

UPoly mul(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return UPoly();
  std::vector<Nat> cs(p.coefficients().size() + q.coefficients().size() - 1, 0);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    for (std::size_t j = 0; j < q.coefficients().size(); ++j)
      cs[i + j] += p.coefficients()[i] * q.coefficients()[j];
  return UPoly::from_coefficients(std::move(cs));
}

UPoly compose(const UPoly& p, const UPoly& q) {
  UPoly out;
  // Horner would be fine here, but direct powers keep it obvious.
  UPoly power = UPoly::constant(1);
  for (const auto& c : p.coefficients()) {
    out = add(out, mul(UPoly::constant(c), power));
    power = mul(power, q);
  }
  return out;
}

Nat eval(const UPoly& p, const Nat& v) {
  Nat out = 0;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    out = out * v + *it;
  return out;
}

std::string print_canonical(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Nat& c = p.coefficients()[k];
    if (c == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (c != 1 || k == 0) out += c.str();
    if (k > 0) {
      if (c != 1) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

UPoly univariate_collapse(const MPoly& p) {
  std::vector<Nat> cs;
  for (const auto& m : p.monomials()) {
    std::size_t d = total_degree(m);
    if (cs.size() <= d) cs.resize(d + 1, 0);
    cs[d] += m.coeff;
  }
  return UPoly::from_coefficients(std::move(cs));
}

}  // namespace polytime
