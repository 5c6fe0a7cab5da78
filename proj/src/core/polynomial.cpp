#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace eqcurv {

Polynomial Polynomial::constant(int num_vars, double c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int i) {
  if (i < 0 || i >= num_vars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial p(num_vars);
  Exponents e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1.0);
  return p;
}

int Polynomial::max_degree() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponents& e, double c) {
  if (static_cast<int>(e.size()) != n_)
    fail(ErrorCode::LengthMismatch, "exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                                        std::to_string(n_));
  for (int k : e)
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_)
    fail(ErrorCode::DimensionMismatch, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                           std::to_string(n_));
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= x[i];
    s += m;
  }
  return s;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= n_) fail(ErrorCode::InvalidArgument, "variable index out of range");
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(d, c * k);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

} // namespace eqcurv
