#pragma once

#include <map>
#include <span>
#include <vector>

namespace eqcurv {

/// Sparse multivariate polynomial with real coefficients. Terms with zero
/// coefficient are never stored.
class Polynomial {
public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int num_vars) : n_(num_vars) {}

  static Polynomial constant(int num_vars, double c);
  /// x_i.
  static Polynomial variable(int num_vars, int i);

  int num_vars() const noexcept { return n_; }
  const std::map<Exponents, double>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int max_degree() const noexcept;

  /// Adds c * x^e; drops the term if the sum cancels.
  void add_term(const Exponents& e, double c);

  double evaluate(std::span<const double> x) const;
  Polynomial derivative(int var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

private:
  int n_ = 0;
  std::map<Exponents, double> terms_;
};

} // namespace eqcurv
