#include <Eigen/Dense>

#include <cmath>

#include "ribbonkit/analysis.hpp"
#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

int sign(const mpq_class& v) { return sgn(v); }

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  trim(out);
  return out;
}

// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  const int db = degree(b);
  Poly quotient(std::max(0, degree(a) - db + 1), 0);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const mpq_class factor = a.back() / b.back();
    quotient[shift] = factor;
    for (int k = 0; k <= db; ++k) a[shift + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(quotient);
  return {quotient, a};
}

Poly monic_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly mirrored(const Poly& p) {
  Poly out = p;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return out;
}

Poly squarefree(const Poly& p) {
  const Poly d = derivative(p);
  if (d.empty()) return p;
  return divide(p, monic_gcd(p, d)).first;
}

int sign_at_plus_infinity(const Poly& p) { return p.empty() ? 0 : sign(p.back()); }
int sign_at_minus_infinity(const Poly& p) {
  if (p.empty()) return 0;
  return degree(p) % 2 == 0 ? sign(p.back()) : -sign(p.back());
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::vector<Poly> sturm_chain(Poly first, Poly second) {
  std::vector<Poly> chain{std::move(first)};
  trim(second);
  while (!second.empty()) {
    Poly r = divide(chain.back(), second).second;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(second));
    second = std::move(r);
  }
  return chain;
}

template <class F>
int chain_variations(const std::vector<Poly>& chain, F&& sign_of) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(sign_of(p));
  return variations(signs);
}

// Right-half-plane roots of a squarefree q sharing no root with q(-z).
int count_unpaired(const Poly& q) {
  const int n = degree(q);
  if (n <= 0) return 0;
  Poly re;
  Poly im;
  for (int k = 0; k <= n; ++k) {
    Poly& target = k % 2 == 0 ? re : im;
    if (target.size() <= static_cast<std::size_t>(k)) target.resize(k + 1, 0);
    target[k] = (k % 4 == 0 || k % 4 == 1) ? q[k] : -q[k];
  }
  trim(re);
  trim(im);
  if (im.empty() || re.empty()) {
    throw Error(ErrorKind::kOracleDisagreement, "unpaired part has a purely even or odd form");
  }
  const auto chain = sturm_chain(im, re);
  const int index = chain_variations(chain, sign_at_minus_infinity) -
                    chain_variations(chain, sign_at_plus_infinity);
  int boundary = 0;
  if (degree(re) > degree(im)) {
    const int at_plus = sign(re.back()) * sign(im.back());
    const int at_minus = (degree(re) - degree(im)) % 2 == 0 ? at_plus : -at_plus;
    // arccot of the ratio tends to 0 where it grows positive and to pi where it grows negative.
    boundary = (at_plus > 0 ? 0 : 1) - (at_minus > 0 ? 0 : 1);
  }
  const int left_minus_right = index + boundary;
  if ((n - left_minus_right) % 2 != 0) {
    throw Error(ErrorKind::kOracleDisagreement, "argument count has the wrong parity");
  }
  return (n - left_minus_right) / 2;
}

// Right-half-plane roots of a squarefree g whose roots come in pairs r, -r.
int count_paired(Poly g) {
  if (degree(g) <= 0) return 0;
  if (g[0] == 0) g.erase(g.begin());
  Poly h;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k % 2 == 1 && g[k] != 0) {
      throw Error(ErrorKind::kOracleDisagreement, "symmetric part is not even");
    }
    if (k % 2 == 0) h.push_back(g[k]);
  }
  trim(h);
  if (degree(h) <= 0) return 0;
  const auto chain = sturm_chain(h, derivative(h));
  const int negative_roots = chain_variations(chain, sign_at_minus_infinity) -
                             chain_variations(chain, [](const Poly& p) { return p.empty() ? 0 : sign(p[0]); });
  return degree(h) - negative_roots;
}

Poly to_rational(const IntPolynomial& p) {
  Poly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

std::vector<double> primitive_doubles(const Poly& p) {
  mpz_class scale = 1;
  for (const auto& c : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (scale / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<double> out;
  for (const auto& v : ints) out.push_back(mpz_class(v / content).get_d());
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

mpz_class IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[k];
}

int rhp_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "the zero polynomial has no root count");
  const Poly sf = squarefree(to_rational(p));
  if (degree(sf) <= 0) return 0;
  const Poly paired = monic_gcd(sf, mirrored(sf));
  const Poly unpaired = divide(sf, paired).first;
  return count_unpaired(unpaired) + count_paired(paired);
}

std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::kZeroPolynomial, "the zero polynomial has no roots");
  const Poly sf = squarefree(to_rational(p));
  const int n = degree(sf);
  if (n <= 0) return {};
  const auto c = primitive_doubles(sf);
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int iter = 0; iter < 4; ++iter) {
      std::complex<long double> value = 0;
      std::complex<long double> slope = 0;
      for (int k = n; k >= 0; --k) {
        slope = slope * z + value;
        value = value * z + static_cast<long double>(c[k]);
      }
      if (std::abs(slope) == 0.0L) break;
      const auto next = z - value / slope;
      if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
      z = next;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return roots;
}

StabilityReport stability_report(const IntPolynomial& p) {
  StabilityReport report;
  report.rhp_count = rhp_root_count(p);
  report.stable = report.rhp_count == 0;
  const auto roots = numeric_roots(p);
  constexpr double kTolerance = 1e-9;
  const std::complex<double>* rightmost = nullptr;
  for (const auto& r : roots) {
    if (rightmost == nullptr || r.real() > rightmost->real()) rightmost = &r;
  }
  if (report.stable) {
    for (const auto& r : roots) {
      if (r.real() > kTolerance * (1.0 + std::abs(r))) {
        throw Error(ErrorKind::kOracleDisagreement, "exact count is zero but a numeric root lies right of the axis");
      }
    }
  } else {
    if (rightmost == nullptr || rightmost->real() < kTolerance) {
      throw Error(ErrorKind::kOracleDisagreement, "exact count is positive but no numeric root lies right of the axis");
    }
    report.witness_root = *rightmost;
  }
  return report;
}

bool is_hurwitz_stable(const IntPolynomial& p) { return stability_report(p).stable; }

}  // namespace ribbonkit
