#include "mmvp/adomian.hpp"

#include <cmath>
#include <stdexcept>

#include "mmvp/errors.hpp"

namespace mmvp {

namespace {

// Polynomial in the bookkeeping parameter eps; entry i is the eps^i coefficient.
using EpsSeries = std::vector<ExpPoly>;

EpsSeries eps_multiply(const EpsSeries& a, const EpsSeries& b, const Rational& s) {
  if (a.empty() || b.empty()) return {};
  EpsSeries out(a.size() + b.size() - 1, ExpPoly(s));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

EpsSeries eps_differentiate(const EpsSeries& a, const Rational& s) {
  if (a.size() <= 1) return {ExpPoly(s)};
  EpsSeries out;
  out.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<long>(i)));
  return out;
}

void check_inputs(const NonlinearitySpec& spec, std::span<const ExpPoly> partials, unsigned k_max) {
  if (partials.size() < static_cast<std::size_t>(k_max) + 1) {
    throw std::invalid_argument("need " + std::to_string(k_max + 1) + " partials, got " +
                                std::to_string(partials.size()));
  }
  for (const auto& p : partials) {
    if (p.context() != spec.context()) throw ContextMismatch("partial solution field differs from nonlinearity");
  }
}

// derivs[d][l] = U_l^(d)
std::vector<std::vector<ExpPoly>> derivative_table(const NonlinearitySpec& spec, std::span<const ExpPoly> partials) {
  std::vector<std::vector<ExpPoly>> table(spec.max_derivative() + 1);
  table[0].assign(partials.begin(), partials.end());
  for (unsigned d = 1; d < table.size(); ++d) {
    table[d].reserve(partials.size());
    for (const auto& u : table[d - 1]) table[d].push_back(differentiate(u));
  }
  return table;
}

mpz_class factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

}  // namespace

AdomianSeries adomian_via_definition(const NonlinearitySpec& spec, std::span<const ExpPoly> partials,
                                     unsigned k_max) {
  check_inputs(spec, partials, k_max);
  const Rational& s = spec.context();
  auto table = derivative_table(spec, partials);

  // N(sum_l U_l eps^l), untruncated
  EpsSeries total{ExpPoly(s)};
  for (const auto& m : spec.monomials()) {
    EpsSeries product{ExpPoly::constant(m.scalar)};
    for (unsigned order : m.factors) product = eps_multiply(product, table[order], s);
    if (product.size() > total.size()) total.resize(product.size(), ExpPoly(s));
    for (std::size_t i = 0; i < product.size(); ++i) total[i] += product[i];
  }

  AdomianSeries out{{}, AdomianRoute::Definition};
  out.polys.reserve(k_max + 1);
  EpsSeries derived = total;
  for (unsigned k = 0; k <= k_max; ++k) {
    ExpPoly at_zero = derived.empty() ? ExpPoly(s) : derived.front();
    out.polys.push_back(at_zero * Rational(1, factorial(k)));
    derived = eps_differentiate(derived, s);
  }
  return out;
}

ExpPoly adomian_polynomial(const NonlinearitySpec& spec, std::span<const ExpPoly> partials, unsigned k) {
  check_inputs(spec, partials, k);
  const Rational& s = spec.context();
  auto table = derivative_table(spec, partials.first(k + 1));
  ExpPoly a(s);
  for (const auto& m : spec.monomials()) {
    const auto& f = m.factors;
    ExpPoly sum(s);
    switch (m.degree()) {
      case 1:
        sum = table[f[0]][k];
        break;
      case 2:
        for (unsigned i = 0; i <= k; ++i) sum += table[f[0]][i] * table[f[1]][k - i];
        break;
      case 3:
        for (unsigned i = 0; i <= k; ++i) {
          for (unsigned j = 0; i + j <= k; ++j) {
            sum += table[f[0]][i] * table[f[1]][j] * table[f[2]][k - i - j];
          }
        }
        break;
      default:
        throw std::invalid_argument("convolution route supports monomials of degree <= 3, got " +
                                    std::to_string(m.degree()));
    }
    a += sum * m.scalar;
  }
  return a;
}

AdomianSeries adomian_via_convolution(const NonlinearitySpec& spec, std::span<const ExpPoly> partials,
                                      unsigned k_max) {
  check_inputs(spec, partials, k_max);
  if (spec.max_degree() > 3) {
    throw std::invalid_argument("convolution route supports monomials of degree <= 3");
  }
  AdomianSeries out{{}, AdomianRoute::Convolution};
  out.polys.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) out.polys.push_back(adomian_polynomial(spec, partials, k));
  return out;
}

long double verify_adomian_sum(const NonlinearitySpec& spec, std::span<const ExpPoly> partials, unsigned k_max,
                               std::span<const long double> xi_samples) {
  check_inputs(spec, partials, k_max);
  const long double lambda = std::sqrt(to_long_double(spec.context()));
  AdomianSeries series = adomian_via_convolution(spec, partials, k_max);

  ExpPoly sum(spec.context());
  for (unsigned k = 0; k <= k_max; ++k) sum += partials[k];
  std::vector<ExpPoly> sum_derivs{sum};
  for (unsigned d = 1; d <= spec.max_derivative(); ++d) sum_derivs.push_back(differentiate(sum_derivs.back()));

  long double worst = 0.0L;
  std::vector<long double> values(sum_derivs.size());
  for (long double xi : xi_samples) {
    long double adomian_total = 0.0L;
    for (const auto& a : series.polys) adomian_total += evaluate(a, xi, lambda);
    for (std::size_t d = 0; d < sum_derivs.size(); ++d) values[d] = evaluate(sum_derivs[d], xi, lambda);
    long double direct = apply_nonlinearity(spec, values, lambda);
    worst = std::max(worst, std::fabs(adomian_total - direct));
  }
  return worst;
}

}  // namespace mmvp
