#include "mmvp/vop.hpp"

#include <set>
#include <stdexcept>

#include "mmvp/errors.hpp"

namespace mmvp {

ProblemSpec::ProblemSpec(OperatorMode mode, Rational a1, Rational a2, Rational s, NonlinearitySpec n)
    : mode_(mode), a1_(std::move(a1)), a2_(std::move(a2)), s_(std::move(s)), nonlinearity_(std::move(n)) {
  if (nonlinearity_.context() != s_) {
    throw ContextMismatch("nonlinearity field s = " + to_string(nonlinearity_.context()) +
                          " differs from operator field s = " + to_string(s_));
  }
}

ProblemSpec ProblemSpec::exponential(Rational a1, Rational a2, NonlinearitySpec nonlinearity) {
  if (a1 <= 0) throw std::invalid_argument("exponential mode requires a1 > 0");
  if (a2 >= 0) {
    throw std::invalid_argument(
        "exponential mode requires a2 < 0; a2 >= 0 gives a trigonometric or degenerate fundamental set, "
        "use the closed-form families instead");
  }
  Rational s = -a2 / (a1 * a1);
  return ProblemSpec(OperatorMode::Exponential, std::move(a1), std::move(a2), std::move(s), std::move(nonlinearity));
}

ProblemSpec ProblemSpec::polynomial(Rational a1, Rational a2, NonlinearitySpec nonlinearity) {
  return ProblemSpec(OperatorMode::Polynomial, std::move(a1), std::move(a2), Rational(0), std::move(nonlinearity));
}

QuadCoeff ProblemSpec::p0() const {
  return mode_ == OperatorMode::Exponential ? QuadCoeff(a1_ * a1_, s_) : QuadCoeff(1, s_);
}

QuadCoeff ProblemSpec::p2() const {
  return mode_ == OperatorMode::Exponential ? QuadCoeff(a2_, s_) : QuadCoeff(0, s_);
}

ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  const Rational& s = rows[0][0].context();
  if (n == 1) return rows[0][0];
  ExpPoly det(s);
  for (std::size_t col = 0; col < n; ++col) {
    if (rows[0][col].is_zero()) continue;
    std::vector<std::vector<ExpPoly>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ExpPoly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(rows[r][c]);
      }
      sub.push_back(std::move(row));
    }
    ExpPoly cofactor = rows[0][col] * determinant(sub);
    if (col % 2 == 0) {
      det += cofactor;
    } else {
      det -= cofactor;
    }
  }
  return det;
}

FundamentalSet fundamental_set(const ProblemSpec& spec) {
  const Rational& s = spec.s();
  QuadCoeff one(1, s);
  FundamentalSet fs{{}, ExpPoly(s), {}};
  if (spec.mode() == OperatorMode::Exponential) {
    fs.solutions = {ExpPoly::monomial(one, 0, -1), ExpPoly::monomial(one, 0, 1), ExpPoly::monomial(one, 1, 0),
                    ExpPoly::monomial(one, 0, 0)};
  } else {
    fs.solutions = {ExpPoly::monomial(one, 3, 0), ExpPoly::monomial(one, 2, 0), ExpPoly::monomial(one, 1, 0),
                    ExpPoly::monomial(one, 0, 0)};
  }
  const std::size_t n = fs.solutions.size();

  // Rows y^(r), r = 0..n-1
  std::vector<std::vector<ExpPoly>> matrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& y : fs.solutions) matrix[r].push_back(differentiate(y, static_cast<unsigned>(r)));
  }
  fs.wronskian = determinant(matrix);
  if (!fs.wronskian.is_monomial()) {
    throw NotInvertible("Wronskian is not a single term: " + to_string(fs.wronskian));
  }

  std::vector<std::vector<ExpPoly>> upper(matrix.begin(), matrix.end() - 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<ExpPoly>> minor;
    for (const auto& row : upper) {
      std::vector<ExpPoly> reduced;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) reduced.push_back(row[c]);
      }
      minor.push_back(std::move(reduced));
    }
    fs.minors.push_back(determinant(minor));
  }
  return fs;
}

ExpPoly apply_operator(const ProblemSpec& spec, const ExpPoly& f) {
  ExpPoly second = differentiate(f, 2);
  ExpPoly fourth = differentiate(second, 2);
  if (spec.mode() == OperatorMode::Polynomial) return fourth;
  return fourth * spec.p0() + second * spec.p2();
}

ExpPoly particular_solution(const FundamentalSet& fs, const ExpPoly& forcing, const QuadCoeff& p0) {
  if (!fs.wronskian.is_monomial()) throw NotInvertible("Wronskian is not a single term");
  const std::size_t n = fs.solutions.size();
  ExpPoly scaled_w = fs.wronskian * p0;
  ExpPoly y(forcing.context());
  for (std::size_t j = 0; j < n; ++j) {
    ExpPoly integrand = (forcing * fs.minors[j]).divide_by_monomial(scaled_w);
    ExpPoly term = fs.solutions[j] * antiderivative(integrand);
    // (-1)^(n-j) with 1-based j  ->  (-1)^(n-1-j) with 0-based j
    if ((n - 1 - j) % 2 == 0) {
      y += term;
    } else {
      y -= term;
    }
  }
  return y;
}

ExpPoly combine_fundamental(const FundamentalSet& fs, std::span<const Rational> constants) {
  if (constants.size() != fs.solutions.size()) {
    throw std::invalid_argument("expected " + std::to_string(fs.solutions.size()) + " seed constants");
  }
  ExpPoly out(fs.wronskian.context());
  for (std::size_t j = 0; j < constants.size(); ++j) out += fs.solutions[j] * constants[j];
  return out;
}

ExpPoly decaying_seed(const ProblemSpec& spec, const QuadCoeff& c, int direction) {
  if (spec.mode() != OperatorMode::Exponential) throw std::invalid_argument("decaying seed needs exponential mode");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  return ExpPoly::monomial(c, 0, -direction);
}

ExpPoly polynomial_seed(const Rational& v0, const Rational& v1) {
  ExpPoly seed(0);
  seed.add_term(QuadCoeff(v1, 0), 2, 0);
  seed.add_term(QuadCoeff(v0, 0), 0, 0);
  return seed;
}

SeriesSolution run_recursion(const ProblemSpec& spec, std::span<const ExpPoly> seed, unsigned k_max,
                             std::string seed_description) {
  if (seed.empty() || seed.size() > 2) throw std::invalid_argument("seed must have one (p = 1/2) or two (p = 1) elements");
  for (const auto& u : seed) {
    if (u.context() != spec.s()) throw ContextMismatch("seed field differs from problem field");
    if (!apply_operator(spec, u).is_zero()) {
      throw std::invalid_argument("seed element " + to_string(u) + " is not annihilated by the linear operator");
    }
  }
  SeriesSolution out{spec, seed.size() == 1 ? Scheme::PHalf : Scheme::POne, {}, std::move(seed_description), {}};
  const unsigned offset = scheme_offset(out.scheme);
  const FundamentalSet fs = fundamental_set(spec);

  std::set<TermKey> homogeneous_keys;
  for (const auto& y : fs.solutions) homogeneous_keys.insert(y.terms().begin()->first);

  for (unsigned k = 0; k <= k_max; ++k) {
    if (k < offset) {
      out.iterates.push_back(k < seed.size() ? seed[k] : ExpPoly(spec.s()));
      continue;
    }
    ExpPoly forcing = adomian_polynomial(spec.nonlinearity(), out.iterates, k - offset);
    ExpPoly next = particular_solution(fs, forcing, spec.p0());
    for (const auto& [key, c] : next.terms()) {
      if (homogeneous_keys.count(key)) out.resonant_terms.push_back(ResonantTerm{k, key});
    }
    out.iterates.push_back(std::move(next));
  }
  return out;
}

ExpPoly partial_sum(const SeriesSolution& series, std::optional<unsigned> through) {
  ExpPoly sum(series.problem.s());
  std::size_t last = through ? std::min<std::size_t>(*through + 1, series.iterates.size()) : series.iterates.size();
  for (std::size_t k = 0; k < last; ++k) sum += series.iterates[k];
  return sum;
}

}  // namespace mmvp
