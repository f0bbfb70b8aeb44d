#include "leveler/standard_form.hpp"

#include <algorithm>

#include "leveler/errors.hpp"

namespace leveler {

// Expanding V = sum_j (S_j - x_j + x_{j-1})^2 with x_0 = x_n = 0 and
// S_j = A_j - mean gives
//
//   V = sum S_j^2 + 2 sum_i (S_{i+1} - S_i) x_i + 2 sum_i x_i^2
//       - 2 sum_{i>=2} x_{i-1} x_i.
//
// Substituting x_i = l_i - o (l_i, o >= 0) into z = -(V - sum S_j^2):
//
//   z = -2 sum (S_{i+1} - S_i) l_i + 2 (S_n - S_1) o
//       - 2 sum l_i^2 + 2 sum l_{i-1} l_i + 2 l_1 o + 2 l_m o - 2 o^2.
StandardFormQP standard_form(const MonthlyLoads& loads) {
  const std::size_t n = loads.months();
  if (n < 2) throw ValidationError("need at least two months");
  const std::size_t m = n - 1;

  StandardFormQP qp;
  qp.loads.assign(loads.values().begin(), loads.values().end());
  qp.mean = mean_load(loads);
  const Rational avg = qp.mean.value();
  for (Hours a : qp.loads) qp.shifted_loads.push_back(Rational(a) - avg);
  qp.constant_offset = 0;
  for (const auto& s : qp.shifted_loads) qp.constant_offset += s * s;

  const std::size_t vars = 1 + 3 * m;
  qp.linear.assign(vars, Rational(0));
  qp.quadratic.assign(vars, std::vector<Rational>(vars, Rational(0)));
  const std::size_t o = StandardFormQP::offset_index();

  for (std::size_t i = 0; i < m; ++i) {
    const Rational step = qp.shifted_loads[i + 1] - qp.shifted_loads[i];
    qp.linear[qp.lifted_index(i)] = -2 * step;
    qp.quadratic[qp.lifted_index(i)][qp.lifted_index(i)] = -2;
    if (i > 0) {
      qp.quadratic[qp.lifted_index(i - 1)][qp.lifted_index(i)] += 1;
      qp.quadratic[qp.lifted_index(i)][qp.lifted_index(i - 1)] += 1;
    }
  }
  qp.linear[o] = 2 * (qp.shifted_loads[n - 1] - qp.shifted_loads[0]);
  qp.quadratic[o][o] = -2;
  for (std::size_t end : {std::size_t{0}, m - 1}) {
    qp.quadratic[o][qp.lifted_index(end)] += 1;
    qp.quadratic[qp.lifted_index(end)][o] += 1;
  }

  qp.constraints.assign(2 * m, std::vector<Hours>(vars, 0));
  qp.rhs.assign(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    auto& upper = qp.constraints[2 * i];
    upper[qp.lifted_index(i)] = 1;
    upper[o] = -1;
    upper[qp.upper_slack_index(i)] = 1;
    qp.rhs[2 * i] = qp.loads[i];

    auto& lower = qp.constraints[2 * i + 1];
    lower[qp.lifted_index(i)] = -1;
    lower[o] = 1;
    lower[qp.lower_slack_index(i)] = 1;
    qp.rhs[2 * i + 1] = qp.loads[i + 1];
  }

  qp.variable_names.push_back("offset");
  for (std::size_t i = 0; i < m; ++i) qp.variable_names.push_back("lifted_" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) qp.variable_names.push_back("upper_" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) qp.variable_names.push_back("lower_" + std::to_string(i + 1));
  return qp;
}

std::vector<Hours> StandardFormQP::lift(const TransferVector& x) const {
  if (x.boundaries() != boundaries())
    throw ValidationError("transfer vector length does not match the encoding");
  const Hours lowest = *std::min_element(x.x.begin(), x.x.end());
  const Hours offset = std::max<Hours>(0, -lowest);
  std::vector<Hours> v(variables(), 0);
  v[offset_index()] = offset;
  for (std::size_t i = 0; i < boundaries(); ++i) {
    v[lifted_index(i)] = x.x[i] + offset;
    v[upper_slack_index(i)] = loads[i] - x.x[i];
    v[lower_slack_index(i)] = loads[i + 1] + x.x[i];
  }
  return v;
}

TransferVector StandardFormQP::project(std::span<const Hours> v) const {
  if (v.size() != variables()) throw ValidationError("variable vector has the wrong length");
  TransferVector x;
  for (std::size_t i = 0; i < boundaries(); ++i)
    x.x.push_back(v[lifted_index(i)] - v[offset_index()]);
  return x;
}

Rational StandardFormQP::objective(std::span<const Hours> v) const {
  if (v.size() != variables()) throw ValidationError("variable vector has the wrong length");
  Rational z = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == 0) continue;
    z += linear[a] * v[a];
    for (std::size_t b = 0; b < v.size(); ++b)
      if (v[b] != 0) z += quadratic[a][b] * (v[a] * v[b]);
  }
  return z;
}

bool StandardFormQP::satisfies_constraints(std::span<const Hours> v) const {
  if (v.size() != variables()) return false;
  for (Hours value : v)
    if (value < 0) return false;
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    Hours lhs = 0;
    for (std::size_t c = 0; c < v.size(); ++c) lhs += constraints[r][c] * v[c];
    if (lhs != rhs[r]) return false;
  }
  return true;
}

}  // namespace leveler
