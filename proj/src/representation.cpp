#include "scenery/representation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "scenery/errors.hpp"

namespace scenery {

namespace {

Representation one_dimensional(std::vector<Complex> values) {
  Representation r;
  r.degree = 1;
  for (Complex v : values) r.matrices.push_back(ComplexMatrix::scalar(v));
  return r;
}

Complex root_of_unity(int k, int m) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
  return std::polar(1.0, angle);
}

IrrepSet cyclic_irreps(int m) {
  IrrepSet set;
  for (int j = 0; j < m; ++j) {
    std::vector<Complex> values(m);
    for (int k = 0; k < m; ++k) values[k] = root_of_unity((j * k) % m, m);
    set.reps.push_back(one_dimensional(std::move(values)));
  }
  return set;
}

// Builds rho(r^k s^f) = rho(r)^k rho(s)^f on the dihedral numbering.
Representation dihedral_rep(int m, const ComplexMatrix& r, const ComplexMatrix& s) {
  Representation rep;
  rep.degree = r.rows();
  rep.matrices.resize(2 * m);
  ComplexMatrix rk = ComplexMatrix::identity(r.rows());
  for (int k = 0; k < m; ++k) {
    rep.matrices[k] = rk;
    rep.matrices[k + m] = matmul(rk, s);
    rk = matmul(rk, r);
  }
  return rep;
}

IrrepSet dihedral_irreps(int m) {
  IrrepSet set;
  auto scalar = [](double v) { return ComplexMatrix::scalar(v); };
  set.reps.push_back(dihedral_rep(m, scalar(1), scalar(1)));
  set.reps.push_back(dihedral_rep(m, scalar(1), scalar(-1)));
  if (m % 2 == 0) {
    set.reps.push_back(dihedral_rep(m, scalar(-1), scalar(1)));
    set.reps.push_back(dihedral_rep(m, scalar(-1), scalar(-1)));
  }
  ComplexMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  for (int h = 1; 2 * h < m; ++h) {
    ComplexMatrix r(2, 2);
    r(0, 0) = root_of_unity(h, m);
    r(1, 1) = root_of_unity(m - h, m);
    set.reps.push_back(dihedral_rep(m, r, swap));
  }
  return set;
}

IrrepSet quaternion_irreps() {
  IrrepSet set;
  // Element order: 1, -1, i, -i, j, -j, k, -k.
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0})
      set.reps.push_back(one_dimensional({1, 1, a, a, b, b, a * b, a * b}));

  const Complex i1{0, 1};
  ComplexMatrix one = ComplexMatrix::identity(2);
  ComplexMatrix qi(2, 2), qj(2, 2);
  qi(0, 0) = i1;
  qi(1, 1) = -i1;
  qj(0, 1) = 1.0;
  qj(1, 0) = -1.0;
  ComplexMatrix qk = matmul(qi, qj);
  Representation two;
  two.degree = 2;
  for (const auto* m : {&one, &qi, &qj, &qk}) {
    two.matrices.push_back(*m);
    two.matrices.push_back(Complex{-1.0} * *m);
  }
  set.reps.push_back(std::move(two));
  return set;
}

std::pair<IrrepSet, int> factor_irreps(const std::string& name) {
  auto bad = [&] {
    return ValidationError("no built-in representations for '" + name +
                           "'; supply a representation file");
  };
  if (name.size() < 2) throw bad();
  const std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw bad();
  const int m = std::stoi(digits);
  if (m < 1) throw bad();
  switch (name[0]) {
    case 'Z':
      return {cyclic_irreps(m), m};
    case 'D':
      return {dihedral_irreps(m), 2 * m};
    case 'Q':
      if (m == 8) return {quaternion_irreps(), 8};
      break;
    default:
      break;
  }
  throw bad();
}

}  // namespace

std::vector<std::size_t> IrrepSet::degrees() const {
  std::vector<std::size_t> d;
  for (const auto& r : reps) d.push_back(r.degree);
  return d;
}

ReprResidual verify_representation(const FiniteGroup& g, const Representation& rho) {
  ReprResidual res;
  const int n = g.order();
  if (rho.degree < 1 || static_cast<int>(rho.matrices.size()) != n) {
    res.shape_ok = false;
    return res;
  }
  for (const auto& m : rho.matrices) {
    if (m.rows() != rho.degree || m.cols() != rho.degree) {
      res.shape_ok = false;
      return res;
    }
  }
  res.identity = max_abs_diff(rho(kIdentity), ComplexMatrix::identity(rho.degree));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      res.homomorphism = std::max(
          res.homomorphism, max_abs_diff(rho(g.mul(a, b)), matmul(rho(a), rho(b))));
  return res;
}

Complex character_inner_product(const Representation& a, const Representation& b) {
  Complex s{};
  const std::size_t n = a.matrices.size();
  for (std::size_t x = 0; x < n; ++x)
    s += a.character(static_cast<Element>(x)) *
         std::conj(b.character(static_cast<Element>(x)));
  return s / static_cast<double>(n);
}

CompletenessReport verify_completeness(const IrrepSet& set, const FiniteGroup& g,
                                       double tol) {
  CompletenessReport rep;
  rep.group_order = static_cast<std::size_t>(g.order());
  for (const auto& r : set.reps) {
    rep.sum_degree_squares += r.degree * r.degree;
    if (r.matrices.size() != rep.group_order) {
      rep.failures.push_back("representation has wrong number of matrices");
      return rep;
    }
  }
  if (rep.sum_degree_squares != rep.group_order)
    rep.failures.push_back("sum of squared degrees " +
                           std::to_string(rep.sum_degree_squares) + " != |G| = " +
                           std::to_string(rep.group_order));
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      const Complex ip = character_inner_product(set[i], set[j]);
      rep.orthogonality =
          std::max(rep.orthogonality, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  if (!(rep.orthogonality < tol))
    rep.failures.push_back("character orthogonality residual " +
                           std::to_string(rep.orthogonality));
  return rep;
}

void require_valid_irreps(const IrrepSet& set, const FiniteGroup& g, double tol) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const ReprResidual r = verify_representation(g, set[i]);
    if (!r.ok(tol))
      throw ValidationError("representation " + std::to_string(i) + " of " +
                            g.name() + " is not a homomorphism (residual " +
                            std::to_string(r.max()) + ")");
  }
  const CompletenessReport c = verify_completeness(set, g, tol);
  if (!c.ok()) throw ValidationError("irreducible set for " + g.name() +
                                     " incomplete: " + c.failures.front());
}

Representation tensor_product(const Representation& rho, std::size_t order_g,
                              const Representation& sigma, std::size_t order_h) {
  Representation out;
  out.degree = rho.degree * sigma.degree;
  out.matrices.reserve(order_g * order_h);
  for (std::size_t a = 0; a < order_g; ++a)
    for (std::size_t b = 0; b < order_h; ++b)
      out.matrices.push_back(kron(rho.matrices[a], sigma.matrices[b]));
  return out;
}

Representation conjugate(const Representation& rho, const ComplexMatrix& a) {
  const ComplexMatrix a_inv = inverse(a);
  Representation out;
  out.degree = rho.degree;
  for (const auto& m : rho.matrices) out.matrices.push_back(matmul(matmul(a, m), a_inv));
  return out;
}

IrrepSet irreducible_representations(const FiniteGroup& g, double tol) {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : g.name()) {
    if (c == 'x') {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);

  auto [set, order] = factor_irreps(factors[0]);
  for (std::size_t f = 1; f < factors.size(); ++f) {
    auto [next, next_order] = factor_irreps(factors[f]);
    IrrepSet combined;
    for (const auto& a : set.reps)
      for (const auto& b : next.reps)
        combined.reps.push_back(tensor_product(a, static_cast<std::size_t>(order), b,
                                               static_cast<std::size_t>(next_order)));
    set = std::move(combined);
    order *= next_order;
  }
  if (order != g.order())
    throw ValidationError("group '" + g.name() + "' has order " +
                          std::to_string(g.order()) + " but its name implies " +
                          std::to_string(order));
  require_valid_irreps(set, g, tol);
  return set;
}

}  // namespace scenery
