#ifndef SCENERY_REPRESENTATION_HPP
#define SCENERY_REPRESENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "scenery/group.hpp"
#include "scenery/linalg.hpp"

namespace scenery {

inline constexpr double kDefaultReprTol = 1e-9;

// A matrix representation: matrices[x] is the image of element index x.
struct Representation {
  std::size_t degree = 0;
  std::vector<ComplexMatrix> matrices;

  const ComplexMatrix& operator()(Element x) const { return matrices[x]; }
  Complex character(Element x) const { return trace(matrices[x]); }
};

// One representative per equivalence class of irreducible representations.
struct IrrepSet {
  std::vector<Representation> reps;

  std::size_t size() const { return reps.size(); }
  const Representation& operator[](std::size_t i) const { return reps[i]; }
  std::vector<std::size_t> degrees() const;
};

struct ReprResidual {
  double homomorphism = 0.0;  // max ||rho(ab) - rho(a)rho(b)||_inf
  double identity = 0.0;      // ||rho(e) - I||_inf
  bool shape_ok = true;
  double max() const { return std::max(homomorphism, identity); }
  bool ok(double tol = kDefaultReprTol) const { return shape_ok && max() < tol; }
};

ReprResidual verify_representation(const FiniteGroup& g, const Representation& rho);

struct CompletenessReport {
  std::size_t sum_degree_squares = 0;
  std::size_t group_order = 0;
  double orthogonality = 0.0;  // max |<chi_i, chi_j> - delta_ij|
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks sum d^2 == |G| exactly and character orthonormality within tol.
CompletenessReport verify_completeness(const IrrepSet& set, const FiniteGroup& g,
                                       double tol = kDefaultReprTol);

// Analytic irreducible representations for groups built by build_builtin:
// cyclic characters, the dihedral one- and two-dimensional forms, the four
// characters of Q8 plus its quaternion representation, and tensor products
// for direct products. The family is recognized from g.name(). Throws
// ValidationError for anything else (custom groups need a file) or if the
// constructed set fails verification.
IrrepSet irreducible_representations(const FiniteGroup& g,
                                     double tol = kDefaultReprTol);

// Runs both verifications; throws ValidationError naming the first failure.
void require_valid_irreps(const IrrepSet& set, const FiniteGroup& g,
                          double tol = kDefaultReprTol);

// rho(a) (x) sigma(b) as a representation of the direct product, with
// element (a, b) at index a*|H| + b.
Representation tensor_product(const Representation& rho, std::size_t order_g,
                              const Representation& sigma, std::size_t order_h);

// Equivalent representation a * rho(x) * a^-1.
Representation conjugate(const Representation& rho, const ComplexMatrix& a);

// Sum of character products (1/|G|) sum_s chi_i(s) conj(chi_j(s)).
Complex character_inner_product(const Representation& a, const Representation& b);

}  // namespace scenery

#endif  // SCENERY_REPRESENTATION_HPP
