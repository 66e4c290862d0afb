#ifndef SCENERY_GROUP_HPP
#define SCENERY_GROUP_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scenery {

// Dense index of a group element. Only meaningful relative to one
// FiniteGroup; index 0 is always the identity.
using Element = int;

inline constexpr Element kIdentity = 0;

// A finite group stored as its Cayley table. table(a, b) is the index of
// the product a*b. Construct through the factory functions below or
// FiniteGroup::from_table, which validates the axioms.
class FiniteGroup {
 public:
  // Throws ValidationError if the table does not describe a group with
  // identity at index 0.
  static FiniteGroup from_table(std::string name,
                                std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }

  // Both throw std::out_of_range on a bad index.
  Element compose(Element a, Element b) const;
  Element inverse(Element a) const;

  // Unchecked versions for inner loops.
  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const { return inverse_[a]; }

  bool is_abelian() const;
  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup(std::string name, int order, std::vector<int> flat);

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inverse_;
};

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks Latin-square closure, identity at index 0, inverses, and
// associativity over every triple. Never throws.
AxiomReport verify_group_axioms(std::string_view name,
                                const std::vector<std::vector<int>>& table);
AxiomReport verify_group_axioms(const FiniteGroup& g);

// Built-in families. Element numbering:
//   cyclic(m):     k <-> g^k.
//   dihedral(m):   k + m*f <-> r^k s^f, with s r s = r^-1; order 2m.
//   quaternion8(): 1, -1, i, -i, j, -j, k, -k.
//   direct_product(a, b): (x, y) <-> x*|b| + y.
// All throw std::invalid_argument for m < 1.
FiniteGroup cyclic(int m);
FiniteGroup dihedral(int m);
FiniteGroup quaternion8();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Parses names such as "Z4", "C4", "D3", "S3", "Q8", "V4", "K4" and
// products joined by 'x' ("Z2xZ2", "D3xZ2"). Throws std::invalid_argument
// for an unknown family.
FiniteGroup build_builtin(const std::string& descriptor);

// The fixed list of named built-in groups used by `group list` and the
// test suites (all of order at most 12).
std::vector<std::string> builtin_names();

}  // namespace scenery

#endif  // SCENERY_GROUP_HPP
