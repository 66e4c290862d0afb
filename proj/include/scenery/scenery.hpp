#ifndef SCENERY_SCENERY_HPP
#define SCENERY_SCENERY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scenery/errors.hpp"
#include "scenery/group.hpp"
#include "scenery/linalg.hpp"

namespace scenery {

// A {0,1}-valued function on a group, by element index.
class Scenery {
 public:
  Scenery() = default;
  explicit Scenery(std::vector<std::uint8_t> bits);

  // "1100" -> f(0)=1, f(1)=1, f(2)=0, f(3)=0. Throws ValidationError on any
  // character other than 0/1 or when the length differs from expected_order
  // (if given).
  static Scenery parse(std::string_view text, int expected_order = -1);
  static Scenery zeros(int order) { return Scenery(std::vector<std::uint8_t>(order, 0)); }

  int order() const { return static_cast<int>(bits_.size()); }
  int operator()(Element x) const { return bits_[x]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  int support_size() const;
  std::vector<double> as_real() const;
  std::string str() const;

  // Bitmask with bit k set iff f(k) = 1.
  std::uint32_t mask() const;

  friend bool operator==(const Scenery&, const Scenery&) = default;
  friend auto operator<=>(const Scenery& a, const Scenery& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

// A function on G^order stored with x_1 as the most significant digit:
// flat index = ((x_1 * |G| + x_2) * |G| + ...) + x_order.
template <class T>
struct GTensor {
  int group_order = 0;
  int order = 0;
  std::vector<T> values;

  std::size_t index(std::span<const Element> x) const {
    std::size_t idx = 0;
    for (Element e : x) idx = idx * static_cast<std::size_t>(group_order) + e;
    return idx;
  }
  const T& at(std::span<const Element> x) const { return values[index(x)]; }
  T& at(std::span<const Element> x) { return values[index(x)]; }

  // Inverse of index().
  std::vector<Element> tuple(std::size_t idx) const {
    std::vector<Element> x(order);
    for (int i = order; i-- > 0;) {
      x[i] = static_cast<Element>(idx % group_order);
      idx /= group_order;
    }
    return x;
  }

  friend bool operator==(const GTensor&, const GTensor&) = default;
};

using IntTensor = GTensor<std::int64_t>;
using ComplexTensor = GTensor<Complex>;

ComplexTensor to_complex(const IntTensor& t);

// a_f(l) = sum_k f(k) f(l k), as an order-1 tensor.
IntTensor spatial_autocorrelation(const FiniteGroup& g, const Scenery& f);

// u(x_1, ..., x_n) -> u(x_1^-1, ..., x_n^-1).
template <class T>
GTensor<T> flip_arguments(const FiniteGroup& g, const GTensor<T>& u) {
  GTensor<T> out{u.group_order, u.order, std::vector<T>(u.values.size())};
  for (std::size_t idx = 0; idx < u.values.size(); ++idx) {
    std::vector<Element> x = u.tuple(idx);
    for (auto& e : x) e = g.inv(e);
    out.values[out.index(x)] = u.values[idx];
  }
  return out;
}

// A_f(l_1, ..., l_n) = sum_k f(k) f(l_1 k) ... f(l_n ... l_1 k).
// Throws CapExceeded when |G|^n > max_entries.
IntTensor multispectrum(const FiniteGroup& g, const Scenery& f, int n,
                        std::size_t max_entries = kDefaultMaxEntries);

// Right shift k -> f(k h).
Scenery shift(const FiniteGroup& g, const Scenery& f, Element h);

// Some h with f1(k) = f2(k h) for all k, if one exists (smallest index).
std::optional<Element> shift_equivalent(const FiniteGroup& g, const Scenery& f1,
                                        const Scenery& f2);

// Lexicographically smallest bit pattern among all right shifts of f.
Scenery shift_class_representative(const FiniteGroup& g, const Scenery& f);

// Element numbering used by the reconstruction order: index for non-identity
// elements, |G| for the identity.
int element_number(const FiniteGroup& g, Element x);

// a_1 = number(x_1); a_j = smallest integer > a_{j-1} congruent mod |G| to
// number(x_j ... x_1).
std::vector<int> assigned_tuple(const FiniteGroup& g, std::span<const Element> x);

struct Reconstruction {
  Scenery scenery;
  std::vector<Element> minimal_tuple;  // empty when the tensor is zero
  std::vector<int> assigned;
  int last_index = 0;  // largest i with assigned[i-1] < |G|, 0 if none
};

// Rebuilds a scenery from its order-|G| multispectrum. Scans tuples in
// increasing order of their assigned tuple, abandoning any prefix that no
// base point supports, so the first complete tuple reached has the minimal
// assigned tuple among tuples with A > 0. The support is {e, m_1, m_2 m_1,
// ..., m_i ... m_1}. Throws ValidationError when the tensor has the wrong
// shape or the candidate's multispectrum differs from the input.
Reconstruction reconstruct_from_multispectrum(const FiniteGroup& g, const IntTensor& a,
                                              std::size_t max_entries = kDefaultMaxEntries);

// All 2^|G| sceneries, in increasing binary order of their bit strings
// (element 0 is the most significant bit, so all-zero comes first).
class SceneryRange {
 public:
  explicit SceneryRange(int order);

  class iterator {
   public:
    using value_type = Scenery;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(int order, std::uint64_t i) : order_(order), i_(i) {}
    Scenery operator*() const;
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    int order_ = 0;
    std::uint64_t i_ = 0;
  };

  iterator begin() const { return {order_, 0}; }
  iterator end() const { return {order_, std::uint64_t{1} << order_}; }
  std::uint64_t size() const { return std::uint64_t{1} << order_; }

 private:
  int order_;
};

inline constexpr int kMaxEnumerationOrder = 20;

// Throws CapExceeded when |G| > kMaxEnumerationOrder.
SceneryRange enumerate_sceneries(const FiniteGroup& g);

Scenery scenery_from_counter(int order, std::uint64_t counter);

}  // namespace scenery

#endif  // SCENERY_SCENERY_HPP
