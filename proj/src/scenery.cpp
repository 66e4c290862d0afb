#include "scenery/scenery.hpp"

#include <bit>
#include <numeric>

namespace scenery {

Scenery::Scenery(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw ValidationError("scenery values must be 0 or 1");
  if (bits_.size() > 32) throw ValidationError("scenery longer than 32 elements");
}

Scenery Scenery::parse(std::string_view text, int expected_order) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ValidationError("scenery literal must contain only 0 and 1: '" +
                            std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (expected_order >= 0 && static_cast<int>(bits.size()) != expected_order)
    throw ValidationError("scenery literal '" + std::string(text) + "' has length " +
                          std::to_string(bits.size()) + ", group order is " +
                          std::to_string(expected_order));
  return Scenery(std::move(bits));
}

int Scenery::support_size() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0);
}

std::vector<double> Scenery::as_real() const {
  return std::vector<double>(bits_.begin(), bits_.end());
}

std::string Scenery::str() const {
  std::string s;
  for (auto b : bits_) s += static_cast<char>('0' + b);
  return s;
}

std::uint32_t Scenery::mask() const {
  std::uint32_t m = 0;
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k]) m |= std::uint32_t{1} << k;
  return m;
}

ComplexTensor to_complex(const IntTensor& t) {
  ComplexTensor out{t.group_order, t.order, {}};
  out.values.reserve(t.values.size());
  for (auto v : t.values) out.values.emplace_back(static_cast<double>(v));
  return out;
}

namespace {

void require_same_group(const FiniteGroup& g, const Scenery& f) {
  if (f.order() != g.order())
    throw ValidationError("scenery of length " + std::to_string(f.order()) +
                          " used with group " + g.name() + " of order " +
                          std::to_string(g.order()));
}

// support_masks[p] has bit k set iff f(p k) = 1.
std::vector<std::uint32_t> support_masks(const FiniteGroup& g, const Scenery& f) {
  std::vector<std::uint32_t> masks(g.order(), 0);
  for (int p = 0; p < g.order(); ++p)
    for (int k = 0; k < g.order(); ++k)
      if (f(g.mul(p, k))) masks[p] |= std::uint32_t{1} << k;
  return masks;
}

void fill_multispectrum(const FiniteGroup& g, const std::vector<std::uint32_t>& masks,
                        int depth, int n, Element partial, std::uint32_t alive,
                        std::size_t idx, std::vector<std::int64_t>& out) {
  if (depth == n) {
    out[idx] = std::popcount(alive);
    return;
  }
  const std::size_t base = idx * static_cast<std::size_t>(g.order());
  for (int x = 0; x < g.order(); ++x) {
    const Element next = g.mul(x, partial);
    const std::uint32_t m = alive & masks[next];
    if (m == 0) {
      // Every completion of this prefix is zero; the vector is zero-initialized,
      // so skip the subtree.
      continue;
    }
    fill_multispectrum(g, masks, depth + 1, n, next, m, base + x, out);
  }
}

}  // namespace

IntTensor spatial_autocorrelation(const FiniteGroup& g, const Scenery& f) {
  require_same_group(g, f);
  IntTensor a{g.order(), 1, std::vector<std::int64_t>(g.order(), 0)};
  for (int l = 0; l < g.order(); ++l)
    for (int k = 0; k < g.order(); ++k) a.values[l] += f(k) * f(g.mul(l, k));
  return a;
}

IntTensor multispectrum(const FiniteGroup& g, const Scenery& f, int n,
                        std::size_t max_entries) {
  require_same_group(g, f);
  if (n < 1) throw std::invalid_argument("multispectrum order must be >= 1");
  const std::size_t size = checked_power(static_cast<std::size_t>(g.order()),
                                         static_cast<std::size_t>(n), max_entries,
                                         "multispectrum");
  IntTensor a{g.order(), n, std::vector<std::int64_t>(size, 0)};
  const auto masks = support_masks(g, f);
  if (f.mask() == 0) return a;
  fill_multispectrum(g, masks, 0, n, kIdentity, f.mask(), 0, a.values);
  return a;
}

Scenery shift(const FiniteGroup& g, const Scenery& f, Element h) {
  require_same_group(g, f);
  std::vector<std::uint8_t> bits(g.order());
  for (int k = 0; k < g.order(); ++k) bits[k] = static_cast<std::uint8_t>(f(g.mul(k, h)));
  return Scenery(std::move(bits));
}

std::optional<Element> shift_equivalent(const FiniteGroup& g, const Scenery& f1,
                                        const Scenery& f2) {
  require_same_group(g, f1);
  require_same_group(g, f2);
  for (int h = 0; h < g.order(); ++h) {
    bool match = true;
    for (int k = 0; k < g.order() && match; ++k) match = f1(k) == f2(g.mul(k, h));
    if (match) return h;
  }
  return std::nullopt;
}

Scenery shift_class_representative(const FiniteGroup& g, const Scenery& f) {
  Scenery best = f;
  for (int h = 1; h < g.order(); ++h) {
    Scenery s = shift(g, f, h);
    if (s < best) best = std::move(s);
  }
  return best;
}

int element_number(const FiniteGroup& g, Element x) {
  return x == kIdentity ? g.order() : x;
}

std::vector<int> assigned_tuple(const FiniteGroup& g, std::span<const Element> x) {
  const int n = g.order();
  std::vector<int> a;
  a.reserve(x.size());
  Element partial = kIdentity;
  for (std::size_t j = 0; j < x.size(); ++j) {
    partial = g.mul(x[j], partial);
    const int num = element_number(g, partial);
    if (j == 0) {
      a.push_back(num);
    } else {
      // smallest value > a_{j-1} with value = num (mod n)
      const int prev = a.back();
      int v = prev + ((num - prev) % n + n) % n;
      if (v == prev) v += n;
      a.push_back(v);
    }
  }
  return a;
}

Reconstruction reconstruct_from_multispectrum(const FiniteGroup& g, const IntTensor& a,
                                              std::size_t max_entries) {
  const int n = g.order();
  if (a.group_order != n || a.order != n)
    throw ValidationError("reconstruction needs a multispectrum of order |G| = " +
                          std::to_string(n));
  const std::size_t size = checked_power(static_cast<std::size_t>(n),
                                         static_cast<std::size_t>(n), max_entries,
                                         "reconstruction tensor");
  if (a.values.size() != size) throw ValidationError("tensor has wrong number of entries");

  Reconstruction out;
  std::vector<Element> tuple(n, kIdentity);
  if (a.at(tuple) <= 0) {
    out.scenery = Scenery::zeros(n);
  } else {
    // Element whose number is congruent to r (mod n).
    auto element_with_residue = [n](int r) { return static_cast<Element>(r % n); };
    Element partial = kIdentity;
    int prev = 0;
    for (int j = 0; j < n; ++j) {
      bool found = false;
      for (int cand = prev + 1; cand <= prev + n; ++cand) {
        const Element q = element_with_residue(cand);
        const Element x = g.mul(q, g.inv(partial));
        tuple[j] = x;
        // A prefix is extendable iff it is positive when padded with e.
        std::fill(tuple.begin() + j + 1, tuple.end(), kIdentity);
        if (a.at(tuple) > 0) {
          partial = q;
          prev = cand;
          found = true;
          break;
        }
      }
      if (!found)
        throw ValidationError("inconsistent tensor: no positive extension at position " +
                              std::to_string(j + 1));
    }
    out.minimal_tuple = tuple;
    out.assigned = assigned_tuple(g, tuple);

    std::vector<std::uint8_t> bits(n, 0);
    bits[kIdentity] = 1;
    partial = kIdentity;
    for (int j = 0; j < n; ++j) {
      if (out.assigned[j] >= n) break;
      partial = g.mul(tuple[j], partial);
      bits[partial] = 1;
      out.last_index = j + 1;
    }
    out.scenery = Scenery(std::move(bits));
  }

  if (multispectrum(g, out.scenery, n, max_entries) != a)
    throw ValidationError("inconsistent tensor: no scenery has this multispectrum");
  return out;
}

SceneryRange::SceneryRange(int order) : order_(order) {
  if (order < 0 || order > kMaxEnumerationOrder)
    throw CapExceeded("scenery enumeration limited to groups of order <= " +
                      std::to_string(kMaxEnumerationOrder));
}

Scenery scenery_from_counter(int order, std::uint64_t counter) {
  std::vector<std::uint8_t> bits(order);
  for (int k = 0; k < order; ++k)
    bits[k] = static_cast<std::uint8_t>((counter >> (order - 1 - k)) & 1u);
  return Scenery(std::move(bits));
}

Scenery SceneryRange::iterator::operator*() const {
  return scenery_from_counter(order_, i_);
}

SceneryRange enumerate_sceneries(const FiniteGroup& g) { return SceneryRange(g.order()); }

}  // namespace scenery
