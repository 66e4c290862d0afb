#include "scenery/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <complex>
#include <stdexcept>

#include "scenery/errors.hpp"

namespace scenery {

namespace {

constexpr int kMaxOrder = 32;

std::vector<std::vector<int>> to_rows(int n, const std::vector<int>& flat) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = flat[i * n + j];
  return rows;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> flat)
    : name_(std::move(name)), order_(order), table_(std::move(flat)),
      inverse_(order, 0) {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == kIdentity) inverse_[a] = b;
}

FiniteGroup FiniteGroup::from_table(std::string name,
                                    std::vector<std::vector<int>> table) {
  AxiomReport report = verify_group_axioms(name, table);
  if (!report.ok()) {
    std::string msg = "group '" + name + "' fails axioms:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return FiniteGroup(std::move(name), n, std::move(flat));
}

Element FiniteGroup::compose(Element a, Element b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw std::out_of_range("element index out of range for " + name_);
  return mul(a, b);
}

Element FiniteGroup::inverse(Element a) const {
  if (a < 0 || a >= order_)
    throw std::out_of_range("element index out of range for " + name_);
  return inverse_[a];
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  return to_rows(order_, table_);
}

AxiomReport verify_group_axioms(std::string_view name,
                                const std::vector<std::vector<int>>& table) {
  AxiomReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const int n = static_cast<int>(table.size());
  if (n < 1) {
    fail("empty table");
    return report;
  }
  if (n > kMaxOrder) {
    fail("order " + std::to_string(n) + " exceeds supported maximum " +
         std::to_string(kMaxOrder));
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      fail("row " + std::to_string(i) + " has wrong length");
      return report;
    }
    for (int v : table[i]) {
      if (v < 0 || v >= n) {
        fail("entry out of range in row " + std::to_string(i));
        return report;
      }
    }
  }
  (void)name;

  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) {
      fail("index 0 is not a two-sided identity");
      break;
    }
  }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) seen[table[i][j]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n) {
      fail("row " + std::to_string(i) + " is not a permutation");
      break;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) seen[table[i][j]] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n) {
      fail("column " + std::to_string(j) + " is not a permutation");
      break;
    }
  }
  for (int i = 0; i < n; ++i) {
    int right = -1;
    for (int j = 0; j < n; ++j)
      if (table[i][j] == 0) right = j;
    if (right < 0 || table[right][i] != 0) {
      fail("element " + std::to_string(i) + " has no two-sided inverse");
      break;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          fail("associativity fails at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport verify_group_axioms(const FiniteGroup& g) {
  return verify_group_axioms(g.name(), g.table());
}

FiniteGroup cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group needs m >= 1");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  return FiniteGroup::from_table("Z" + std::to_string(m), std::move(t));
}

FiniteGroup dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral group needs m >= 1");
  const int n = 2 * m;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  // (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g)
  for (int x = 0; x < n; ++x) {
    const int a = x % m, f = x / m;
    for (int y = 0; y < n; ++y) {
      const int b = y % m, g = y / m;
      const int rot = ((f ? a - b : a + b) % m + m) % m;
      t[x][y] = rot + m * ((f + g) % 2);
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(m), std::move(t));
}

FiniteGroup quaternion8() {
  // Multiply the faithful 2x2 complex representation and read off indices.
  using C = std::complex<double>;
  using M = std::array<C, 4>;
  const C i1{0, 1};
  const M one{1, 0, 0, 1}, qi{i1, 0, 0, -i1}, qj{0, 1, -1, 0};
  auto prod = [](const M& a, const M& b) {
    return M{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
             a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
  };
  auto neg = [](const M& a) { return M{-a[0], -a[1], -a[2], -a[3]}; };
  const M qk = prod(qi, qj);
  const std::array<M, 8> elems{one, neg(one), qi, neg(qi), qj, neg(qj), qk, neg(qk)};
  auto find = [&](const M& x) {
    for (int e = 0; e < 8; ++e) {
      bool same = true;
      for (int k = 0; k < 4; ++k) same = same && std::abs(x[k] - elems[e][k]) < 1e-12;
      if (same) return e;
    }
    throw std::logic_error("quaternion product not closed");
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = find(prod(elems[a], elems[b]));
  return FiniteGroup::from_table("Q8", std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  if (n > kMaxOrder)
    throw std::invalid_argument("direct product order exceeds " +
                                std::to_string(kMaxOrder));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup::from_table(a.name() + "x" + b.name(), std::move(t));
}

namespace {

FiniteGroup build_factor(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("unknown group '" + s + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("unknown group '" + s + "'");
  const int m = std::stoi(digits);
  switch (family) {
    case 'Z':
    case 'C':
      return cyclic(m);
    case 'D':
      return dihedral(m);
    case 'S':
      if (m == 3) return dihedral(3);
      break;
    case 'Q':
      if (m == 8) return quaternion8();
      break;
    case 'V':
    case 'K':
      if (m == 4) return direct_product(cyclic(2), cyclic(2));
      break;
    default:
      break;
  }
  throw std::invalid_argument("unknown group '" + s + "'");
}

}  // namespace

FiniteGroup build_builtin(const std::string& descriptor) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : descriptor) {
    if (c == 'x' || c == 'X' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  FiniteGroup g = build_factor(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, build_factor(parts[i]));
  return g;
}

std::vector<std::string> builtin_names() {
  return {"Z1",  "Z2",  "Z3",   "Z4",    "Z5",    "Z6",     "Z7",
          "Z8",  "Z9",  "Z10",  "Z11",   "Z12",   "Z2xZ2",  "Z2xZ4",
          "Z2xZ2xZ2",   "Z3xZ3", "Z2xZ6", "D3",   "D4",     "D5",
          "D6",  "Q8",  "D3xZ2"};
}

}  // namespace scenery
