#include "scenery/io.hpp"

#include <fstream>

#include "scenery/errors.hpp"

namespace scenery {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j) {
  try {
    const std::string name = j.at("name").get<std::string>();
    const int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (order < 1 || static_cast<int>(table.size()) != order)
      throw ValidationError("group '" + name + "': table has " +
                            std::to_string(table.size()) + " rows, order is " +
                            std::to_string(order));
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != order)
        throw ValidationError("group '" + name + "': table rows must have length " +
                              std::to_string(order));
    for (int i = 0; i < order; ++i)
      if (table[0][i] != i || table[i][0] != i)
        throw ValidationError("group '" + name +
                              "': identity must be element 0 (row and column 0 "
                              "must be the identity map)");
    return FiniteGroup::from_table(name, std::move(table));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed group file: ") + e.what());
  }
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  return j;
}

FiniteGroup load_group_file(const std::filesystem::path& path) {
  return group_from_json(read_json_file(path));
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw ValidationError("ragged matrix in JSON");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = j.at(r).at(c);
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else {
        if (e.size() != 2) throw ValidationError("complex entry must be [re, im]");
        m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
  }
  return m;
}

IrrepSet irreps_from_json(const Json& j) {
  try {
    const Json& list = j.is_object() ? j.at("representations") : j;
    IrrepSet set;
    for (const Json& rj : list) {
      Representation r;
      r.degree = rj.at("degree").get<std::size_t>();
      for (const Json& mj : rj.at("matrices")) r.matrices.push_back(matrix_from_json(mj));
      set.reps.push_back(std::move(r));
    }
    return set;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed representation file: ") + e.what());
  }
}

Json irreps_to_json(const IrrepSet& set) {
  Json list = Json::array();
  for (const auto& r : set.reps) {
    Json rj;
    rj["degree"] = r.degree;
    Json ms = Json::array();
    for (const auto& m : r.matrices) ms.push_back(matrix_to_json(m));
    rj["matrices"] = std::move(ms);
    list.push_back(std::move(rj));
  }
  return list;
}

IrrepSet load_irreps_file(const std::filesystem::path& path) {
  return irreps_from_json(read_json_file(path));
}

Json tensor_to_json(const std::string& group, const IntTensor& t) {
  Json j;
  j["group"] = group;
  j["group_order"] = t.group_order;
  j["order"] = t.order;
  j["values"] = t.values;
  return j;
}

Json tensor_to_json(const std::string& group, const ComplexTensor& t) {
  Json j;
  j["group"] = group;
  j["group_order"] = t.group_order;
  j["order"] = t.order;
  Json vals = Json::array();
  for (const auto& v : t.values) vals.push_back(Json::array({v.real(), v.imag()}));
  j["values"] = std::move(vals);
  return j;
}

IntTensor int_tensor_from_json(const Json& j) {
  try {
    IntTensor t;
    t.group_order = j.at("group_order").get<int>();
    t.order = j.at("order").get<int>();
    t.values = j.at("values").get<std::vector<std::int64_t>>();
    std::size_t expect = 1;
    for (int i = 0; i < t.order; ++i) expect *= static_cast<std::size_t>(t.group_order);
    if (t.values.size() != expect) throw ValidationError("tensor has wrong number of values");
    return t;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed tensor file: ") + e.what());
  }
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["group"] = r.group;
  j["n"] = r.n;
  j["lag_bound"] = r.lag_bound;
  j["tol"] = r.tol;
  j["unknowns"] = r.unknowns;
  j["rank"] = r.rank;
  j["nullity"] = r.nullity;
  j["theoretical_rank_bound"] = r.rank_bound;
  j["verdict"] = r.condition_holds ? "condition_holds" : "condition_fails";
  if (r.witness_residual) {
    j["witness_residual"] = *r.witness_residual;
    j["witness_residual_lag_bound"] = 2 * r.lag_bound;
  } else {
    j["witness_residual"] = nullptr;
  }
  return j;
}

Json to_json(const RankDeficitSummary& s) {
  Json j;
  j["group"] = s.group;
  j["seed"] = s.seed;
  j["random_trials"] = s.random_trials;
  j["theoretical_rank_bound"] = s.rank_bound;
  j["min_rank"] = s.min_rank;
  j["max_rank"] = s.max_rank;
  j["min_nullity"] = s.min_nullity;
  j["max_witness_residual"] = s.max_witness_residual;
  j["all_ok"] = s.all_ok;
  Json trials = Json::array();
  for (const auto& t : s.trials) {
    Json tj;
    tj["label"] = t.label;
    tj["gamma"] = t.gamma;
    tj["rank"] = t.rank;
    tj["nullity"] = t.nullity;
    tj["witness_residual"] = t.witness_residual;
    tj["ok"] = t.ok;
    trials.push_back(std::move(tj));
  }
  j["trials"] = std::move(trials);
  return j;
}

Json to_json(const DistinguishVerdict& v) {
  Json j;
  j["verdict"] = v.distinguished ? "distinguished" : "indistinguishable_up_to";
  j["horizon"] = v.horizon;
  j["order_bound"] = v.order_bound;
  j["lag_bound"] = v.lag_bound;
  j["max_pattern_difference"] = v.max_pattern_difference;
  Json m = Json::array();
  for (bool b : v.moments_equal_by_order) m.push_back(b);
  j["moments_equal_by_order"] = std::move(m);
  j["moments_equal"] = v.moments_equal;
  return j;
}

Json to_json(const PairFinding& p) {
  Json j;
  j["f1"] = p.f1.str();
  j["f2"] = p.f2.str();
  j["shift_equivalent"] = p.shift_equivalent;
  Json orders = Json::array();
  for (const auto& o : p.orders) {
    Json oj;
    oj["n"] = o.n;
    oj["delta_zero"] = o.delta_zero;
    oj["in_null_space"] = o.in_null_space;
    oj["residual"] = o.residual;
    orders.push_back(std::move(oj));
  }
  j["orders"] = std::move(orders);
  j["distinguishability"] = to_json(p.verdict);
  j["consistent"] = p.consistent;
  if (!p.inconsistencies.empty()) j["inconsistencies"] = p.inconsistencies;
  return j;
}

Json to_json(const ExplorationReport& r) {
  Json j;
  j["group"] = r.group;
  j["gamma"] = r.gamma;
  j["order_bound"] = r.options.order_bound;
  j["horizon"] = r.options.horizon;
  j["lag_bound"] = r.lag_bound;
  Json reps = Json::array();
  for (const auto& s : r.class_representatives) reps.push_back(s.str());
  j["shift_classes"] = std::move(reps);
  j["pair_count"] = r.pairs.size();
  j["all_consistent"] = r.all_consistent;
  Json flagged = Json::array();
  for (auto i : r.indistinguishable_non_shift) flagged.push_back(to_json(r.pairs[i]));
  j["indistinguishable_non_shift_pairs"] = std::move(flagged);
  Json nulls = Json::array();
  for (auto i : r.null_space_differences) nulls.push_back(to_json(r.pairs[i]));
  j["null_space_differences"] = std::move(nulls);
  Json all = Json::array();
  for (const auto& p : r.pairs) all.push_back(to_json(p));
  j["pairs"] = std::move(all);
  return j;
}

}  // namespace scenery
