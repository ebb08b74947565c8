#include "qprofile/json_io.hpp"

#include <nlohmann/json.hpp>

namespace qprofile {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> v;
  for (const auto& e : j) v.push_back(e.get<int>());
  return v;
}

json coeff_array(const std::vector<BigQ>& coeffs) {
  json a = json::array();
  for (const auto& c : coeffs) a.push_back(bigq_to_string(c));
  return a;
}

std::vector<BigQ> coeffs_from(const json& j) {
  std::vector<BigQ> v;
  for (const auto& e : j) {
    if (e.is_string()) {
      v.push_back(bigq_from_string(e.get<std::string>()));
    } else {
      v.push_back(BigQ(e.get<long>()));
    }
  }
  return v;
}

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(int_array(j)); }

json to_json(const WeakComposition& c) { return json(c.parts()); }

WeakComposition composition_from_json(const json& j) {
  return WeakComposition(int_array(j));
}

json to_json(const PolyT& p) { return coeff_array(p.coeffs()); }

PolyT poly_from_json(const json& j) { return PolyT(coeffs_from(j)); }

json to_json(const RatFunc& f) {
  return json{{"num", coeff_array(f.num().coeffs())},
              {"den", coeff_array(f.den().coeffs())}};
}

RatFunc ratfunc_from_json(const json& j) {
  return RatFunc(PolyT(coeffs_from(j.at("num"))), PolyT(coeffs_from(j.at("den"))));
}

json to_json(const SymFunc& f) {
  json coeffs = json::array();
  for (const auto& [lam, c] : f.schur_coeffs()) {
    coeffs.push_back(json{{"part", to_json(lam)}, {"value", to_json(c)}});
  }
  return json{{"degree", f.degree()}, {"basis", "s"}, {"coeffs", coeffs}};
}

SymFunc symfunc_from_json(const json& j) {
  if (j.at("basis").get<std::string>() != "s")
    throw std::invalid_argument("symfunc_from_json: only the Schur encoding is accepted");
  SymFunc f(j.at("degree").get<int>());
  for (const auto& term : j.at("coeffs")) {
    f.add_term(partition_from_json(term.at("part")), ratfunc_from_json(term.at("value")));
  }
  return f;
}

json to_json(const SimilarityType& tau) {
  json blocks = json::array();
  for (const auto& b : tau.blocks()) {
    blocks.push_back(json{{"d", b.degree}, {"lambda", to_json(b.shape)}});
  }
  return json{{"blocks", blocks}};
}

SimilarityType type_from_json(const json& j) {
  std::vector<TypeBlock> blocks;
  for (const auto& b : j.at("blocks")) {
    blocks.push_back({b.at("d").get<int>(), partition_from_json(b.at("lambda"))});
  }
  return SimilarityType(std::move(blocks));
}

json to_json(const FpMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return json{{"p", m.p()}, {"n", m.n()}, {"entries", rows}};
}

FpMatrix fpmatrix_from_json(const json& j) {
  long long p = j.at("p").get<long long>();
  int n = j.at("n").get<int>();
  std::vector<std::vector<long long>> entries;
  for (const auto& row : j.at("entries")) {
    entries.push_back(row.get<std::vector<long long>>());
  }
  return FpMatrix(p, n, std::move(entries));
}

}  // namespace qprofile
