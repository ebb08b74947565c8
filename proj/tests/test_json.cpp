#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qprofile/json_io.hpp"

using namespace qprofile;
using nlohmann::json;

TEST_CASE("partition json") {
  Partition lam{3, 1, 1};
  CHECK(to_json(lam).dump() == "[3,1,1]");
  CHECK(partition_from_json(json::parse("[3,1,1]")) == lam);
  CHECK(partition_from_json(json::parse("[]")) == Partition{});
}

TEST_CASE("ratfunc json round trip") {
  std::vector<RatFunc> samples = {
      RatFunc::zero(),
      RatFunc::one(),
      RatFunc(BigQ(7, 3)),
      RatFunc(q_binomial(4, 2)),
      RatFunc::t_power(-3),
      RatFunc(PolyT(std::vector<BigQ>{BigQ(1, 2), BigQ(-2)}), q_int(3)),
  };
  for (const auto& f : samples) {
    CHECK(ratfunc_from_json(to_json(f)) == f);
  }
  // fraction strings are accepted
  RatFunc f = ratfunc_from_json(json::parse(R"({"num":["1/2","-2"],"den":["1"]})"));
  CHECK(f.num().coeff(0) == BigQ(1, 2));
}

TEST_CASE("symfunc json round trip") {
  SymFunc f = from_basis(BasisId::p, Partition{2, 1});
  SymFunc g = symfunc_from_json(to_json(f));
  CHECK(f == g);
  CHECK(to_json(f)["basis"] == "s");
}

TEST_CASE("similarity type json") {
  SimilarityType tau({{2, Partition{1}}, {1, Partition{2, 1}}});
  CHECK(type_from_json(to_json(tau)) == tau);
  SimilarityType parsed = type_from_json(
      json::parse(R"({"blocks":[{"d":2,"lambda":[1]},{"d":1,"lambda":[2,1]}]})"));
  CHECK(parsed == tau);
  CHECK(parsed.size() == 5);
}

TEST_CASE("fp matrix json") {
  FpMatrix m(2, 2, {{0, 1}, {0, 0}});
  FpMatrix back = fpmatrix_from_json(to_json(m));
  CHECK(back == m);
  FpMatrix parsed = fpmatrix_from_json(json::parse(R"({"p":2,"n":2,"entries":[[0,1],[0,0]]})"));
  CHECK(parsed == m);
}
