#pragma once

#include <nlohmann/json_fwd.hpp>

#include "qprofile/fforacle.hpp"
#include "qprofile/partition.hpp"
#include "qprofile/ratfunc.hpp"
#include "qprofile/similarity_type.hpp"
#include "qprofile/symfunc.hpp"

// Stable JSON encodings:
//   Partition / WeakComposition / ProfileTuple: [3,1,1]
//   RatFunc: {"num":["1","2",...],"den":["1"]}, fractions as "p/q" strings
//   SymFunc: {"degree":n,"basis":"s","coeffs":[{"part":[...],"value":{...}}]}
//   SimilarityType: {"blocks":[{"d":2,"lambda":[1]}]}
//   FpMatrix: {"p":2,"n":2,"entries":[[0,1],[0,0]]}
namespace qprofile {

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeakComposition& c);
WeakComposition composition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolyT& p);
PolyT poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SimilarityType& tau);
SimilarityType type_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FpMatrix& m);
FpMatrix fpmatrix_from_json(const nlohmann::json& j);

}  // namespace qprofile
