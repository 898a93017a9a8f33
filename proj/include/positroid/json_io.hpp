#pragma once

#include <json.hpp>

#include "positroid/affine.hpp"
#include "positroid/grobner.hpp"
#include "positroid/linalg.hpp"
#include "positroid/perm.hpp"
#include "positroid/positroid.hpp"
#include "positroid/promotion.hpp"
#include "positroid/tableau.hpp"

namespace positroid {

using nlohmann::json;

// Serializers, picked up by nlohmann::json through ADL.
void to_json(json& j, const Permutation& p);
void to_json(json& j, const BoundedAffinePermutation& f);
void to_json(json& j, const RankCondition& c);
void to_json(json& j, const Monomial& m);
void to_json(json& j, const Term& t);
void to_json(json& j, const GBGenerator& g);
void to_json(json& j, const AntidiagonalWitness& w);
void to_json(json& j, const RationalMatrix& m);

Permutation permutation_from_json(const json& j);
BoundedAffinePermutation bounded_from_json(const json& j);
RankCondition condition_from_json(const json& j);
Monomial monomial_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);

}  // namespace positroid
