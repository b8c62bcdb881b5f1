#pragma once

#include <json.hpp>

#include "macjt/arith/qtrational.hpp"
#include "macjt/partitions/partition.hpp"
#include "macjt/symfunc/symfunc.hpp"

namespace macjt::io {

using nlohmann::json;

// [[q_exp, t_exp, "coeff"], ...] in descending grlex order.
json poly_to_json(const arith::QTPolynomial &p);
arith::QTPolynomial poly_from_json(const json &j);

// {"num": [...], "den": [...]} with a primitive denominator whose leading
// coefficient is positive.
json rational_to_json(const arith::QTRational &r);
arith::QTRational rational_from_json(const json &j);

// Stored representation (denominator kept factored) for the on-disk cache.
json rational_repr_to_json(const arith::QTRational &r);
arith::QTRational rational_repr_from_json(const json &j);

json partition_to_json(const Partition &p);
Partition partition_from_json(const json &j);

// {"basis": "p", "terms": [{"partition": [...], "coeff": ...}]}
json symfunc_to_json(const sym::SymFunc &f, bool factored = false);
sym::SymFunc symfunc_from_json(const json &j, int degree_cap, bool factored = false);

} // namespace macjt::io
