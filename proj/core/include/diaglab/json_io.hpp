#ifndef DIAGLAB_JSON_IO_HPP
#define DIAGLAB_JSON_IO_HPP

#include <json.hpp>

#include "diaglab/catalog.hpp"
#include "diaglab/grade.hpp"
#include "diaglab/hypergeom.hpp"

namespace diaglab {

// All numbers serialize as exact rational strings; key order is fixed so
// identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

Json toJson(const Rational& r);
Rational rationalFromJson(const Json& j);

Json toJson(const UniSeries& s);
UniSeries uniSeriesFromJson(const Json& j);

Json toJson(const TruncatedMultiSeries& s);
TruncatedMultiSeries multiSeriesFromJson(const Json& j);

Json toJson(const DiffOp& op);
DiffOp diffOpFromJson(const Json& j);

Json toJson(const AlgebraicSpec& spec);
AlgebraicSpec algebraicSpecFromJson(const Json& j);

Json toJson(const DiagonalRep& rep);
DiagonalRep diagonalRepFromJson(const Json& j);

Json toJson(const HadamardRep& rep);
HadamardRep hadamardRepFromJson(const Json& j);

Json toJson(const FormalSolution& s);
Json toJson(const NilReport& r, bool includeBasis = true);
Json toJson(const JordanStructure& js);
Json toJson(const Contraction& c);
Json toJson(const GradeBounds& b);
Json toJson(const CatalogVerdict& v);

}  // namespace diaglab

#endif
