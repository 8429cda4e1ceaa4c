#pragma once

#include <json.hpp>

#include "bqf/clifford.hpp"
#include "bqf/form.hpp"
#include "bqf/norm.hpp"
#include "bqf/pairs.hpp"

namespace bqf {

using Json = nlohmann::json;

// Canonical JSON: keys sorted, integers that do not fit in 64 bits as
// decimal strings, rationals as {"num", "den"}.

Json to_json(const Int& v);
Json to_json(const Ring& r);
Json to_json(const Elem& v);
Json to_json(const Mat& m);
Json to_json(const IntMat& m);
Json to_json(const Form& q);
Json to_json(const QuadraticAlgebra& alg);
Json to_json(const CliffordPair& p);
Json to_json(const SimilarityWitness& w);
Json to_json(const AlgebraWitness& w);
Json to_json(const PairWitness& w);
Json to_json(const IdealLattice& lat);
Json to_json(const QuaternionElem& z);
Json to_json(const DualTrace& t);
Json to_json(const SimilarityVerdict& v);
Json to_json(const PairVerdict& v);

// Parsers take a fallback ring used when the object carries no "ring".
// Errors are reported as ErrorKind::Parse.

Int int_from_json(const Json& j);
Ring ring_from_json(const Json& j);
Elem elem_from_json(const Json& j, const Ring& ring);
Mat mat_from_json(const Json& j, const Ring& ring);
Form form_from_json(const Json& j, const Ring& fallback);
QuadraticAlgebra algebra_from_json(const Json& j, const Ring& fallback);
CliffordPair pair_from_json(const Json& j, const Ring& fallback);
QuaternionElem quaternion_from_json(const Json& j, const Ring& ring);

}  // namespace bqf
