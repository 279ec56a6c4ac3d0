#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "opran/cardinal.hpp"
#include "opran/matrix.hpp"
#include "opran/range_rep.hpp"
#include "opran/range_ops.hpp"
#include "opran/seqspace.hpp"

namespace opran {

using Json = nlohmann::json;

// Parsers take a `where` breadcrumb so schema errors name the offending
// field; all throw ParseError.

Json cardinal_to_json(Cardinal c);
Cardinal cardinal_from_json(const Json& j, const std::string& where);

Json dimseq_to_json(const DimSeq& s);
DimSeq dimseq_from_json(const Json& j, const std::string& where);

Json range_rep_to_json(const RangeRep& r);
RangeRep range_rep_from_json(const Json& j, const std::string& where);

Json seqvector_to_json(const SeqVector& v);
SeqVector seqvector_from_json(const Json& j, const std::string& where);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

Json numeric_range_rep_to_json(const NumericRangeRep& r);

// Exact rational rendered as "p/q" (or "p" when integral).
std::string rational_to_string(const Rational& r);

Json load_json_file(const std::string& path);

}  // namespace opran
