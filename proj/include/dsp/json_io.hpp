#pragma once

#include <string>

#include <json.hpp>

#include "dsp/catalog.hpp"
#include "dsp/constructions.hpp"
#include "dsp/errors.hpp"
#include "dsp/jnf.hpp"
#include "dsp/reduction.hpp"
#include "dsp/spectra.hpp"

namespace dsp::io {

using Json = nlohmann::ordered_json;

// Readers throw Error("ParseError") on schema violations.
Json parse_text(const std::string& text);
Json read_file(const std::string& path);

Rat rat_from(const Json& j);
Partition partition_from(const Json& j);
JordanForm form_from(const Json& j);
JnfTuple tuple_from(const Json& j);
ExponentAssignment exponents_from(const Json& j);
Mat mat_from(const Json& j);
MatrixTuple matrix_tuple_from(const Json& j);
MvTuple mv_tuple_from(const Json& j);

Json to_json(const Rat& r);
Json to_json(const Int& z);
Json to_json(const Partition& p);
Json to_json(const JordanForm& f);
Json to_json(const JnfTuple& t);
Json to_json(const ExponentAssignment& a);
Json to_json(const Mat& m);
Json to_json(const MatrixTuple& t);
Json to_json(const ConditionReport& r);
Json to_json(const ReductionChain& c);
Json to_json(const SpectraInvariants& s);
Json to_json(const Relation& r);
Json to_json(const Verdict& v);
Json to_json(const CaseLabel& l);
Json to_json(const VerificationReport& r);
Json to_json(const ConstructionPlan& p);
Json to_json(const MvTuple& t);
Json to_json(const Merged& m);
Json to_json(const Error& e);

}  // namespace dsp::io
