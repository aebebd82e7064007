#pragma once

#include "json.hpp"

#include "grasstilt/bigint.hpp"
#include "grasstilt/bott.hpp"
#include "grasstilt/partition.hpp"
#include "grasstilt/report.hpp"
#include "grasstilt/schur.hpp"
#include "grasstilt/verifier.hpp"

// JSON forms:
//   Partition           [3,1]
//   VirtualSchurSum     [{"partition":[2],"multiplicity":1}, ...]  lex descending
//   CohomologyTable     {"0": {"dimension":6, "weights":[{"weight":[1,0,0,0],"multiplicity":1}]}}
//   VerificationReport  {context, check, verdict, witnesses, tables, elapsed_ms, characteristic}
// Big integers are JSON numbers when they fit in int64 and decimal strings otherwise.

namespace grasstilt {

using nlohmann::json;

json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);

void to_json(json& j, const GLWeight& w);
void from_json(const json& j, GLWeight& w);

void to_json(json& j, const ExteriorSequence& s);
void from_json(const json& j, ExteriorSequence& s);

void to_json(json& j, const VirtualSchurSum& s);
void from_json(const json& j, VirtualSchurSum& s);

void to_json(json& j, const CohomologyTable& t);
void from_json(const json& j, CohomologyTable& t);

void to_json(json& j, const TwistedSchurBundle& b);
void from_json(const json& j, TwistedSchurBundle& b);

void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

}  // namespace grasstilt
