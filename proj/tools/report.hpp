#pragma once

#include <string>

#include "json.hpp"
#include "normgeom/corpus.hpp"
#include "normgeom/curve.hpp"
#include "normgeom/decomp.hpp"
#include "normgeom/inequalities.hpp"

namespace normgeom::app {

using nlohmann::json;

// Rounds v to 12 significant digits.
double round12(double v);

// Serializes with every floating-point value rounded by round12.
std::string dump_report(const json& doc);

json ball_json(const UnitBall& ball);
json curve_json(const AdmissibleCurve& curve, int samples_per_piece);
json ledger_json(const IsoLedger& ledger);
json analyze_json(const AdmissibleCurve& curve);
json decompose_json(const AdmissibleCurve& curve, const DecompositionResult& parts);
json lhuilier_json(const LhuilierReport& report);
json corpus_json(const CorpusReport& report);

}  // namespace normgeom::app
