#pragma once

// Stable JSON / CSV renderings. Field order is fixed, big integers are
// decimal strings, and runtimes are dropped when `timestamps` is false so
// that identical runs produce identical bytes.

#include "gf2lab/critical.hpp"
#include "gf2lab/harness.hpp"
#include "gf2lab/matroid.hpp"
#include "gf2lab/regularity.hpp"
#include "gf2lab/spectral.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace gf2lab {

using Json = nlohmann::ordered_json;

Json to_json(const VerifierReport& r, bool timestamps = true);
Json to_json(const ConstantsLedger& c);
Json to_json(const CriticalResult& c);
Json to_json(const UniformityReport& u);
Json to_json(const RegularityCert& c);
Json to_json(const RefinementTrace& t);
Json to_json(const CircuitCensus& c);

/// JSON array of reports, pretty-printed with a trailing newline ("[]" when
/// empty).
std::string emit_reports(std::span<const VerifierReport> reports, bool timestamps = true);

/// "element,count" CSV.
std::string census_csv(const CircuitCensus& c);

} // namespace gf2lab
