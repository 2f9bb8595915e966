#ifndef RNAGROWTH_JSON_IO_HPP
#define RNAGROWTH_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "rnagrowth/counting.hpp"
#include "rnagrowth/models.hpp"
#include "rnagrowth/multipoly.hpp"
#include "rnagrowth/power_series.hpp"
#include "rnagrowth/singularity.hpp"

namespace rnagrowth {

using json = nlohmann::ordered_json;

// Series <-> JSON array of exact rational strings, index = exponent.
// The round trip is bit-exact.
json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const json& j);

// Polynomial <-> term list [{"exponents": [e_z, e_S, e_T], "coeff": "p/q"}],
// sorted by exponent vector.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);
json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json counts_to_json(const CountSequence& c);
CountSequence counts_from_json(const json& j);

json root_set_to_json(const RootSet& rs, int digits);
json growth_report_to_json(const GrowthReport& rep, int digits);

extern const char* kReportCsvHeader;
std::string growth_report_csv_row(const GrowthReport& rep);

// Model-file schema: {name, kind, lambda?, s0?, phi?, eq1?, eq2?,
// published_radicand?, published_growth?}; polynomials in term-list form.
ModelSpec model_from_json(const json& j);

}  // namespace rnagrowth

#endif
