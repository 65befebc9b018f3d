#pragma once

#include <string>

#include <json.hpp>

#include "repur/cumulants.hpp"
#include "repur/ext_real.hpp"
#include "repur/infoscan.hpp"
#include "repur/renyi.hpp"
#include "repur/repur.hpp"
#include "repur/tails.hpp"

namespace repur {

/// Numbers carry 12 significant digits in both CSV and JSON. Non-finite
/// values are INF / -INF / INDETERMINATE in CSV and {"kind": "inf"},
/// {"kind": "-inf"}, {"kind": "indeterminate"} in JSON.
nlohmann::json to_json(double v);
nlohmann::json to_json(const ExtReal& v);

std::string format_r(double r);

std::string table_csv(const RepurTable& t);
nlohmann::json table_json(const RepurTable& t);

std::string scan_csv(const InformationScan& s);
nlohmann::json scan_json(const InformationScan& s);

std::string cumulants_csv(const CumulantSet& k);
nlohmann::json cumulants_json(const CumulantSet& k);

std::string tailfit_csv(const TailFit& f);
nlohmann::json tailfit_json(const TailFit& f);

std::string reconstruction_csv(const Reconstruction& r);
nlohmann::json reconstruction_json(const Reconstruction& r);

std::string entropy_csv(const EntropyResult& e);
nlohmann::json entropy_json(const EntropyResult& e);

std::string vur_csv(const VurChain& v);
nlohmann::json vur_json(const VurChain& v);

std::string density_csv(const SampledDensity& d);
nlohmann::json density_json(const SampledDensity& d);
std::string amplitude_csv(const SampledAmplitude& a);
nlohmann::json amplitude_json(const SampledAmplitude& a);

}  // namespace repur
