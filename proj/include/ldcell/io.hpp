#pragma once

// JSON and CSV formats.
//
// Parameters:  {"model":"imac","n1":8,"n2":7,"n3":9,"n4":7,"nM":2,"nD":4,"q":9}
// Scheme:      {"model":"imac","params":{...},
//               "messages":[{"name":"m1","owner":1,"decoders":[1],"columns":[[1],[3,4]]}]}
//              where each entry of "columns" lists the 1-based levels set in
//              one generator column.
// W-curve CSV: alpha_num,alpha_den,ni,achievable,bound_num,bound_den,gap_num,gap_den,regime

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>

#include "json.hpp"
#include "ldcell/channel.hpp"
#include "ldcell/rates.hpp"
#include "ldcell/scheme.hpp"

namespace ldcell {

using Json = nlohmann::ordered_json;

Json params_to_json(Model model, const CellParams& p);
// "q" may be omitted and then defaults to the largest gain. Throws
// FormatError on missing or mistyped fields and ParameterError on invalid
// values.
std::pair<Model, CellParams> params_from_json(const Json& j);

Json scheme_to_json(const LinearScheme& s);
LinearScheme scheme_from_json(const Json& j);

// Stable text form: one message per line, keys in a fixed order.
std::string scheme_to_string(const LinearScheme& s);
LinearScheme scheme_from_string(const std::string& text);

LinearScheme read_scheme_file(const std::filesystem::path& path);
void write_scheme_file(const std::filesystem::path& path, const LinearScheme& s);

inline constexpr const char* kWCurveHeader =
    "alpha_num,alpha_den,ni,achievable,bound_num,bound_den,gap_num,gap_den,regime";

void write_wcurve_csv(std::ostream& os, const WCurveSweep& sweep);

}  // namespace ldcell
