#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rankvar/groebner.hpp"
#include "rankvar/module.hpp"
#include "rankvar/pipoint.hpp"

namespace rankvar {

/// Malformed or invalid user input (files, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "v1";

/// "2", "9", "F9", "GF(9)", "3^2", optionally followed by "(t)" or "(t1,t2)".
FieldPtr parse_field_spec(const std::string& text);

json field_to_json(FieldPtr f);
FieldPtr field_from_json(const json& j);

json module_to_json(const LambdaModule& m);
/// Validates the actions; a violated relation is reported with its 1-based pair.
LambdaModule module_from_json(const json& j);
LambdaModule load_module(const std::string& path);
void save_module(const LambdaModule& m, const std::string& path);

/// One polynomial per line in y1..yr; '#' starts a comment; "%r N" and "%field F"
/// directives set the number of variables and the coefficient field.
GradedIdeal parse_ideal_text(const std::string& text, FieldPtr default_field, unsigned default_r = 0);
GradedIdeal load_ideal(const std::string& path, FieldPtr default_field, unsigned default_r = 0);
std::string ideal_to_text(const GradedIdeal& ideal);

json points_to_json(const std::vector<ProjPoint>& pts);
json support_report_to_json(const SupportReport& rep);
json generic_point_to_json(const GenericPointData& d);

/// Envelope shared by all reports.
json report(const std::string& command);

std::string read_file(const std::string& path);

}  // namespace rankvar
