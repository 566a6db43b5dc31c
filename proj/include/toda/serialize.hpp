#ifndef TODA_SERIALIZE_HPP
#define TODA_SERIALIZE_HPP

// Flat-file formats.
//
// Initial data: UTF-8 text, one value per line, blank lines ignored. Discrete
// data takes "p/q" or integer literals, ultradiscrete data decimal integers.
//
// Tables serialize to JSON as
//   {"kind": K, "M": M, "domain": "trapezoid", "t_max": T,
//    "rows": [{"t": 0, "values": [...]}, ...]}
// with K one of "tau", "T", "q", "e", "Q", "E". Rationals are strings in
// canonical "p/q" form, integers are JSON numbers. Row values start at n = 0,
// except for e/E tables whose first value is e_1 (e_0 = 0 is implicit).
// A field is a JSON array [q-table, e-table].
//
// CSV holds one table: header "t,n,value", one record per cell, where n is
// the actual subscript (e/E records start at n = 1).

#include "toda/lattice.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace toda {

enum class FieldVariable { Q, E };

InitialDataDiscrete read_discrete_data(std::istream& in);
InitialDataUltra read_ultra_data(std::istream& in);
InitialDataDiscrete load_discrete_data(const std::filesystem::path& path);
InitialDataUltra load_ultra_data(const std::filesystem::path& path);

nlohmann::json to_json(const DiscreteTau& tau);
nlohmann::json to_json(const UltraTau& tau);
nlohmann::json to_json(const DiscreteField& field);
nlohmann::json to_json(const UltraField& field);

/// Inverse of to_json for tau tables; throws InputError on schema mismatch.
DiscreteTau discrete_tau_from_json(const nlohmann::json& doc);
UltraTau ultra_tau_from_json(const nlohmann::json& doc);

std::string to_csv(const DiscreteTau& tau);
std::string to_csv(const UltraTau& tau);
std::string to_csv(const DiscreteField& field, FieldVariable variable);
std::string to_csv(const UltraField& field, FieldVariable variable);

}  // namespace toda

#endif  // TODA_SERIALIZE_HPP
