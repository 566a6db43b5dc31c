#include "toda/serialize.hpp"

#include <fstream>
#include <sstream>

namespace toda {

namespace {

template <class Parse>
auto read_values(std::istream& in, Parse parse) {
  std::vector<decltype(parse(std::string_view{}))> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      values.push_back(parse(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return values;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read input file '" + path.string() + "'");
  }
  return in;
}

nlohmann::json value_to_json(const Rational& v) { return to_string(v); }

nlohmann::json value_to_json(const Integer& v) {
  if (v.fits_slong_p()) {
    return v.get_si();
  }
  return v.get_str();
}

template <class Scalar>
nlohmann::json table_header(const char* kind, std::size_t data_size, std::size_t t_max) {
  return {{"kind", kind},
          {"M", data_size},
          {"domain", "trapezoid"},
          {"t_max", t_max},
          {"rows", nlohmann::json::array()}};
}

template <class Scalar>
nlohmann::json tau_json(const TauTable<Scalar>& tau, const char* kind) {
  auto doc = table_header<Scalar>(kind, tau.data_size(), tau.t_last());
  for (std::size_t t = 0; t <= tau.t_last(); ++t) {
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t n = 0; n < tau.sites(t); ++n) {
      values.push_back(value_to_json(tau.at(t, n)));
    }
    doc["rows"].push_back({{"t", t}, {"values", std::move(values)}});
  }
  return doc;
}

template <class Scalar>
nlohmann::json field_json(const Field<Scalar>& field, const char* q_kind, const char* e_kind) {
  auto q_doc = table_header<Scalar>(q_kind, field.data_size(), field.t_max());
  auto e_doc = table_header<Scalar>(e_kind, field.data_size(), field.t_max());
  for (std::size_t t = 0; t <= field.t_max(); ++t) {
    nlohmann::json qs = nlohmann::json::array();
    for (std::size_t n = 0; n < field.q_sites(t); ++n) {
      qs.push_back(value_to_json(field.q(t, n)));
    }
    nlohmann::json es = nlohmann::json::array();
    for (std::size_t n = 1; n <= field.e_sites(t); ++n) {
      es.push_back(value_to_json(field.e(t, n)));
    }
    q_doc["rows"].push_back({{"t", t}, {"values", std::move(qs)}});
    e_doc["rows"].push_back({{"t", t}, {"values", std::move(es)}});
  }
  return nlohmann::json::array({std::move(q_doc), std::move(e_doc)});
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());
  }
  if (v.is_number_integer()) {
    return Rational(Integer(std::to_string(v.get<long long>())));
  }
  throw InputError("tau values must be \"p/q\" strings");
}

Integer integer_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return Integer(std::to_string(v.get<long long>()));
  }
  if (v.is_string()) {
    return parse_integer(v.get<std::string>());
  }
  throw InputError("T values must be integers");
}

template <class Scalar, class Convert>
TauTable<Scalar> tau_from_json(const nlohmann::json& doc, const char* kind, Convert convert) {
  try {
    if (doc.at("kind") != kind || doc.at("domain") != "trapezoid") {
      throw InputError(std::string("expected a trapezoid table of kind '") + kind + "'");
    }
    const auto data_size = doc.at("M").get<std::size_t>();
    const auto& rows = doc.at("rows");
    if (rows.empty()) {
      throw InputError("tau table has no rows");
    }
    TauTable<Scalar> tau(data_size, rows.size() - 1);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const auto& row = rows[t];
      const auto& values = row.at("values");
      if (row.at("t").get<std::size_t>() != t || values.size() != tau.sites(t)) {
        throw InputError("row " + std::to_string(t) + " does not match the trapezoid domain");
      }
      for (std::size_t n = 0; n < values.size(); ++n) {
        tau.set(t, n, convert(values[n]));
      }
    }
    return tau;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed tau table JSON: ") + e.what());
  }
}

template <class Scalar>
std::string tau_csv(const TauTable<Scalar>& tau) {
  std::ostringstream out;
  out << "t,n,value\n";
  for (std::size_t t = 0; t <= tau.t_last(); ++t) {
    for (std::size_t n = 0; n < tau.sites(t); ++n) {
      out << t << ',' << n << ',' << to_string(tau.at(t, n)) << '\n';
    }
  }
  return out.str();
}

template <class Scalar>
std::string field_csv(const Field<Scalar>& field, FieldVariable variable) {
  std::ostringstream out;
  out << "t,n,value\n";
  for (std::size_t t = 0; t <= field.t_max(); ++t) {
    if (variable == FieldVariable::Q) {
      for (std::size_t n = 0; n < field.q_sites(t); ++n) {
        out << t << ',' << n << ',' << to_string(field.q(t, n)) << '\n';
      }
    } else {
      for (std::size_t n = 1; n <= field.e_sites(t); ++n) {
        out << t << ',' << n << ',' << to_string(field.e(t, n)) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace

InitialDataDiscrete read_discrete_data(std::istream& in) {
  return InitialDataDiscrete(read_values(in, parse_rational));
}

InitialDataUltra read_ultra_data(std::istream& in) {
  return InitialDataUltra(read_values(in, parse_integer));
}

InitialDataDiscrete load_discrete_data(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_discrete_data(in);
}

InitialDataUltra load_ultra_data(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_ultra_data(in);
}

nlohmann::json to_json(const DiscreteTau& tau) { return tau_json(tau, "tau"); }
nlohmann::json to_json(const UltraTau& tau) { return tau_json(tau, "T"); }
nlohmann::json to_json(const DiscreteField& field) { return field_json(field, "q", "e"); }
nlohmann::json to_json(const UltraField& field) { return field_json(field, "Q", "E"); }

DiscreteTau discrete_tau_from_json(const nlohmann::json& doc) {
  return tau_from_json<Rational>(doc, "tau", rational_from_json);
}

UltraTau ultra_tau_from_json(const nlohmann::json& doc) {
  return tau_from_json<Integer>(doc, "T", integer_from_json);
}

std::string to_csv(const DiscreteTau& tau) { return tau_csv(tau); }
std::string to_csv(const UltraTau& tau) { return tau_csv(tau); }
std::string to_csv(const DiscreteField& field, FieldVariable variable) {
  return field_csv(field, variable);
}
std::string to_csv(const UltraField& field, FieldVariable variable) {
  return field_csv(field, variable);
}

}  // namespace toda
