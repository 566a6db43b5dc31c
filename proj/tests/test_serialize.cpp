#include "toda/hankel.hpp"
#include "toda/serialize.hpp"
#include "toda/tropical.hpp"

#include <doctest.h>

#include <sstream>

using namespace toda;

TEST_CASE("literal parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == -4);
  CHECK(parse_rational("\xe2\x88\x92" "2/3") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(parse_integer("-17") == -17);
  CHECK(parse_integer("123456789012345678901234567890") ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("1/2"), InputError);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("initial data files") {
  std::istringstream good("1/2\n\n3\r\n  \n7/3\n");
  const auto a = read_discrete_data(good);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Rational(1, 2));
  CHECK(a[2] == Rational(7, 3));

  std::istringstream negative("1\n\xe2\x88\x92" "1\n");
  CHECK_THROWS_WITH_AS(read_discrete_data(negative),
                       doctest::Contains("initial values must be positive"), InputError);
  std::istringstream malformed("1\nabc\n");
  CHECK_THROWS_WITH_AS(read_discrete_data(malformed), doctest::Contains("line 2"), InputError);
  std::istringstream empty("\n\n");
  CHECK_THROWS_AS(read_discrete_data(empty), InputError);

  std::istringstream ints("-3\n0\n12\n");
  const auto A = read_ultra_data(ints);
  CHECK(A.size() == 3);
  CHECK(A[0] == -3);
  std::istringstream fraction("1\n2/3\n");
  CHECK_THROWS_AS(read_ultra_data(fraction), InputError);
  CHECK_THROWS_AS(load_ultra_data("/nonexistent/path/data.txt"), InputError);
}

TEST_CASE("tau table JSON round trip") {
  const InitialDataDiscrete a({Rational(1, 2), Rational(3), Rational(2, 7), Rational(5)});
  const auto tau = hankel_tau_table(a, 4);
  const auto doc = to_json(tau);
  CHECK(doc["kind"] == "tau");
  CHECK(doc["M"] == 4);
  CHECK(doc["domain"] == "trapezoid");
  CHECK(doc["rows"].size() == 5);
  CHECK(doc["rows"][1]["values"][1] == "1/2");
  CHECK(discrete_tau_from_json(doc) == tau);
  CHECK(discrete_tau_from_json(nlohmann::json::parse(doc.dump())) == tau);

  const InitialDataUltra A({Integer(1), Integer(-2), Integer(3), Integer(4)});
  const auto T = shortest_tau_table(A, 3);
  const auto udoc = to_json(T);
  CHECK(udoc["kind"] == "T");
  CHECK(udoc["rows"][1]["values"][1] == 1);
  CHECK(ultra_tau_from_json(udoc) == T);

  auto broken = doc;
  broken["rows"][0]["values"].erase(0);
  CHECK_THROWS_AS(discrete_tau_from_json(broken), InputError);
  CHECK_THROWS_AS(ultra_tau_from_json(doc), InputError);
  CHECK_THROWS_AS(discrete_tau_from_json(nlohmann::json::object()), InputError);
}

TEST_CASE("field JSON and CSV") {
  const InitialDataUltra A({Integer(1), Integer(2), Integer(3), Integer(4)});
  const auto field = evolve_ultra(A, 3);
  const auto doc = to_json(field);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["kind"] == "Q");
  CHECK(doc[1]["kind"] == "E");
  CHECK(doc[0]["t_max"] == 3);
  CHECK(doc[0]["rows"][1]["values"] == nlohmann::json::array({1, 3}));
  CHECK(doc[1]["rows"][1]["values"] == nlohmann::json::array({4}));

  const std::string q_csv = to_csv(field, FieldVariable::Q);
  CHECK(q_csv.rfind("t,n,value\n", 0) == 0);
  CHECK(q_csv.find("\n1,0,1\n") != std::string::npos);
  CHECK(q_csv.find("\n1,1,3\n") != std::string::npos);
  const std::string e_csv = to_csv(field, FieldVariable::E);
  CHECK(e_csv.find("\n1,1,4\n") != std::string::npos);
  CHECK(e_csv.find("\n0,0,") == std::string::npos);

  const InitialDataDiscrete a({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  const auto d = evolve_discrete(a, 4);
  CHECK(to_json(d)[1]["rows"][1]["values"][0] == "1/2");
  CHECK(to_csv(d, FieldVariable::E).find("\n1,1,1/2\n") != std::string::npos);
  CHECK(to_csv(hankel_tau_table(a, 2)).find("\n2,1,2\n") != std::string::npos);
}
