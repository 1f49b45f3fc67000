#include "linecong/fixtures.hpp"

#include <map>
#include <stdexcept>

#include "linecong/parser.hpp"

namespace linecong {

namespace {

std::string example41_source() {
  const std::string rho =
      "(54*u1^4*u2^4 + 9*u1^2*u2^5 + 4*u2^6 + 54*u1^2*u2^2 + 12*u2^3 + 9)";
  const std::string scale = "(" + rho + "*sqrt(" + rho + ")*sqrt(sqrt(" + rho + ")))";
  const std::string xi1 =
      "(216*u1^6*u2^4 - 189*u1^4*u2^5 + 66*u1^2*u2^6 + 16*u2^7 + 324*u1^4*u2^2\n"
      "      + 9*u1^2*u2^3 + 48*u2^4 + 108*u1^2 + 36*u2)";
  const std::string xi2 =
      "((216*u1^4*u2^4 + 87*u1^2*u2^5 - 16*u2^6 + 252*u1^2*u2^2 + 24*u2^3 + 72)*u2^2)";
  const std::string xi3 =
      "(145800*u1^8*u2^8 + 35721*u1^6*u2^9 + 25326*u1^4*u2^10 + 4896*u1^2*u2^11 + 6480\n"
      "      + 277020*u1^6*u2^6 + 896*u2^12 + 114129*u1^4*u2^7 + 39204*u1^2*u2^8 + 5088*u2^9\n"
      "      + 179820*u1^4*u2^4 + 88938*u1^2*u2^5 + 12096*u2^6 + 48600*u1^2*u2^2 + 14040*u2^3)";
  return "# frontal with an equiaffine transversal field (ingestion only)\n"
         "name = \"example41\"\n"
         "domain = u1 in (-1/10, 1/10), u2 in (-4, 4)\n"
         "x = (u1, u2^2, (4/15)*u1*u2^5 + (1/2)*u1^3*u2^4 + u1*u2^2)\n"
         "xi = ((-3*sqrt(3)/8)*" + xi1 + "/" + scale + ",\n"
         "      (9*sqrt(3)/8)*" + xi2 + "/" + scale + ",\n"
         "      (sqrt(3)/240)*" + xi3 + "/" + scale + ")\n"
         "unitize_xi = false\n";
}

const std::map<std::string, std::string, std::less<>>& sources() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"example41", example41_source()},
      {"parabolic",
       "# normal congruence of the graph u1^2*u2 + u2^2\n"
       "name = \"parabolic\"\n"
       "domain = u1 in (-1, 1), u2 in (-1, 1)\n"
       "x = (u1, u2, u1^2*u2 + u2^2)\n"
       "omega = ((1, 0, 2*u1*u2), (0, 1, u1^2 + 2*u2))\n"
       "xi = normal(omega)\n"},
      {"example43",
       "# proper frontal with singular set u2 = 0\n"
       "name = \"example43\"\n"
       "domain = u1 in (-1, 1), u2 in (-1, 1)\n"
       "x = (u1, (2/5)*u2^5 + u2^2, u1*u2^2)\n"
       "omega = ((1, 0, u2^2), (0, u2^3 + 1, u1))\n"
       "xi = normal(omega)\n"},
      {"sphere",
       "# unit sphere with its outward normal, orthonormal frame\n"
       "name = \"sphere\"\n"
       "domain = u1 in (-1, 1), u2 in (-1, 1)\n"
       "x = (cos(u1)*cos(u2), sin(u1)*cos(u2), sin(u2))\n"
       "omega = ((-sin(u1), cos(u1), 0), (-cos(u1)*sin(u2), -sin(u1)*sin(u2), cos(u2)))\n"
       "xi = normal(omega)\n"},
      {"skew",
       "# plane with a twisted direction field, not normal\n"
       "name = \"skew\"\n"
       "domain = u1 in (-1, 1), u2 in (-1, 1)\n"
       "x = (u1, u2, 0)\n"
       "omega = ((1, 0, u2), (0, 1, -u1))\n"
       "xi = normal(omega)\n"},
      {"helicoid",
       "# lines through the u3 axis\n"
       "name = \"helicoid\"\n"
       "domain = u1 in (-1, 1), u2 in (-1, 1)\n"
       "x = (0, 0, u1)\n"
       "omega = ((-sin(u1), cos(u1), 0), (-cos(u1)*sin(u2), -sin(u1)*sin(u2), cos(u2)))\n"
       "xi = normal(omega)\n"},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"example41", "parabolic", "example43",
                                                 "sphere",    "skew",      "helicoid"};
  return names;
}

bool is_fixture(std::string_view name) { return sources().find(name) != sources().end(); }

const std::string& fixture_source(std::string_view name) {
  auto it = sources().find(name);
  if (it == sources().end()) throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
  return it->second;
}

CongruenceScene fixture(std::string_view name) { return parse_scene(fixture_source(name)); }

}  // namespace linecong
