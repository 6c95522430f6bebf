#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "padicres/poly.hpp"

namespace padicres {

// Highest degree first: "X^5 + (27 + O(2^5))*X^4 + ... + (25 + O(2^5))".
std::string to_string(const BallPoly& p);
std::string to_string(const FlatPoly& p);
std::string to_string(const ExactPoly& p);
std::string to_string(const FloatPoly& p);

// Parses the same format.  Missing monomials become exact zeros; bare
// numbers are exact.
BallPoly parse_ball_poly(const Ring& ring, std::string_view text);
ExactPoly parse_exact_poly(std::string_view text);

// "key = value" lines; '#' starts a comment.
struct Fixture {
  unsigned long p = 2;
  std::map<std::string, std::string> entries;

  const std::string& at(const std::string& key) const;
  BallPoly ball_poly(const std::string& key) const;
};

Fixture parse_fixture(std::istream& in);
Fixture load_fixture(const std::string& path);

}  // namespace padicres
