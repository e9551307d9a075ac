#pragma once

#include <string>

#include "circim/bivariate.hpp"
#include "circim/classify.hpp"
#include "circim/intersect.hpp"
#include "circim/laurent.hpp"

namespace circim {

// All serializers emit key order and formatting deterministically; equal
// values produce byte-identical text. Rationals travel as "p/q" strings.

std::string to_json(const LaurentPolynomial& p);
/// Rejects constant and empty polynomials: inputs must have a degree.
LaurentPolynomial laurent_from_json(const std::string& text);

std::string to_json(const BivariatePolynomial& h);
BivariatePolynomial bivariate_from_json(const std::string& text);

std::string to_json(const ClassificationReport& rep);
std::string to_json(const BoundReport& rep);

}  // namespace circim
