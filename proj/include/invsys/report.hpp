#pragma once

#include <string>
#include <vector>

#include "invsys/binomial.hpp"
#include "invsys/lefschetz.hpp"
#include "json.hpp"

namespace invsys {

// Keys keep insertion order so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Names for the polynomial ring R acting on S: lowercase copies of the dual
// names unless that would merge two of them.
std::vector<std::string> ring_names(const std::vector<std::string>& dual_names);

Json to_json(const Scalar& s);
Json to_json(const ExponentVector& e);
// [[coefficient, [exponents]], ...] in decreasing lex order.
Json to_json(const Polynomial& p);
Json to_json(const HilbertData& h);

Json to_json(const BinomialNormalForm& nf, const std::vector<std::string>& dual_names);
Json to_json(const ClassificationReport& report, const std::vector<std::string>& dual_names);
Json to_json(const CrossValidation& cv, const std::vector<std::string>& dual_names);
// `ring` names the variables of R (the ones ell is written in).
Json to_json(const LefschetzReport& report, const std::vector<std::string>& ring);

Json make_report(const std::string& command, Json input, Json result);

}  // namespace invsys
