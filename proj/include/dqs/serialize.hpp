#pragma once

#include "dqs/classifier.hpp"
#include "dqs/oracle.hpp"

#include <json.hpp>

#include <string>

namespace dqs {

using Json = nlohmann::json;

// canonical text form: "m1*[w1] + m2*[w2] + ...", labels in lexicographic
// order; "0" for the empty vector
std::string format_fusion_vector(const FusionVector& v);
Json fusion_vector_json(const FusionVector& v);

std::string format_torus_element(const TorusElement& t);
Json torus_element_json(const TorusElement& t);
TorusElement torus_element_from_json(const Json& j, int rank);
TorusElement parse_torus_element(const std::string& text, int rank); // "1/2,0/1"

Json label_json(const IrrepLabel& l);
IrrepLabel label_from_json(const Json& j, const GroupSpec& g);

Json character_json(const CenterData& cd, const CentralCharacter& chi);
CentralCharacter character_from_json(const Json& j, const CenterData& cd);
CentralCharacter parse_character(const std::string& text, const CenterData& cd); // "1;0,2"

Json explicit_set_json(const ExplicitSet& set);
ExplicitSet explicit_set_from_json(const Json& j);

Json datum_json(const SubgroupDatum& d);
SubgroupDatum datum_from_json(const Json& j);

Json verdict_json(const Verdict& v);
Json center_json(const CenterData& cd);
Json laurent_json(const LaurentPoly& p);
std::string format_laurent(const LaurentPoly& p);

} // namespace dqs
