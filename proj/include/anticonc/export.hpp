#pragma once

#include "anticonc/constants.hpp"
#include "anticonc/distribution.hpp"
#include "anticonc/sequencer.hpp"
#include "anticonc/subset_sum.hpp"

#include <json.hpp>

#include <iosfwd>

namespace anticonc {

using Json = nlohmann::ordered_json;

/// {"num": "...", "den": "...", "float": ...} — exactness survives
/// serialization, the float field is convenience only.
Json rational_to_json(const Rational& r);

Json dist_to_json(const ExactDist& d);
Json dist_to_json(const FloatDist& d);

/// CSV rows "x,prob_num,prob_den,prob_float" (num/den blank in float mode).
void dist_to_csv(std::ostream& out, const ExactDist& d);
void dist_to_csv(std::ostream& out, const FloatDist& d);

/// CSV rows "ell,x,count_decimal" for all rows up to ell_max.
void table_to_csv(std::ostream& out, const SubsetSumTable& table);

Json constants_to_json(const ConstantsReport& report);

Json sequencing_to_json(const SequencingResult& result);

}  // namespace anticonc
