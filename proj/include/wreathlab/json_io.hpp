#pragma once

#include <json.hpp>

#include "wreathlab/invariants.hpp"

namespace wreathlab {

/// Insertion-ordered JSON so emission is byte-deterministic.
using ojson = nlohmann::ordered_json;

inline constexpr const char* kCertSchema = "wreathlab-cert/1";

ojson group_summary_json(const GroupPtr& g);
ojson tower_spec_json(const TowerSpec& spec);
ojson hom_json(const Homomorphism& hom);
ojson semiabelian_json(const GroupPtr& g, const SemiabelianCertificate& cert);
ojson wl_certificate_json(const WlCertificate& cert);
ojson wl_eq_dg_json(const WlEqDgCheck& check);
ojson conductor_json(const ConductorRecord& rec);
ojson survey_row_json(const SurveyRow& row);
ojson survey_json(const std::vector<SurveyRow>& rows, std::uint64_t seed);
std::string survey_tsv(const std::vector<SurveyRow>& rows);

}  // namespace wreathlab
