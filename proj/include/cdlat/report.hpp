#pragma once

#include <string>
#include <vector>

#include "cdlat/analysis.hpp"
#include "cdlat/classify.hpp"
#include "cdlat/verify.hpp"

namespace cdlat {

// All emitters are deterministic for fixed inputs, except that verification
// JSON/text contain the measured elapsed_ms field.

std::string cd_text(const Analysis& a);
std::string cd_json(const Analysis& a);

// Hasse diagram in DOT; maximal-measure members are drawn filled.
std::string lattice_dot(const Analysis& a);

std::string subgroups_text(const Analysis& a);

std::string classification_text(const ClassificationReport& r);
std::string classification_json(const ClassificationReport& r);

std::string verification_text(const VerificationReport& r);
std::string verification_json(const VerificationReport& r);

std::string search_text(const std::vector<SearchHit>& hits,
                        const std::string& corpus_desc);

}  // namespace cdlat
