#pragma once

#include <string>

#include "da.hpp"
#include "market.hpp"
#include "truncation.hpp"

namespace matchlab {

// Interchange format:
// {"num_doctors": n, "num_hospitals": m,
//  "doctor_lists": [[...], ...], "hospital_lists": [[...], ...]}
// 0-based indices, lists most-preferred-first.
std::string profile_to_json(const PreferenceProfile& profile);
PreferenceProfile profile_from_json(const std::string& text);

PreferenceProfile load_profile_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Matching + per-agent ranks + unmatched lists; with_trace adds the
// proposal log as [proposer, receiver, accepted] triples.
std::string solve_result_to_json(const PreferenceProfile& profile, const DaTrace& trace,
                                 bool with_trace);

std::string truncation_result_to_json(const TruncationResult& result);

}  // namespace matchlab
