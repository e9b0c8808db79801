#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "closedgeo/bott.hpp"
#include "closedgeo/homology.hpp"
#include "closedgeo/morse.hpp"
#include "closedgeo/profile.hpp"
#include "closedgeo/verifier.hpp"

namespace closedgeo::io {

/// Parses a profile document such as
///   { "n": 4, "I": [3,2,1,2], "t": ["10/97","13/97","31/97"], "N": [1,1,1] }
/// with an optional "S": [[S+, S-], ...]. Throws InvalidProfile naming the
/// first problem: malformed JSON, a missing or mistyped field, a malformed
/// rational, or the first violated structural invariant.
IndexProfile parse_profile(std::string_view document);

nlohmann::json profile_to_json(const IndexProfile& p);
nlohmann::json signature_to_json(const Signature& s);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json report_to_json(const ContradictionReport& r);
nlohmann::json outcome_to_json(const PipelineOutcome& o);
nlohmann::json morse_to_json(const MorseReport& r);
nlohmann::json prop33_to_json(const Prop33Report& r);

/// { "n", "horizon", "Q", "candidates", "contradicted", "by_step", "survivors" }
nlohmann::json summary_to_json(const TheoremSummary& s);

/// "m,ind" rows for m = 1 .. seq.size().
std::string index_csv(const std::vector<std::int64_t>& seq);
/// "k,b_k" rows.
std::string betti_csv(const BettiTable& t);
/// "k,w_k,b_k,q_k" rows.
std::string morse_csv(const MorseReport& r);

}  // namespace closedgeo::io
