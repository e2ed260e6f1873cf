#pragma once

#include <string>
#include <vector>

#include "gloves/catalog.hpp"
#include "gloves/irrep.hpp"
#include "gloves/protocol.hpp"
#include "gloves/search.hpp"
#include "gloves/twirl.hpp"
#include "json.hpp"

namespace gloves {

// Key order is insertion order, so equal inputs dump to identical bytes.
using Json = nlohmann::ordered_json;

// Doubles pass through a 12-significant-digit rounding before they enter a
// document; emitted text is then independent of how the value was produced.
double round_sig12(double value);
std::string format_g12(double value);

// {"factors":[{"kind":"orbital","l_max":N}|{"kind":"spin_half"}],
//  "exchange_groups":[[i,...]]}
Json to_json(const SpaceSpec& space);
// Strict reader: unknown fields are rejected; a missing exchange_groups
// field means no groups.
SpaceSpec space_from_json(const Json& document);

// {"space": ..., "terms":[{"label":[{"l":N,"m":M}|{"ms":1|-1},...],
//  "re":x, "im":y}]}
Json to_json(const StateVector& state);
StateVector state_from_json(const Json& document);

// {"space": ..., "entries":[{"row_label":[...], "col_label":[...],
//  "re":x, "im":y}]}
Json to_json(const LinearOperator& op);
LinearOperator operator_from_json(const Json& document);

// {"space": ..., "blocks":[{"L_times_2":N,"parity":1|-1,"copy":k}],
//  "flags":{"perfect_subspace_glove":b,"perfect_invariant_state_glove":b}}
Json blocks_document(const SpaceSpec& space);

Json to_json(const VerifyCheck& check);
Json verify_document(const std::string& entry_id,
                     const std::vector<VerifyCheck>& checks);

Json to_json(const TwirlReport& report);
Json to_json(const SearchResult& result);
Json to_json(const SimReport& report);
Json to_json(const ResourceReport& report);

// Every entry: {"entry":{"id","perfect","notes"}, "plus":[state,...],
// "minus":[state,...]} with the carrier bases in the state schema above.
Json catalog_document();

// Header "entry,config,trials,successes,frequency,stderr,seed" plus one row
// per report. The config echo is comma free by construction.
std::string sim_reports_csv(const std::vector<SimReport>& reports);

}  // namespace gloves
