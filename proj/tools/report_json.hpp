#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fcomp/forbidden.hpp"
#include "fcomp/search.hpp"
#include "fcomp/shortest_word.hpp"

namespace fcomp::cli {

using json = nlohmann::json;

json verdict_to_json(const CompletenessVerdict& v);
CompletenessVerdict verdict_from_json(const json& j);

json minimal_words_to_json(const MinimalWords& m);
MinimalWords minimal_words_from_json(const json& j);

/// Everything the forbidden subcommand prints.
struct ForbiddenReport {
	Word word;
	std::size_t k = 0;
	ForbiddenSet positions;
	std::vector<Occurrence> occurrences;

	bool operator==(const ForbiddenReport&) const = default;
};

json forbidden_to_json(const ForbiddenReport& r);
ForbiddenReport forbidden_from_json(const json& j);

json set_to_json(const std::string& name, const WordSet& set);
WordSet set_from_json(const json& j);

json search_to_json(const SearchReport& r);
SearchReport search_from_json(const json& j);

} // namespace fcomp::cli
