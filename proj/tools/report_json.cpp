#include "report_json.hpp"

#include <cmath>

namespace fcomp::cli {

namespace {

double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

std::chrono::nanoseconds from_ms(double ms) {
	return std::chrono::nanoseconds(static_cast<std::int64_t>(std::llround(ms * 1e6)));
}

Outcome outcome_from(const std::string& s) {
	if (s == "complete") {
		return Outcome::complete;
	}
	if (s == "non_complete") {
		return Outcome::non_complete;
	}
	if (s == "resource_limit") {
		return Outcome::resource_limit;
	}
	throw Error("unknown outcome '" + s + "'");
}

} // namespace

json verdict_to_json(const CompletenessVerdict& v) {
	json j;
	j["outcome"] = std::string(to_string(v.outcome));
	j["complete"] = v.complete();
	j["uwl"] = v.uwl ? json(*v.uwl) : json(nullptr);
	j["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
	j["explored_states"] = v.explored_states;
	j["elapsed_ms"] = to_ms(v.elapsed);
	if (v.outcome == Outcome::resource_limit) {
		j["limit_reason"] = v.limit_reason;
	}
	return j;
}

CompletenessVerdict verdict_from_json(const json& j) {
	CompletenessVerdict v;
	v.outcome = outcome_from(j.at("outcome").get<std::string>());
	if (!j.at("uwl").is_null()) {
		v.uwl = j.at("uwl").get<std::size_t>();
	}
	if (!j.at("witness").is_null()) {
		v.witness = Word(j.at("witness").get<std::string>());
	}
	v.explored_states = j.at("explored_states").get<std::uint64_t>();
	v.elapsed = from_ms(j.at("elapsed_ms").get<double>());
	v.limit_reason = j.value("limit_reason", std::string());
	return v;
}

json minimal_words_to_json(const MinimalWords& m) {
	json j;
	j["outcome"] = std::string(to_string(m.outcome));
	j["uwl"] = m.uwl ? json(*m.uwl) : json(nullptr);
	std::vector<std::string> words;
	for (const auto& w : m.words) {
		words.push_back(w.str());
	}
	j["words"] = words;
	j["count"] = m.words.size();
	j["truncated"] = m.truncated;
	j["explored_states"] = m.explored_states;
	if (m.outcome == Outcome::resource_limit) {
		j["limit_reason"] = m.limit_reason;
	}
	return j;
}

MinimalWords minimal_words_from_json(const json& j) {
	MinimalWords m;
	m.outcome = outcome_from(j.at("outcome").get<std::string>());
	if (!j.at("uwl").is_null()) {
		m.uwl = j.at("uwl").get<std::size_t>();
	}
	for (const auto& w : j.at("words")) {
		m.words.emplace_back(w.get<std::string>());
	}
	m.truncated = j.at("truncated").get<bool>();
	m.explored_states = j.at("explored_states").get<std::uint64_t>();
	m.limit_reason = j.value("limit_reason", std::string());
	return m;
}

json forbidden_to_json(const ForbiddenReport& r) {
	json j;
	j["word"] = r.word.str();
	j["k"] = r.k;
	j["positions"] = std::vector<std::size_t>(r.positions.begin(), r.positions.end());
	json occs = json::array();
	for (const auto& o : r.occurrences) {
		json oj;
		oj["which"] = std::string(to_string(o.which));
		oj["start"] = o.start;
		oj["local"] = std::vector<std::size_t>(o.local_forbidden.begin(), o.local_forbidden.end());
		oj["blocks"] = blocks(o.local_forbidden, r.k);
		occs.push_back(std::move(oj));
	}
	j["occurrences"] = std::move(occs);
	return j;
}

ForbiddenReport forbidden_from_json(const json& j) {
	ForbiddenReport r;
	r.word = Word(j.at("word").get<std::string>());
	r.k = j.at("k").get<std::size_t>();
	for (auto p : j.at("positions")) {
		r.positions.insert(p.get<std::size_t>());
	}
	for (const auto& oj : j.at("occurrences")) {
		Occurrence o{oj.at("which").get<std::string>() == "u" ? OccurrenceKind::u : OccurrenceKind::v,
		             oj.at("start").get<std::size_t>(),
		             {}};
		for (auto p : oj.at("local")) {
			o.local_forbidden.insert(p.get<std::size_t>());
		}
		r.occurrences.push_back(std::move(o));
	}
	return r;
}

json set_to_json(const std::string& name, const WordSet& set) {
	json j;
	j["name"] = name;
	j["alphabet"] = std::string(set.alphabet().letters());
	std::vector<std::string> words;
	for (const auto& w : set) {
		words.push_back(w.str());
	}
	j["words"] = words;
	j["m"] = set.size();
	j["total_length"] = set.total_length();
	j["k"] = set.max_length();
	return j;
}

WordSet set_from_json(const json& j) {
	std::vector<Word> words;
	for (const auto& w : j.at("words")) {
		words.emplace_back(w.get<std::string>());
	}
	return WordSet(Alphabet(j.at("alphabet").get<std::string>()), std::move(words));
}

json search_to_json(const SearchReport& r) {
	json j;
	j["universe"] = r.universe;
	j["filters"] = r.filters;
	j["maximal_sets"] = r.maximal_sets;
	j["sets_examined"] = r.sets_examined;
	j["elapsed_ms"] = to_ms(r.elapsed);
	j["top_uwl"] = r.classes.empty() ? json(nullptr) : json(r.classes.front().uwl);
	json classes = json::array();
	for (const auto& c : r.classes) {
		json cj;
		cj["canonical"] = set_to_json("", c.canonical)["words"];
		cj["orbit_size"] = c.orbit_size;
		cj["uwl"] = c.uwl;
		cj["witness"] = c.witness.str();
		classes.push_back(std::move(cj));
	}
	j["classes"] = std::move(classes);
	return j;
}

SearchReport search_from_json(const json& j) {
	SearchReport r;
	r.universe = j.at("universe").get<std::string>();
	r.filters = j.at("filters").get<std::string>();
	r.maximal_sets = j.at("maximal_sets").get<std::size_t>();
	r.sets_examined = j.at("sets_examined").get<std::uint64_t>();
	r.elapsed = from_ms(j.at("elapsed_ms").get<double>());
	for (const auto& cj : j.at("classes")) {
		SearchClass c;
		std::vector<Word> words;
		for (const auto& w : cj.at("canonical")) {
			words.emplace_back(w.get<std::string>());
		}
		c.canonical = WordSet(Alphabet::binary(), std::move(words));
		c.orbit_size = cj.at("orbit_size").get<std::size_t>();
		c.uwl = cj.at("uwl").get<std::size_t>();
		c.witness = Word(cj.at("witness").get<std::string>());
		r.classes.push_back(std::move(c));
	}
	return r;
}

} // namespace fcomp::cli
