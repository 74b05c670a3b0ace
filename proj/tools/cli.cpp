#include "cli.hpp"

#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fcomp/families.hpp"
#include "fcomp/forbidden.hpp"
#include "fcomp/prefix_automaton.hpp"
#include "fcomp/wordlist.hpp"
#include "report_json.hpp"

namespace fcomp::cli {

namespace {

double ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

WordSet load(const RunConfig& config, std::ostream& err) {
	std::optional<Alphabet> alphabet;
	if (config.alphabet) {
		alphabet = Alphabet(*config.alphabet);
	}
	auto loaded = load_set(config.input, alphabet);
	for (const auto& w : loaded.warnings) {
		err << "warning: " << w << '\n';
	}
	if (config.verbose) {
		const auto& s = loaded.set;
		err << "loaded " << s.size() << " words, ||S|| = " << s.total_length() << ", k = " << s.max_length()
		    << '\n';
	}
	return std::move(loaded.set);
}

int status_for(Outcome o) { return o == Outcome::resource_limit ? kExitResourceLimit : kExitOk; }

int run_check_or_uwl(const RunConfig& config, std::ostream& out, std::ostream& err) {
	const WordSet set = load(config, err);
	const PrefixAutomaton automaton(set);
	if (config.dump_automaton) {
		err << automaton.dump();
	}

	if (config.all_minimal) {
		const auto m = all_minimal_words(automaton, config.limits);
		if (config.format == Format::json) {
			out << minimal_words_to_json(m).dump(2) << '\n';
		} else if (m.outcome == Outcome::resource_limit) {
			out << "RESOURCE LIMIT: " << m.limit_reason << '\n';
		} else if (m.outcome == Outcome::complete) {
			out << "COMPLETE\n";
		} else {
			out << "uwl=" << *m.uwl << " count=" << m.words.size() << (m.truncated ? " (truncated)" : "") << '\n';
			for (const auto& w : m.words) {
				out << w.str() << '\n';
			}
		}
		return status_for(m.outcome);
	}

	const auto v = decide(automaton, config.limits);
	if (config.format == Format::json) {
		out << verdict_to_json(v).dump(2) << '\n';
		return status_for(v.outcome);
	}
	if (v.outcome == Outcome::resource_limit) {
		out << "RESOURCE LIMIT: " << v.limit_reason << " (explored_states=" << v.explored_states << ")\n";
		return kExitResourceLimit;
	}
	if (config.subcommand == "check") {
		out << (v.complete() ? "COMPLETE" : "NON-COMPLETE") << '\n';
		return kExitOk;
	}
	if (v.complete()) {
		out << "complete\n";
	} else {
		out << "uwl=" << *v.uwl << '\n' << "witness=" << v.witness->str() << '\n';
	}
	out << "explored_states=" << v.explored_states << '\n';
	out << "elapsed_ms=" << std::fixed << std::setprecision(3) << ms(v.elapsed) << '\n';
	return kExitOk;
}

int run_forbidden(const RunConfig& config, std::ostream& out, std::ostream& err) {
	const WordSet set = load(config, err);
	const PrefixAutomaton automaton(set);
	ForbiddenReport rep;
	rep.word = Word(config.word);
	rep.k = config.family_k.value_or(set.max_length());
	rep.positions = forbidden_positions(automaton, rep.word);
	const bool family_shape = set.alphabet() == Alphabet::binary() && rep.k >= 3;
	if (family_shape) {
		rep.occurrences = occurrences(FamilyContext(rep.k), rep.word, rep.positions);
	} else if (config.verbose) {
		err << "occurrence table skipped: needs alphabet {a, b} and k >= 3\n";
	}

	if (config.format == Format::json) {
		out << forbidden_to_json(rep).dump(2) << '\n';
		return kExitOk;
	}
	for (auto j : rep.positions) {
		out << "pos=" << j << '\n';
	}
	for (const auto& o : rep.occurrences) {
		out << "blocks=" << render_blocks(blocks(o.local_forbidden, rep.k)) << '\n';
	}
	for (const auto& o : rep.occurrences) {
		out << "occ " << to_string(o.which) << " @" << o.start << " local=" << render_set(o.local_forbidden) << '\n';
	}
	return kExitOk;
}

int run_family(const RunConfig& config, std::ostream& out, std::ostream& err) {
	const std::string& name = config.family;
	if (name == "omega") {
		OmegaSpec spec{config.k, config.fill};
		if (config.random_fill) {
			if (config.k < 4) {
				throw Error("omega needs k >= 4");
			}
			std::mt19937_64 rng(config.seed);
			spec.fill.clear();
			for (std::size_t i = 0; i < OmegaSpec::slot_count(config.k); ++i) {
				spec.fill += (rng() & 1U) ? 'b' : 'a';
			}
		}
		const Word w = omega(spec);
		if (config.format == Format::json) {
			json j;
			j["name"] = "omega";
			j["k"] = config.k;
			j["fill"] = spec.fill.empty() ? std::string(OmegaSpec::slot_count(config.k), 'a') : spec.fill;
			j["word"] = w.str();
			j["length"] = w.size();
			out << j.dump(2) << '\n';
		} else {
			out << w.str() << '\n';
		}
		return kExitOk;
	}

	WordSet set;
	if (name == "sk") {
		set = s_k(config.k);
	} else if (name == "tk") {
		set = t_k(config.k);
	} else if (name == "rk") {
		const auto expanded = r_k_expanded(config.k);
		if (config.verbose) {
			err << "R_" << config.k << ": " << expanded.raw_count << " words before deduplication, "
			    << expanded.set.size() << " after\n";
		}
		set = expanded.set;
	} else if (name == "jk") {
		set = j_k(config.k);
	} else if (name.starts_with("extreme")) {
		set = extreme_set(name);
	} else {
		throw Error("unknown family '" + name + "' (sk, tk, rk, jk, omega, extreme3a, extreme3b, extreme4)");
	}
	if (config.format == Format::json) {
		out << set_to_json(name, set).dump(2) << '\n';
	} else {
		out << render_word_list(set);
	}
	return kExitOk;
}

int run_search(const RunConfig& config, std::ostream& out, std::ostream& err) {
	const SearchReport report = exhaustive_search(config.search);
	if (config.verbose) {
		err << "examined " << report.sets_examined << " sets, " << report.maximal_sets << " maximal\n";
	}
	if (config.format == Format::json) {
		json j = search_to_json(report);
		if (!config.list_all) {
			const auto top = report.top_classes();
			j["classes"] = search_to_json(SearchReport{report.universe, report.filters, top, 0, 0, {}})["classes"];
		}
		out << j.dump(2) << '\n';
		return kExitOk;
	}
	out << "universe: " << report.universe << '\n';
	out << "filters: " << report.filters << '\n';
	out << "sets examined: " << report.sets_examined << '\n';
	out << "maximal non-complete sets: " << report.maximal_sets << '\n';
	out << "classes: " << report.classes.size() << '\n';
	out << "elapsed_ms: " << std::fixed << std::setprecision(1) << ms(report.elapsed) << '\n';
	const auto shown = config.list_all ? report.classes : report.top_classes();
	out << (config.list_all ? "ranked classes:\n" : "top classes:\n");
	out << "  uwl  orbit  set  witness\n";
	for (const auto& c : shown) {
		out << "  " << std::setw(3) << c.uwl << "  " << std::setw(5) << c.orbit_size << "  " << to_string(c.canonical)
		    << "  " << c.witness.str() << '\n';
	}
	return kExitOk;
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
	try {
		if (config.subcommand == "check" || config.subcommand == "uwl") {
			return run_check_or_uwl(config, out, err);
		}
		if (config.subcommand == "forbidden") {
			return run_forbidden(config, out, err);
		}
		if (config.subcommand == "family") {
			return run_family(config, out, err);
		}
		if (config.subcommand == "search") {
			return run_search(config, out, err);
		}
		err << "error: unknown subcommand '" << config.subcommand << "'\n";
		return kExitUsage;
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	}
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	RunConfig config;
	CLI::App app{"Completeness of finite word sets: minimal uncompletable words, forbidden positions, "
	             "extremal-set search"};
	app.name(args.empty() ? "fcomp" : args.front());
	app.require_subcommand(1);
	app.fallthrough();

	std::string format = "text";
	std::uint64_t max_states = config.limits.max_states;
	std::size_t max_length = 0;
	std::uint64_t time_budget_ms = 0;
	app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
	app.add_option("--seed", config.seed, "Seed for randomized choices");
	app.add_flag("-v,--verbose", config.verbose, "Diagnostics on stderr");

	app.add_option("--max-states", max_states, "Cap on BFS subset states");
	app.add_option("--max-length", max_length, "Give up beyond this word length (0 = no cap)");
	app.add_option("--time-budget-ms", time_budget_ms, "Wall-clock budget (0 = none)");
	app.add_option("--alphabet", config.alphabet, "Alphabet letters in order (default: ab plus letters used)");

	auto* check = app.add_subcommand("check", "Decide completeness");
	auto* uwl = app.add_subcommand("uwl", "Minimal uncompletable word and its length");
	for (auto* sub : {check, uwl}) {
		sub->add_option("file", config.input, "Word-list file")->required();
		sub->add_flag("--dump-automaton", config.dump_automaton, "Print the prefix automaton on stderr");
	}
	uwl->add_flag("--all-minimal", config.all_minimal, "List every minimal uncompletable word");
	uwl->add_option("--max-words", config.limits.max_words, "Cap for --all-minimal");

	auto* forbidden = app.add_subcommand("forbidden", "Forbidden positions of a word");
	forbidden->add_option("file", config.input, "Word-list file")->required();
	forbidden->add_option("word", config.word, "Word to analyze")->required();
	forbidden->add_option("--k", config.family_k, "Window length for the u/v occurrence table (default: max length)");

	auto* family = app.add_subcommand("family", "Generate a family set or witness word");
	family->add_option("name", config.family, "sk, tk, rk, jk, omega, extreme3a, extreme3b, extreme4")->required();
	family->add_option("--k", config.k, "Family parameter");
	family->add_option("--fill", config.fill, "Wildcard letters for omega");
	family->add_flag("--random-fill", config.random_fill, "Random omega fill drawn from --seed");

	auto* search = app.add_subcommand("search", "Maximal non-complete subsets of Σ^{<=n}");
	std::vector<std::string> filters;
	search->add_option("--max-len", config.search.max_len, "n")->required();
	search->add_option("--min-count", filters, "LENGTH:COUNT, keep sets with at least COUNT words of LENGTH");
	search->add_option("--threads", config.search.threads, "Worker threads");
	search->add_flag("--all", config.list_all, "List every class, not only the top ones");
	bool no_symmetry = false;
	search->add_flag("--no-symmetry", no_symmetry, "Do not group sets by mirror/renaming");

	std::vector<const char*> argv;
	for (const auto& a : args) {
		argv.push_back(a.c_str());
	}
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n' << "run with --help for usage\n";
		return kExitUsage;
	}

	config.subcommand = app.get_subcommands().front()->get_name();
	config.format = format == "json" ? Format::json : Format::text;
	config.limits.max_states = max_states;
	if (max_length > 0) {
		config.limits.max_length = max_length;
	}
	if (time_budget_ms > 0) {
		config.limits.time_budget = std::chrono::milliseconds(time_budget_ms);
	}
	config.search.symmetry_reduction = !no_symmetry;
	try {
		for (const auto& f : filters) {
			config.search.filters.push_back(parse_length_filter(f));
		}
	} catch (const Error& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	}
	return run(config, out, err);
}

} // namespace fcomp::cli
