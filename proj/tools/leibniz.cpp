// leibniz: verify, analyze and generate Leibniz algebras, and run the theorem suite.
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
// 3 analysis not available for the given field.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "leibniz/generate.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"
#include "leibniz/suite.hpp"

using namespace leibniz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_gated = 3;

struct Globals
{
	bool json = false;
	std::uint64_t budget = default_budget;
	std::uint64_t seed = 42;
};

int exit_code_for(ErrorCode code)
{
	switch (code) {
	case ErrorCode::ParseError:
	case ErrorCode::ShapeMismatch:
	case ErrorCode::InvalidField:
	case ErrorCode::AmbientMismatch:
	case ErrorCode::MixedFields:
	case ErrorCode::NotClosed:
	case ErrorCode::DivisionByZero:
	case ErrorCode::NotLeibniz:
		return exit_usage;
	case ErrorCode::InfiniteField:
	case ErrorCode::FieldTooSmall:
	case ErrorCode::BudgetExceeded:
		return exit_gated;
	default:
		return exit_negative;
	}
}

Field parse_field(const std::string& text)
{
	if (text == "Q")
		return Field::rationals();
	std::string digits = text;
	if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f'))
		digits.erase(0, 1);
	if (!digits.empty() && digits[0] == '_')
		digits.erase(0, 1);
	try {
		std::size_t used = 0;
		const unsigned long long p = std::stoull(digits, &used);
		if (used == digits.size())
			return Field::prime(p);
	} catch (const std::logic_error&) {
	}
	throw Error(ErrorCode::ParseError, "field \"" + text + "\" must be Q, Fp or p, e.g. F5");
}

std::string field_tag(const Field& f)
{
	return f.is_finite() ? "F" + std::to_string(f.characteristic()) : "Q";
}

int cmd_verify(const Globals& g, const std::string& file)
{
	const Algebra a = load_algebra(file);
	const Json report = verify_report(a);
	const bool holds = report["holds"].get<bool>();
	if (g.json) {
		Json j{{"file", std::filesystem::path(file).filename().string()}, {"dim", a.dim()}, {"field", a.field().name()}};
		j.update(report);
		std::cout << dump_json(j);
	} else if (holds) {
		std::cout << "pass: Leibniz identity holds (dim " << a.dim() << " over " << a.field().name() << ")\n";
	} else {
		const LeibnizFailure f = *verify_leibniz(a).failure;
		std::cout << "fail: a(bc) != (ab)c + b(ac) at basis triple (" << f.i + 1 << "," << f.j + 1 << "," << f.k + 1
		          << ")\n  a(bc)         = " << describe(a, f.lhs) << "\n  (ab)c + b(ac) = " << describe(a, f.rhs) << '\n';
	}
	return holds ? exit_ok : exit_negative;
}

int cmd_analyze(const Globals& g, const std::string& file, AnalyzeOptions options)
{
	const Algebra a = load_algebra(file);
	options.budget = g.budget;
	const Json report = analyze(a, options);
	std::cout << (g.json ? dump_json(report) : analyze_text(a, report));
	return report["leibniz"]["holds"].get<bool>() ? exit_ok : exit_negative;
}

int cmd_theorems(const Globals& g, const std::string& dir, const std::vector<std::string>& filters, std::size_t samples)
{
	SuiteOptions options;
	options.budget = g.budget;
	options.seed = g.seed;
	options.samples = samples;
	for (const auto& f : filters) {
		auto name = resolve_theorem(f);
		if (!name) {
			std::cerr << "unknown theorem \"" << f << "\"; known:";
			for (const auto& t : theorem_catalogue())
				std::cerr << ' ' << t.name;
			std::cerr << '\n';
			return exit_usage;
		}
		options.filter.push_back(*name);
	}
	const std::vector<CorpusEntry> corpus = dir.empty() ? default_corpus() : load_corpus(dir, g.budget);
	const SuiteReport report = run_theorem_suite(corpus, options);
	std::cout << (g.json ? dump_json(report.to_json()) : report.to_text());
	return report.all_passed() ? exit_ok : exit_negative;
}

struct GenerateParams
{
	std::string kind;
	std::string field = "Q";
	std::size_t dim = 3;
	std::string rep = "identity";
	std::string lambda = "1";
	std::string d = "-1";
	std::string mode = "szero";
	std::string out;
};

int cmd_generate(const Globals& g, const GenerateParams& p)
{
	std::vector<CorpusEntry> entries;
	const Field f = parse_field(p.field);
	const std::string t = field_tag(f);
	if (p.kind == "paper-example") {
		entries.push_back({"barnes_example", paper_example(f), "paper-example", {"field=" + f.name()}, std::nullopt, {}});
	} else if (p.kind == "cyclic") {
		entries.push_back({"cyclic-" + std::to_string(p.dim) + "-" + t, cyclic_algebra(p.dim, f), "cyclic",
		                   {"field=" + f.name(), "k=" + std::to_string(p.dim)}, std::nullopt, {true, true, std::nullopt, std::nullopt}});
	} else if (p.kind == "random-nilpotent") {
		entries.push_back({"random-nilpotent-" + std::to_string(p.dim) + "-" + t + "-s" + std::to_string(g.seed),
		                   random_nilpotent(p.dim, f, g.seed), "random-nilpotent",
		                   {"field=" + f.name(), "dim=" + std::to_string(p.dim)}, g.seed, {true, true, std::nullopt, std::nullopt}});
	} else if (p.kind == "split") {
		RightAction mode;
		if (p.mode == "szero")
			mode = RightAction::Zero;
		else if (p.mode == "sminust")
			mode = RightAction::MinusLeft;
		else
			throw Error(ErrorCode::ParseError, "--mode must be szero or sminust");
		Matrix t_h(f, 0, 0);
		if (p.rep == "identity") {
			t_h = Matrix::identity(f, p.dim).scaled(f.parse(p.lambda));
		} else if (p.rep == "jordan") {
			t_h = Matrix(f, p.dim, p.dim);
			for (std::size_t i = 0; i + 1 < p.dim; ++i)
				t_h(i + 1, i) = f.one();
		} else if (p.rep == "companion") {
			t_h = Matrix(f, 2, 2);
			t_h(0, 1) = f.parse(p.d);
			t_h(1, 0) = f.one();
		} else {
			throw Error(ErrorCode::ParseError, "--rep must be identity, jordan or companion");
		}
		entries.push_back({"split-" + p.rep + "-" + p.mode + "-" + t,
		                   split_extension(Algebra(f, 1, std::vector<std::string>{"h"}), {t_h}, mode), "split",
		                   {"field=" + f.name(), "rep=" + p.rep, "s=" + p.mode}, std::nullopt,
		                   {std::nullopt, true, mode == RightAction::MinusLeft, std::nullopt}});
	} else if (p.kind == "corpus") {
		entries = default_corpus();
	} else {
		throw Error(ErrorCode::ParseError, "unknown kind \"" + p.kind + "\"");
	}
	for (const auto& e : entries)
		if (auto problem = verify_entry(e, g.budget))
			throw Error(ErrorCode::NotLeibniz, e.name + ": " + *problem);
	if (p.out.empty()) {
		if (entries.size() != 1)
			throw Error(ErrorCode::ParseError, "kind \"corpus\" needs --out DIR");
		std::cout << dump_json(algebra_to_json(entries.front().algebra));
		return exit_ok;
	}
	write_corpus(p.out, entries);
	if (!g.json)
		for (const auto& e : entries)
			std::cout << (std::filesystem::path(p.out) / (e.name + ".json")).string() << '\n';
	return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact computation with finite-dimensional left Leibniz algebras"};
	app.require_subcommand(1);
	Globals g;
	app.add_flag("--json", g.json, "machine-readable output");
	app.add_option("--budget", g.budget, "enumeration budget")->capture_default_str();
	app.add_option("--seed", g.seed, "random seed")->capture_default_str();

	std::string file;
	auto* verify = app.add_subcommand("verify", "check the Leibniz identity on every basis triple");
	verify->add_option("file", file, "algebra JSON file")->required();

	AnalyzeOptions aopt;
	std::string normalizer, engel;
	auto* analyze_cmd = app.add_subcommand("analyze", "compute structural information");
	analyze_cmd->add_option("file", file, "algebra JSON file")->required();
	analyze_cmd->add_flag("--series", aopt.series, "lower central and derived series");
	analyze_cmd->add_flag("--centres", aopt.centres, "left centre and centre");
	analyze_cmd->add_option("--normalizer", normalizer, "normalizers of a subalgebra: elements separated by ';'");
	analyze_cmd->add_option("--engel", engel, "Engel subalgebra of an element: comma scalars or a label");
	analyze_cmd->add_flag("--cartan", aopt.cartan, "Cartan subalgebra by minimal Engel descent");
	analyze_cmd->add_flag("--socle", aopt.socle, "minimal ideals and socle (prime fields)");
	analyze_cmd->add_flag("--frattini", aopt.frattini, "maximal subalgebras and Frattini subalgebra (prime fields)");
	analyze_cmd->add_flag("--primitive", aopt.primitive, "primitivity, complement and conjugacy (prime fields)");

	std::string dir;
	std::vector<std::string> filters;
	std::size_t samples = 6;
	auto* theorems = app.add_subcommand("theorems", "run the theorem suite on a corpus (built-in when DIR is omitted)");
	theorems->add_option("dir", dir, "corpus directory");
	theorems->add_option("--filter", filters, "theorem names, comma separated")->delimiter(',');
	theorems->add_option("--samples", samples, "random elements per algebra")->capture_default_str();

	GenerateParams gp;
	auto* generate = app.add_subcommand("generate", "write verified algebras");
	generate->add_option("kind", gp.kind, "split, cyclic, random-nilpotent, paper-example or corpus")->required();
	generate->add_option("--field", gp.field, "Q or Fp, e.g. F5")->capture_default_str();
	generate->add_option("--dim", gp.dim, "dimension (module dimension for split)")->capture_default_str();
	generate->add_option("--rep", gp.rep, "split: identity, jordan or companion")->capture_default_str();
	generate->add_option("--lambda", gp.lambda, "split identity: scalar")->capture_default_str();
	generate->add_option("--d", gp.d, "split companion: x^2 - d")->capture_default_str();
	generate->add_option("--mode", gp.mode, "split: szero or sminust")->capture_default_str();
	generate->add_option("--out", gp.out, "output directory; stdout when omitted");

	for (auto* sub : {verify, analyze_cmd, theorems, generate})
		sub->fallthrough();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_usage;
	}

	try {
		if (*verify)
			return cmd_verify(g, file);
		if (*analyze_cmd) {
			if (!normalizer.empty())
				aopt.normalizer = normalizer;
			if (!engel.empty())
				aopt.engel = engel;
			return cmd_analyze(g, file, aopt);
		}
		if (*theorems)
			return cmd_theorems(g, dir, filters, samples);
		if (*generate)
			return cmd_generate(g, gp);
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_code_for(e.code());
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_negative;
	}
	return exit_usage;
}
