#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "leibniz/generate.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

std::string parse_message(const std::string& text)
{
	try {
		parse_algebra(text, "t.json");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::ParseError);
		return e.what();
	}
	FAIL("parsed");
	return {};
}

fs::path scratch(const std::string& name)
{
	const fs::path dir = fs::temp_directory_path() / ("leibniz-io-" + name);
	fs::remove_all(dir);
	fs::create_directories(dir);
	return dir;
}

} // namespace

TEST_CASE("algebra JSON round trip")
{
	for (const Algebra& a : {paper_example(Q), paper_example(F5), sl2(Field::prime(7)), Algebra(Q, 0), random_nilpotent(5, Q, 4)}) {
		CHECK(algebra_from_json(algebra_to_json(a)) == a);
		CHECK(parse_algebra(dump_json(algebra_to_json(a))) == a);
	}
	CHECK(dump_json(algebra_to_json(paper_example(Q))).back() == '\n');
}

TEST_CASE("the shipped example file")
{
	const Algebra a = load_algebra(fs::path(LEIBNIZ_TEST_DATA) / ".." / ".." / "data" / "barnes_example.json");
	CHECK(a == paper_example(Q));
	CHECK(a.labels() == std::vector<std::string>{"u", "n", "k", "n^2"});
}

TEST_CASE("parse errors name the place")
{
	CHECK_THAT(parse_message("{\n  \"dim\": 2,\n  oops\n}"), Catch::Matchers::ContainsSubstring("t.json:3:"));
	CHECK_THAT(parse_message(R"({"dim": 1, "products": []})"), Catch::Matchers::ContainsSubstring("field"));
	CHECK_THAT(parse_message(R"({"field": {"kind": "Fp", "p": 6}, "dim": 1, "products": []})"),
	           Catch::Matchers::ContainsSubstring("p"));
	CHECK_THAT(parse_message(R"({"field": {"kind": "Q"}, "dim": 2, "products": [{"i": 1, "j": 1, "out": ["1"]}]})"),
	           Catch::Matchers::ContainsSubstring("products[0].out"));
	CHECK_THAT(parse_message(R"({"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 2, "j": 1, "out": ["1"]}]})"),
	           Catch::Matchers::ContainsSubstring("products[0].i"));
	parse_message(R"({"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1"]}, {"i": 1, "j": 1, "out": ["0"]}]})");
	parse_message(R"({"field": {"kind": "Q"}, "dim": 1, "products": [{"i": 1, "j": 1, "out": ["1/0"]}]})");
	parse_message(R"({"field": {"kind": "Q"}, "dim": 2, "labels": ["a"], "products": []})");

	const Algebra zero = parse_algebra(R"({"field": {"kind": "Q"}, "dim": 0, "products": []})");
	CHECK(zero.dim() == 0);
	const Algebra ints = parse_algebra(R"({"field": {"kind": "Fp", "p": 5}, "dim": 1, "products": [{"i": 1, "j": 1, "out": [7]}]})");
	CHECK(ints.product(0, 0) == testing::vec(F5, {2}));
}

TEST_CASE("bimodule JSON round trip")
{
	for (const auto& [name, b] : nil_bimodule_family()) {
		const Bimodule back = bimodule_from_json(bimodule_to_json(b));
		CHECK(back.algebra() == b.algebra());
		CHECK(back.module_dim() == b.module_dim());
		for (std::size_t i = 0; i < b.algebra().dim(); ++i) {
			CHECK(back.t_basis(i) == b.t_basis(i));
			CHECK(back.s_basis(i) == b.s_basis(i));
		}
	}
}

TEST_CASE("corpus directories")
{
	const fs::path dir = scratch("corpus");
	std::vector<CorpusEntry> entries{{"cyc", cyclic_algebra(3, F5), "cyclic", {"k=3"}, std::nullopt, {true, true, std::nullopt, std::nullopt}},
	                                 {"rnd", random_nilpotent(4, Q, 8), "random-nilpotent", {"dim=4"}, 8, {}}};
	write_corpus(dir, entries);
	CHECK(fs::exists(dir / "manifest.json"));
	const auto back = load_corpus(dir);
	REQUIRE(back.size() == 2);
	CHECK(back[0].algebra == entries[0].algebra);
	CHECK(back[1].seed == std::optional<std::uint64_t>(8));
	CHECK(back[0].flags.nilpotent == std::optional<bool>(true));

	// without a manifest every file loads in name order
	fs::remove(dir / "manifest.json");
	const auto bare = load_corpus(dir);
	REQUIRE(bare.size() == 2);
	CHECK(bare[0].name == "cyc");

	std::ofstream(dir / "zz.json") << R"({"field": {"kind": "Q"}, "dim": 2, "products": [{"i": 1, "j": 1, "out": ["0", "1"]}, {"i": 2, "j": 2, "out": ["1", "0"]}]})";
	try {
		load_corpus(dir);
		FAIL("loaded a non-Leibniz file");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::NotLeibniz);
		CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("zz"));
	}
	fs::remove_all(dir);
}
