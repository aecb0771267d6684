#include <catch2/catch_amalgamated.hpp>

#include "leibniz/field.hpp"

using namespace leibniz;

TEST_CASE("rational arithmetic is exact and canonical")
{
	const Field q = Field::rationals();
	CHECK((q.from_fraction(1, 2) + q.from_fraction(1, 3)).to_string() == "5/6");
	CHECK(q.from_fraction(2, 4).to_string() == "1/2");
	CHECK(q.from_fraction(3, -6).to_string() == "-1/2");
	CHECK(q.parse("-4/6") == q.from_fraction(-2, 3));
	CHECK((q.from_int(7) / q.from_int(7)).is_one());
	CHECK(q.from_int(-3).inverse().to_string() == "-1/3");
}

TEST_CASE("rationals never overflow")
{
	const Field q = Field::rationals();
	Scalar x = q.from_int(3);
	for (int i = 0; i < 7; ++i)
		x = x * x;
	CHECK(x.to_string().size() == 62); // 3^128
	CHECK((x / x).is_one());
}

TEST_CASE("prime field arithmetic")
{
	const Field f7 = Field::prime(7);
	CHECK(f7.from_int(3).inverse() == f7.from_int(5));
	CHECK((f7.from_int(3) * f7.from_int(5)).is_one());
	CHECK(f7.from_int(-1).to_string() == "6");
	CHECK(Field::prime(5).parse("1/2").to_string() == "3");
	CHECK(f7.cardinality() == 7u);
	CHECK(f7.has_at_least(7));
	CHECK_FALSE(f7.has_at_least(8));
	CHECK(Field::rationals().has_at_least(1'000'000));
	CHECK_FALSE(Field::rationals().cardinality());
}

TEST_CASE("field errors")
{
	const Field q = Field::rationals();
	auto code_of = [](auto&& fn) {
		try {
			fn();
		} catch (const Error& e) {
			return e.code();
		}
		return ErrorCode::PreconditionViolated;
	};
	CHECK(code_of([&] { (void)(q.one() / q.zero()); }) == ErrorCode::DivisionByZero);
	CHECK(code_of([&] { (void)Field::prime(5).zero().inverse(); }) == ErrorCode::DivisionByZero);
	CHECK(code_of([&] { (void)(q.one() + Field::prime(5).one()); }) == ErrorCode::MixedFields);
	CHECK(code_of([&] { (void)(Field::prime(3).one() * Field::prime(5).one()); }) == ErrorCode::MixedFields);
	CHECK(code_of([] { (void)Field::prime(4); }) == ErrorCode::InvalidField);
	CHECK(code_of([] { (void)Field::prime(1); }) == ErrorCode::InvalidField);
	CHECK(code_of([&] { (void)q.parse("1/0"); }) == ErrorCode::DivisionByZero);
	CHECK(code_of([&] { (void)q.parse("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("field enumeration order")
{
	auto strings = [](const std::vector<Scalar>& xs) {
		std::vector<std::string> out;
		for (const auto& x : xs)
			out.push_back(x.to_string());
		return out;
	};
	CHECK(strings(first_elements(Field::prime(3), 10)) == std::vector<std::string>{"0", "1", "2"});
	CHECK(strings(first_elements(Field::prime(2), 10)) == std::vector<std::string>{"0", "1"});
	CHECK(strings(first_elements(Field::rationals(), 15)) ==
	      std::vector<std::string>{"0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "3/2", "-3/2", "1/3", "-1/3",
	                               "2/3", "-2/3"});

	const auto many = first_elements(Field::rationals(), 500);
	for (std::size_t i = 0; i < many.size(); ++i)
		for (std::size_t j = i + 1; j < many.size(); ++j)
			REQUIRE_FALSE(many[i] == many[j]);
}

TEST_CASE("field axioms on random triples")
{
	Catch::SimplePcg32 rng(7);
	for (const Field f : {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(101)}) {
		auto draw = [&] {
			const long num = static_cast<long>(rng() % 41) - 20;
			return f.is_finite() ? f.from_int(num) : f.from_fraction(num, 1 + static_cast<long>(rng() % 9));
		};
		for (int t = 0; t < 200; ++t) {
			const Scalar a = draw(), b = draw(), c = draw();
			REQUIRE((a + b) + c == a + (b + c));
			REQUIRE((a * b) * c == a * (b * c));
			REQUIRE(a * (b + c) == a * b + a * c);
			REQUIRE(a - a == f.zero());
			if (!a.is_zero())
				REQUIRE((a * a.inverse()).is_one());
			if (f.is_finite())
				REQUIRE(a.pow(f.characteristic()) == a);
		}
	}
}
