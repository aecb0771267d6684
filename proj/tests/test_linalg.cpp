#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "leibniz/linalg.hpp"

using namespace leibniz;
using testing::mat;
using testing::span;
using testing::vec;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, Catch::SimplePcg32& rng, long spread = 3)
{
	Matrix m(f, n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			m(r, c) = f.from_int(static_cast<long>(rng() % (2 * spread + 1)) - spread);
	return m;
}

} // namespace

TEST_CASE("rref")
{
	const Field q = Field::rationals();
	const auto id = rref(Matrix::identity(q, 3));
	CHECK(id.rank == 3);
	CHECK(id.reduced == Matrix::identity(q, 3));

	const auto zero = rref(Matrix(q, 3, 3));
	CHECK(zero.rank == 0);
	CHECK(zero.reduced.rows() == 0);

	const auto dep = rref(mat(q, {{1, 2}, {2, 4}}));
	CHECK(dep.rank == 1);
	CHECK(dep.reduced == mat(q, {{1, 2}}));
	CHECK(dep.pivots == std::vector<std::size_t>{0});

	Catch::SimplePcg32 rng(11);
	for (int t = 0; t < 50; ++t) {
		const Matrix m = random_matrix(q, 4, rng, 1);
		const auto once = rref(m);
		REQUIRE(rref(once.reduced).reduced == once.reduced);
	}
}

TEST_CASE("kernel and image")
{
	const Field q = Field::rationals();
	CHECK(kernel(Matrix::identity(q, 3)).is_zero());
	CHECK(kernel(Matrix(Field::prime(5), 3, 3)).is_full());
	CHECK(image(mat(q, {{0, 1}, {0, 0}})) == span(q, 2, {{1, 0}}));

	Catch::SimplePcg32 rng(3);
	for (const Field f : {Field::rationals(), Field::prime(2), Field::prime(3)})
		for (int t = 0; t < 40; ++t) {
			const Matrix m = random_matrix(f, 4, rng, 1);
			const Subspace k = kernel(m);
			REQUIRE(k.dim() + rref(m).rank == 4);
			for (const auto& v : k.basis_vectors())
				REQUIRE(is_zero(m * v));
			for (std::size_t c = 0; c < 4; ++c)
				REQUIRE(image(m).contains(m.column(c)));
		}
}

TEST_CASE("generalized nullspace and Fitting splitting")
{
	const Field q = Field::rationals();
	const Matrix jordan = mat(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
	CHECK(generalized_nullspace(jordan).is_full());
	CHECK(generalized_nullspace(mat(q, {{2, 1}, {0, 3}})).is_zero());

	// L_n of the four-dimensional example on u, n, k, n^2: columns n u = -u + k, n n = n^2, n k = -k, n n^2 = 0
	const Matrix ln = Matrix::from_columns(q, 4, {vec(q, {-1, 0, 1, 0}), vec(q, {0, 0, 0, 1}), vec(q, {0, 0, -1, 0}),
	                                              vec(q, {0, 0, 0, 0})});
	CHECK(generalized_nullspace(ln) == span(q, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));
	CHECK(fitting_image(ln) == span(q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));

	Catch::SimplePcg32 rng(5);
	for (const Field f : {Field::rationals(), Field::prime(3), Field::prime(7)})
		for (int t = 0; t < 40; ++t) {
			const Matrix m = random_matrix(f, 4, rng, 1);
			const Subspace e = generalized_nullspace(m), im = fitting_image(m);
			REQUIRE(e.dim() + im.dim() == 4);
			REQUIRE(e.intersect(im).is_zero());
			REQUIRE((e + im).is_full());
		}
}

TEST_CASE("subspace lattice")
{
	const Field f3 = Field::prime(3);
	const Subspace u = span(f3, 2, {{1, 0}});
	const Subspace zero = Subspace::zero(f3, 2);
	CHECK(u + zero == u);
	CHECK(u.intersect(u) == u);
	CHECK((u + span(f3, 2, {{0, 1}})).is_full());
	CHECK(u.intersect(span(f3, 2, {{1, 1}})).is_zero());
	CHECK(span(f3, 2, {{2, 0}}) == u);
	CHECK(u.contains(vec(f3, {2, 0})));
	CHECK_FALSE(u.contains(vec(f3, {1, 1})));

	try {
		(void)(u + Subspace::zero(f3, 3));
		FAIL("expected AmbientMismatch");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::AmbientMismatch);
	}

	const Field q = Field::rationals();
	const Subspace a = span(q, 4, {{1, 2, 0, 0}, {0, 1, 1, 0}});
	const Subspace b = span(q, 4, {{1, 0, -2, 0}, {0, 0, 0, 1}});
	CHECK(a.dim() + b.dim() == (a + b).dim() + a.intersect(b).dim());
	CHECK(a.intersect(b) == span(q, 4, {{1, 0, -2, 0}}));
	const Vector x = vec(q, {2, 5, 1, 0});
	REQUIRE(a.contains(x));
	CHECK(a.lift(a.coordinates(x)) == x);
	CHECK((a + a.complement()).is_full());
	CHECK(a.intersect(a.complement()).is_zero());
}

TEST_CASE("subspace enumeration")
{
	auto count = [](Field f, std::size_t n, std::optional<std::size_t> d) {
		SubspaceEnumerator it(f, n, d);
		std::set<Subspace> seen;
		std::size_t total = 0;
		while (auto s = it.next()) {
			++total;
			seen.insert(*s);
			if (d)
				REQUIRE(s->dim() == *d);
		}
		REQUIRE(seen.size() == total);
		return total;
	};
	CHECK(count(Field::prime(2), 2, std::nullopt) == 5);
	CHECK(count(Field::prime(3), 2, 1) == 4);
	CHECK(count(Field::prime(2), 3, std::nullopt) == 16);
	CHECK(count(Field::prime(5), 3, std::nullopt) == 2 + 2 * 31);
	CHECK(count(Field::prime(3), 4, std::nullopt) == subspace_count(4, 3));
	CHECK(gaussian_binomial(4, 2, 3) == 130);

	try {
		SubspaceEnumerator big(Field::prime(7), 6, std::nullopt, 1000);
		FAIL("expected BudgetExceeded");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::BudgetExceeded);
	}
	try {
		SubspaceEnumerator rational(Field::rationals(), 2);
		FAIL("expected InfiniteField");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::InfiniteField);
	}
}

TEST_CASE("vector and point enumeration")
{
	std::size_t vectors = 0, points = 0;
	for_each_vector(Field::prime(3), 3, default_budget, [&](const Vector&) { ++vectors; });
	for_each_projective_point(Field::prime(3), 3, default_budget, [&](const Vector& v) {
		++points;
		std::size_t lead = 0;
		while (v[lead].is_zero())
			++lead;
		REQUIRE(v[lead].is_one());
	});
	CHECK(vectors == 27);
	CHECK(points == 13);
}

TEST_CASE("solve")
{
	const Field q = Field::rationals();
	const Matrix m = mat(q, {{1, 1}, {1, -1}, {2, 0}});
	const auto x = solve(m, vec(q, {3, 1, 4}));
	REQUIRE(x);
	CHECK(m * *x == vec(q, {3, 1, 4}));
	CHECK_FALSE(solve(m, vec(q, {3, 1, 5})));
}
