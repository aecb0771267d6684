#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "leibniz/bimodule.hpp"
#include "leibniz/generate.hpp"

using namespace leibniz;
using testing::span;
using testing::vec;

namespace {

const Field Q = Field::rationals();

// basis order u, n, k, n^2
Element u_() { return vec(Q, {1, 0, 0, 0}); }
Element n_() { return vec(Q, {0, 1, 0, 0}); }

} // namespace

TEST_CASE("Leibniz identity verdicts")
{
	CHECK(verify_leibniz(paper_example(Q)).holds());
	CHECK(verify_leibniz(abelian_algebra(3, Q)).holds());
	CHECK(verify_leibniz(Algebra(Q, 0)).holds());

	// e1 e1 = e1: e1(e1 e1) = e1 but (e1 e1) e1 + e1 (e1 e1) = 2 e1
	const Algebra bad(Q, 1, {vec(Q, {1})});
	const auto v = verify_leibniz(bad);
	REQUIRE_FALSE(v.holds());
	CHECK(v.failure->i == 0);
	CHECK(v.failure->j == 0);
	CHECK(v.failure->k == 0);
	CHECK(v.failure->lhs == vec(Q, {1}));
	CHECK(v.failure->rhs == vec(Q, {2}));
}

TEST_CASE("multiplication operators")
{
	const Algebra a = paper_example(Q);
	CHECK(a.left_mult(a.zero_element()).is_zero());
	const Matrix ln = a.left_mult(n_());
	CHECK(ln.column(0) == vec(Q, {-1, 0, 1, 0}));
	CHECK(ln.column(1) == vec(Q, {0, 0, 0, 1}));
	CHECK(ln.column(2) == vec(Q, {0, 0, -1, 0}));
	CHECK(ln.column(3) == vec(Q, {0, 0, 0, 0}));
	CHECK(a.right_mult(n_()).column(0) == vec(Q, {1, 0, 0, 0})); // u n = u

	std::uint64_t state = 17;
	for (const Algebra& alg : {a, sl2(Q), random_nilpotent(4, Q, 3)})
		for (int t = 0; t < 20; ++t) {
			const Element x = random_element(alg, state), y = random_element(alg, state);
			const Matrix lx = alg.left_mult(x), ly = alg.left_mult(y);
			REQUIRE(alg.left_mult(alg.multiply(x, y)) == lx * ly - ly * lx);
		}
}

TEST_CASE("powers")
{
	const Algebra a = paper_example(Q);
	CHECK(a.power(n_(), 1) == n_());
	CHECK(a.power(n_(), 2) == vec(Q, {0, 0, 0, 1}));
	CHECK(is_zero(a.power(n_(), 3)));
	std::uint64_t state = 5;
	for (int t = 0; t < 30; ++t) {
		const Element x = random_element(a, state);
		REQUIRE(a.left_mult(a.power(x, 2)).is_zero());
		// (xx)x = 0 since L_{xx} = 0, while x(xx) is the cube
		REQUIRE(is_zero(a.multiply(a.multiply(x, x), x)));
	}
}

TEST_CASE("product spaces and series of the example")
{
	const Algebra a = paper_example(Q);
	const Subspace full = Subspace::full(Q, 4);
	CHECK(product_space(a, full, full) == span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
	CHECK(product_space(abelian_algebra(2, Q), Subspace::full(Q, 2), Subspace::full(Q, 2)).is_zero());
	CHECK(product_space(a, Subspace::zero(Q, 4), full).is_zero());

	const auto lcs = lower_central_series(a);
	REQUIRE(lcs.size() == 3);
	CHECK(lcs[2] == span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
	CHECK_FALSE(is_nilpotent(a));

	const auto ds = derived_series(a);
	REQUIRE(ds.size() == 4);
	CHECK(ds[2] == span(Q, 4, {{0, 0, 1, 0}}));
	CHECK(ds[3].is_zero());
	CHECK(is_soluble(a));

	const Algebra ab = abelian_algebra(2, Q);
	CHECK(lower_central_series(ab).size() == 2);
	CHECK(nilpotency_class(ab) == 1u);
	CHECK(nilpotency_class(cyclic_algebra(4, Q)) == 4u);
	CHECK_FALSE(nilpotency_class(a));
}

TEST_CASE("left centre and Lie quotient")
{
	const Algebra a = paper_example(Q);
	const Subspace z = left_centre(a);
	CHECK(z == span(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
	CHECK(is_ideal(a, z));
	CHECK(is_lie_quotient(a));
	CHECK(left_centre(sl2(Q)) == centre(sl2(Q)));
	CHECK(left_centre(heisenberg_algebra(Q)) == span(Q, 3, {{0, 0, 1}}));
	CHECK(is_lie_quotient(abelian_algebra(2, Q)));

	const Quotient qt = quotient(a, z);
	CHECK(qt.algebra.dim() == 2);
	CHECK(qt.algebra.is_lie());
}

TEST_CASE("normalizers of span{u} in the example")
{
	const Algebra a = paper_example(Q);
	const Subspace u = span(Q, 4, {{1, 0, 0, 0}});
	const Normalizers nz = normalizers(a, Subalgebra::of(a, u));
	CHECK(nz.right.contains(n_()));
	CHECK(nz.right == span(Q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
	CHECK_FALSE(nz.right.contains(a.multiply(n_(), n_())));
	CHECK_FALSE(is_closed(a, nz.right));
	CHECK(nz.left == span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
	CHECK(nz.full == nz.left.intersect(nz.right));
	CHECK(is_closed(a, nz.left));
	CHECK(is_closed(a, nz.full));

	const Normalizers whole = normalizers(a, Subalgebra::whole(a));
	CHECK(whole.full.is_full());
}

TEST_CASE("nilpotent algebras have growing normalizers")
{
	for (const Algebra& a : {cyclic_algebra(4, Q), heisenberg_algebra(Q), random_nilpotent(4, Q, 9)}) {
		std::uint64_t state = 1;
		for (int t = 0; t < 10; ++t) {
			const Element x = random_element(a, state);
			Subspace g = Subspace::span(Q, a.dim(), {x});
			for (const auto& y : {a.multiply(x, x), a.power(x, 3), a.power(x, 4)})
				g = g + Subspace::span(Q, a.dim(), {y});
			if (!is_closed(a, g) || g.is_full())
				continue;
			REQUIRE(!(normalizers(a, Subalgebra::of(a, g)).full == g));
		}
	}
}

TEST_CASE("centralizers")
{
	const Algebra a = paper_example(Q);
	CHECK(centralizer(a, Subspace::zero(Q, 4)).is_full());
	CHECK(centralizer(abelian_algebra(3, Q), Subspace::full(Q, 3)).is_full());
	CHECK(centralizer(a, span(Q, 4, {{1, 0, 0, 0}})) == span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
	const Algebra r2 = two_dim_nonabelian_lie(Q);
	CHECK(centralizer(r2, span(Q, 2, {{0, 1}})) == span(Q, 2, {{0, 1}}));
}

TEST_CASE("quotients")
{
	const Algebra a = paper_example(Q);
	const Quotient same = quotient(a, Subspace::zero(Q, 4));
	CHECK(same.algebra.table() == a.table());
	CHECK(quotient(a, Subspace::full(Q, 4)).algebra.dim() == 0);
	try {
		(void)quotient(a, span(Q, 4, {{1, 0, 0, 0}}));
		FAIL("expected NotAnIdeal");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::NotAnIdeal);
	}
	const Subspace k = span(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
	const Quotient q = quotient(a, k);
	// images of u and n: u n = u, n u = -u
	CHECK(q.project(a.multiply(u_(), n_())) == q.project(u_()));
	CHECK(q.algebra.multiply(q.project(n_()), q.project(u_())) == -q.project(u_()));
	CHECK(q.project(q.lift(q.project(n_()))) == q.project(n_()));
	CHECK(q.preimage(Subspace::zero(Q, 2)) == k);
}

TEST_CASE("restriction")
{
	const Algebra a = paper_example(Q);
	const Algebra r = restrict(a, Subalgebra::of(a, span(Q, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}})));
	REQUIRE(r.dim() == 2);
	CHECK(r.product(0, 0) == vec(Q, {0, 1}));
	CHECK(is_zero(r.product(0, 1)));
	CHECK(is_zero(r.product(1, 0)));
	CHECK(is_zero(r.product(1, 1)));
	CHECK(restrict(a, Subalgebra::whole(a)).table() == a.table());
	CHECK(restrict(a, Subalgebra::of(a, Subspace::zero(Q, 4))).dim() == 0);
	try {
		(void)Subalgebra::of(a, span(Q, 4, {{0, 1, 0, 0}}));
		FAIL("expected NotClosed");
	} catch (const Error& e) {
		CHECK(e.code() == ErrorCode::NotClosed);
	}
}

TEST_CASE("right subnormality")
{
	const Algebra a = paper_example(Q);
	const auto whole = is_right_subnormal(a, Subalgebra::whole(a));
	CHECK(whole.subnormal);
	CHECK(whole.chain.size() == 1);

	const Subspace left = left_centre(a);
	REQUIRE(is_right_ideal(a, left));
	const auto r = is_right_subnormal(a, Subalgebra::of(a, left));
	CHECK(r.subnormal);
	CHECK(r.chain.size() <= 2);

	const Subspace e = span(Q, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}});
	const auto en = is_right_subnormal(a, Subalgebra::of(a, e));
	CHECK_FALSE(en.subnormal);
	CHECK(en.chain.back().contains(e));
	CHECK(!(en.chain.back() == e));
}

TEST_CASE("operations work over prime fields")
{
	const Field f5 = Field::prime(5);
	const Algebra a = paper_example(f5);
	CHECK(verify_leibniz(a).holds());
	CHECK(left_centre(a) == span(f5, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
	CHECK(normalizers(a, Subalgebra::of(a, span(f5, 4, {{1, 0, 0, 0}}))).right.contains(vec(f5, {0, 1, 0, 0})));
}
