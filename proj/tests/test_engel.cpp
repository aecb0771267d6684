#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "leibniz/bimodule.hpp"
#include "leibniz/engel.hpp"
#include "leibniz/generate.hpp"
#include "leibniz/structure.hpp"

using namespace leibniz;
using testing::span;
using testing::vec;

namespace {

const Field Q = Field::rationals();

ErrorCode code_of(const std::function<void()>& fn)
{
	try {
		fn();
	} catch (const Error& e) {
		return e.code();
	}
	FAIL("no error raised");
	return ErrorCode::PreconditionViolated;
}

} // namespace

TEST_CASE("Engel subalgebras")
{
	const Algebra a = paper_example(Q);
	CHECK(engel_subalgebra(a, a.zero_element()).space.is_full());
	const EngelSubalgebra en = engel_subalgebra(a, vec(Q, {0, 1, 0, 0}));
	CHECK(en.space == span(Q, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}));
	CHECK(en.fitting_image == span(Q, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
	CHECK(engel_subalgebra(abelian_algebra(3, Q), vec(Q, {1, 2, 3})).space.is_full());

	// x need not lie in E_A(x): L_k = 0, so E_A(n + k) = E_A(n) misses n + k
	const Element x = vec(Q, {0, 1, 1, 0});
	CHECK(engel_subalgebra(a, x).space == en.space);
	CHECK_FALSE(engel_subalgebra(a, x).space.contains(x));
}

TEST_CASE("Fitting decomposition and representatives on random elements")
{
	std::vector<Algebra> algebras{paper_example(Q), sl2(Q), paper_example(Field::prime(7)),
	                              split_extension(two_dim_nonabelian_lie(Q), {Matrix::identity(Q, 1), Matrix(Q, 1, 1)},
	                                              RightAction::Zero)};
	std::uint64_t state = 99;
	for (const auto& a : algebras)
		for (int t = 0; t < 25; ++t) {
			const Element x = random_element(a, state);
			const EngelSubalgebra e = engel_subalgebra(a, x);
			REQUIRE(is_closed(a, e.space));
			REQUIRE(e.space.dim() + e.fitting_image.dim() == a.dim());
			REQUIRE(e.space.intersect(e.fitting_image).is_zero());

			const Element r = engel_representative(a, x);
			REQUIRE(e.space.contains(r));
			REQUIRE(a.left_mult(r) == a.left_mult(x));
			REQUIRE(engel_subalgebra(a, r).space == e.space);
		}
	const Algebra a = paper_example(Q);
	CHECK(is_zero(engel_representative(a, a.zero_element())));
	CHECK(engel_representative(a, vec(Q, {0, 1, 0, 0})) == vec(Q, {0, 1, 0, 0}));
}

TEST_CASE("Engel subalgebras are right self-normalizing")
{
	const Algebra a = paper_example(Q);
	const Element n = vec(Q, {0, 1, 0, 0});
	const Subalgebra e = Subalgebra::of(a, engel_subalgebra(a, n).space);
	CHECK(check_right_self_normalizing(a, e, n).holds);
	CHECK(check_right_self_normalizing(a, Subalgebra::whole(a), n).holds);
	CHECK(code_of([&] { check_right_self_normalizing(a, Subalgebra::of(a, span(Q, 4, {{0, 0, 0, 1}})), n); }) ==
	      ErrorCode::PreconditionViolated);

	// every maximal subalgebra containing some E_A(x), over F_5
	const Field f5 = Field::prime(5);
	const Algebra b = paper_example(f5);
	std::size_t tested = 0;
	for (const auto& m : maximal_subalgebras(b))
		for_each_vector(f5, 4, default_budget, [&](const Vector& x) {
			if (m.contains(engel_subalgebra(b, x).space)) {
				++tested;
				REQUIRE(check_right_self_normalizing(b, Subalgebra::of(b, m), x).holds);
			}
		});
	CHECK(tested > 0);
}

TEST_CASE("Cartan detection")
{
	const Algebra a = paper_example(Q);
	CHECK(is_cartan(a, Subalgebra::of(a, span(Q, 4, {{0, 1, 0, 0}, {0, 0, 0, 1}}))));
	CHECK_FALSE(is_cartan(a, Subalgebra::of(a, span(Q, 4, {{1, 0, 0, 0}}))));
	const Algebra h = heisenberg_algebra(Q);
	CHECK(is_cartan(h, Subalgebra::whole(h)));
}

TEST_CASE("minimal Engel descent")
{
	const Algebra a = paper_example(Q);
	const CartanCertificate c = minimal_engel_search(a);
	CHECK(c.subalgebra.dim() == 2);
	CHECK(c.normalizer_equal);
	CHECK(is_cartan(a, c.subalgebra));
	REQUIRE(c.witness_element);
	CHECK(engel_subalgebra(a, *c.witness_element).space == c.subalgebra.space());

	CHECK(minimal_engel_search(abelian_algebra(3, Q)).subalgebra.space().is_full());
	CHECK(minimal_engel_search(cyclic_algebra(3, Field::prime(5))).subalgebra.space().is_full());
	CHECK(minimal_engel_search(sl2(Q)).subalgebra.dim() == 1);
	CHECK(code_of([] { minimal_engel_search(paper_example(Field::prime(3))); }) == ErrorCode::FieldTooSmall);

	// an algebra whose basis vectors all have large Engel subalgebras
	const Field f7 = Field::prime(7);
	const Algebra s = sl2(f7);
	CHECK(is_cartan(s, minimal_engel_search(s).subalgebra));
}

TEST_CASE("minimal Engel subalgebras are exactly the Cartan subalgebras over F_5")
{
	// brute-force count from an independent oracle: 5 Cartan subalgebras, all minimal Engel
	const Field f5 = Field::prime(5);
	const Algebra a = paper_example(f5);
	std::set<Subspace> engel;
	for_each_vector(f5, 4, default_budget, [&](const Vector& x) { engel.insert(engel_subalgebra(a, x).space); });
	std::set<Subspace> minimal;
	for (const auto& e : engel) {
		bool is_min = true;
		for (const auto& o : engel)
			is_min = is_min && !(o.dim() < e.dim() && e.contains(o));
		if (is_min)
			minimal.insert(e);
	}
	std::set<Subspace> cartan;
	for (const auto& s : all_subalgebras(a))
		if (is_cartan(a, Subalgebra::of(a, s)))
			cartan.insert(s);
	CHECK(cartan.size() == 5);
	CHECK(minimal == cartan);
	CHECK(cartan.contains(minimal_engel_search(a).subalgebra.space()));
}

TEST_CASE("Cartan subalgebras and their overalgebras")
{
	const Field f5 = Field::prime(5);
	const Algebra a = paper_example(f5);
	const Subspace c = minimal_engel_search(a).subalgebra.space();
	std::size_t tested = 0;
	for (const auto& u : all_subalgebras(a))
		if (u.contains(c)) {
			++tested;
			REQUIRE(normalizers(a, Subalgebra::of(a, u)).right == u);
		}
	CHECK(tested >= 2);
}

TEST_CASE("Cartan subalgebras in quotients")
{
	const Algebra a = paper_example(Q);
	const CartanCertificate c = minimal_engel_search(a);
	const CartanCertificate same = cartan_in_quotient(a, Subspace::zero(Q, 4), c);
	CHECK(same.subalgebra.space() == c.subalgebra.space());
	CHECK(cartan_in_quotient(a, Subspace::full(Q, 4), c).subalgebra.dim() == 0);

	const Subspace k = span(Q, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
	const CartanCertificate img = cartan_in_quotient(a, k, c);
	const Quotient q = quotient(a, k);
	CHECK(img.subalgebra.space() == Subspace::span(Q, 2, {q.project(vec(Q, {0, 1, 0, 0}))}));
	CHECK(is_cartan(q.algebra, img.subalgebra));
	CHECK(code_of([&] { cartan_in_quotient(a, span(Q, 4, {{1, 0, 0, 0}}), c); }) == ErrorCode::NotAnIdeal);
}

TEST_CASE("intravariance")
{
	const Algebra a = paper_example(Q);
	const Subspace full = Subspace::full(Q, 4);
	CHECK(intravariance_check(a, full, minimal_engel_search(a)));
	const Subspace zero = Subspace::zero(Q, 4);
	CHECK(intravariance_check(a, zero, minimal_engel_search(restrict(a, Subalgebra::of(a, zero)))));

	std::size_t tested = 0;
	for (const Algebra& b : {a, sl2(Q), paper_example(Field::prime(7))})
		for (const auto& n : lower_central_series(b)) {
			if (n.is_zero() || n.is_full())
				continue;
			const CartanCertificate c = minimal_engel_search(restrict(b, Subalgebra::of(b, n)));
			REQUIRE(intravariance_check(b, n, c));
			++tested;
		}
	CHECK(tested >= 2);
	CHECK(code_of([&] { intravariance_check(a, span(Q, 4, {{1, 0, 0, 0}}), minimal_engel_search(a)); }) ==
	      ErrorCode::PreconditionViolated);
}
