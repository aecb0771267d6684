#include "leibniz/engel.hpp"

namespace leibniz {

EngelSubalgebra engel_subalgebra(const Algebra& a, const Element& x)
{
	const Matrix lx = a.left_mult(x);
	Subspace null = generalized_nullspace(lx);
	Subspace img = fitting_image(lx);
	if (null.dim() + img.dim() != a.dim() || !null.intersect(img).is_zero())
		throw Error(ErrorCode::TheoremViolated, "Fitting decomposition failed");
	if (!is_closed(a, null))
		throw Error(ErrorCode::TheoremViolated, "Engel subspace is not closed");
	return EngelSubalgebra{x, std::move(null), std::move(img)};
}

Subspace generated_subalgebra(const Algebra& a, const Element& x)
{
	Subspace span = Subspace::zero(a.field(), a.dim());
	Element p = x;
	std::vector<Vector> gens;
	while (!span.contains(p)) {
		gens.push_back(p);
		span = Subspace::span(a.field(), a.dim(), gens);
		p = a.multiply(x, p);
	}
	return span;
}

Element engel_representative(const Algebra& a, const Element& x)
{
	const Subspace u = generated_subalgebra(a, x);
	const std::size_t r = u.dim();
	if (r == 0)
		return x;
	std::vector<Vector> cols;
	for (const auto& b : u.basis_vectors())
		cols.push_back(u.coordinates(a.multiply(x, b)));
	const Matrix mu = Matrix::from_columns(a.field(), r, cols).pow(r);
	const Subspace null = kernel(mu);
	const Subspace img = image(mu);
	std::vector<Vector> split = null.basis_vectors();
	for (const auto& v : img.basis_vectors())
		split.push_back(v);
	auto lambda = solve(Matrix::from_columns(a.field(), r, split), u.coordinates(x));
	if (!lambda)
		throw Error(ErrorCode::TheoremViolated, "Fitting splitting of the generated subalgebra failed");
	Vector null_part = zero_vector(a.field(), r);
	for (std::size_t i = 0; i < null.dim(); ++i)
		axpy(null_part, (*lambda)[i], null.basis_vector(i));
	Element rep = u.lift(null_part);

	const Subspace e = engel_subalgebra(a, x).space;
	if (!(a.left_mult(rep) == a.left_mult(x)) || !e.contains(rep) || !(engel_subalgebra(a, rep).space == e))
		throw Error(ErrorCode::TheoremViolated, "Engel representative does not have the expected properties");
	return rep;
}

SelfNormalizingVerdict check_right_self_normalizing(const Algebra& a, const Subalgebra& u, const Element& x)
{
	const Subspace e = engel_subalgebra(a, x).space;
	if (!u.space().contains(e))
		throw Error(ErrorCode::PreconditionViolated, "Engel subalgebra is not contained in U");
	const Subspace right = normalizers(a, u).right;
	if (right == u.space())
		return SelfNormalizingVerdict{true, std::nullopt};
	for (const auto& v : right.basis_vectors())
		if (!u.space().contains(v))
			return SelfNormalizingVerdict{false, v};
	return SelfNormalizingVerdict{false, std::nullopt};
}

std::optional<CartanCertificate> certify_cartan(const Algebra& a, const Subalgebra& u, std::optional<Element> witness)
{
	auto cls = nilpotency_class(restrict(a, u));
	if (!cls)
		return std::nullopt;
	if (!(normalizers(a, u).full == u.space()))
		return std::nullopt;
	if (witness && !(engel_subalgebra(a, *witness).space == u.space()))
		witness.reset();
	return CartanCertificate{u, *cls, true, std::move(witness)};
}

bool is_cartan(const Algebra& a, const Subalgebra& u)
{
	return is_nilpotent(restrict(a, u)) && normalizers(a, u).full == u.space();
}

namespace {

/// Some u in E whose left multiplication is not nilpotent on E, given that
/// E is not nilpotent (so such u exists by Engel's theorem).
Element non_nilpotent_direction(const Algebra& a, const Subspace& e)
{
	const Algebra local = restrict(a, Subalgebra::of(a, e));
	for (std::size_t i = 0; i < local.dim(); ++i)
		if (!local.left_mult(local.basis_element(i)).is_nilpotent())
			return e.basis_vector(i);
	VectorEnumerator stream(a.field(), local.dim());
	constexpr std::size_t cap = 1'000'000;
	for (std::size_t seen = 0; seen < cap; ++seen) {
		auto v = stream.next();
		if (!v)
			break;
		if (!local.left_mult(*v).is_nilpotent())
			return e.lift(*v);
	}
	throw Error(ErrorCode::TheoremViolated, "non-nilpotent Engel subalgebra with only nilpotent left multiplications");
}

} // namespace

CartanCertificate minimal_engel_search(const Algebra& a)
{
	const std::size_t n = a.dim();
	if (!a.field().has_at_least(n + 1))
		throw Error(ErrorCode::FieldTooSmall, a.field().name() + " has fewer than " + std::to_string(n + 1) +
		                                          " elements");
	Element current = a.zero_element();
	Subspace e = Subspace::full(a.field(), n);
	for (std::size_t i = 0; i < n; ++i) {
		Subspace candidate = engel_subalgebra(a, a.basis_element(i)).space;
		if (candidate.dim() < e.dim() || i == 0) {
			current = a.basis_element(i);
			e = std::move(candidate);
		}
	}
	const auto scalars = first_elements(a.field(), n + 1);
	while (!is_nilpotent(restrict(a, Subalgebra::of(a, e)))) {
		const Element direction = non_nilpotent_direction(a, e);
		bool descended = false;
		for (const auto& t : scalars) {
			Element trial = current + t * direction;
			Subspace smaller = engel_subalgebra(a, trial).space;
			if (smaller.dim() < e.dim() && e.contains(smaller)) {
				current = std::move(trial);
				e = std::move(smaller);
				descended = true;
				break;
			}
		}
		if (!descended)
			throw Error(ErrorCode::TheoremViolated, "no descent step among " + std::to_string(n + 1) + " scalars");
	}
	Element witness = engel_representative(a, current);
	auto cert = certify_cartan(a, Subalgebra::of(a, e), witness);
	if (!cert)
		throw Error(ErrorCode::CertificationFailed, "minimal Engel subalgebra is not Cartan");
	return *cert;
}

CartanCertificate cartan_in_quotient(const Algebra& a, const Subspace& k, const CartanCertificate& c)
{
	const Quotient q = quotient(a, k);
	const Subspace img = q.project(c.subalgebra.space());
	std::optional<Element> witness;
	if (c.witness_element)
		witness = q.project(*c.witness_element);
	auto cert = certify_cartan(q.algebra, Subalgebra::of(q.algebra, img), witness);
	if (!cert)
		throw Error(ErrorCode::TheoremViolated, "image of a Cartan subalgebra is not Cartan in the quotient");
	return *cert;
}

bool intravariance_check(const Algebra& a, const Subspace& n_ideal, const CartanCertificate& c)
{
	if (!is_ideal(a, n_ideal))
		throw Error(ErrorCode::PreconditionViolated, "N is not a two-sided ideal");
	const Subspace& local = c.subalgebra.space();
	if (local.ambient_dim() != n_ideal.dim())
		throw Error(ErrorCode::PreconditionViolated, "certificate is not over the ideal's coordinates");
	std::vector<Vector> lifted;
	for (const auto& v : local.basis_vectors())
		lifted.push_back(n_ideal.lift(v));
	const Subalgebra cartan = Subalgebra::of(a, Subspace::span(a.field(), a.dim(), lifted));
	return (n_ideal + normalizers(a, cartan).full).is_full();
}

} // namespace leibniz
