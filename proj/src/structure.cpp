#include "leibniz/structure.hpp"

#include <set>

#include "leibniz/engel.hpp"

namespace leibniz {

Subspace ideal_closure(const Algebra& a, const Subspace& v)
{
	Subspace w = v;
	for (;;) {
		std::vector<Vector> gens = w.basis_vectors();
		for (const auto& x : w.basis_vectors())
			for (std::size_t j = 0; j < a.dim(); ++j) {
				gens.push_back(a.multiply(a.basis_element(j), x));
				gens.push_back(a.multiply(x, a.basis_element(j)));
			}
		Subspace next = Subspace::span(a.field(), a.dim(), gens);
		if (next == w)
			return w;
		w = std::move(next);
	}
}

Subspace ideal_closure(const Algebra& a, const Element& v)
{
	return ideal_closure(a, Subspace::span(a.field(), a.dim(), {v}));
}

std::vector<Subspace> minimal_ideals(const Algebra& a, std::uint64_t budget)
{
	std::set<Subspace> closures;
	for_each_projective_point(a.field(), a.dim(), budget,
	                          [&](const Vector& v) { closures.insert(ideal_closure(a, v)); });
	std::vector<Subspace> minimal;
	for (const auto& c : closures) {
		bool is_min = true;
		for (const auto& d : closures)
			if (d.dim() < c.dim() && c.contains(d)) {
				is_min = false;
				break;
			}
		if (is_min)
			minimal.push_back(c);
	}
	// every point of a minimal ideal must regenerate it
	for (const auto& m : minimal)
		for_each_projective_point(a.field(), m.dim(), budget, [&](const Vector& local) {
			if (!(ideal_closure(a, m.lift(local)) == m))
				throw Error(ErrorCode::TheoremViolated, "minimal ideal contains a smaller nonzero ideal");
		});
	return minimal;
}

Subspace socle(const Algebra& a, std::uint64_t budget)
{
	Subspace s = Subspace::zero(a.field(), a.dim());
	for (const auto& m : minimal_ideals(a, budget))
		s = s + m;
	if (!is_ideal(a, s))
		throw Error(ErrorCode::TheoremViolated, "socle is not an ideal");
	return s;
}

std::vector<Subspace> all_subalgebras(const Algebra& a, std::uint64_t budget)
{
	std::vector<Subspace> out;
	SubspaceEnumerator it(a.field(), a.dim(), std::nullopt, budget);
	while (auto s = it.next())
		if (is_closed(a, *s))
			out.push_back(std::move(*s));
	return out;
}

std::vector<Subspace> maximal_subalgebras(const Algebra& a, std::uint64_t budget)
{
	std::vector<Subspace> proper;
	for (auto& s : all_subalgebras(a, budget))
		if (!s.is_full())
			proper.push_back(std::move(s));
	std::vector<Subspace> out;
	for (const auto& m : proper) {
		bool maximal = true;
		for (const auto& other : proper)
			if (other.dim() > m.dim() && other.contains(m)) {
				maximal = false;
				break;
			}
		if (maximal)
			out.push_back(m);
	}
	return out;
}

Subspace frattini(const Algebra& a, std::uint64_t budget)
{
	Subspace phi = Subspace::full(a.field(), a.dim());
	for (const auto& m : maximal_subalgebras(a, budget))
		phi = phi.intersect(m);
	return phi;
}

FrattiniVerdict frattini_nilpotency_check(const Algebra& a, const Subalgebra& u, const Subspace& v,
                                          std::uint64_t budget)
{
	return frattini_nilpotency_check(a, u, v, frattini(a, budget));
}

FrattiniVerdict frattini_nilpotency_check(const Algebra& a, const Subalgebra& u, const Subspace& v,
                                          const Subspace& phi)
{
	if (!is_right_subnormal(a, u).subnormal)
		throw Error(ErrorCode::PreconditionViolated, "U is not right subnormal in A");
	if (!u.space().contains(v))
		throw Error(ErrorCode::PreconditionViolated, "V is not contained in U");
	const Algebra local = restrict(a, u);
	const Subspace local_v = u.space().coordinates(v);
	if (!is_ideal(local, local_v))
		throw Error(ErrorCode::PreconditionViolated, "V is not a two-sided ideal of U");
	if (!phi.contains(v))
		throw Error(ErrorCode::PreconditionViolated, "V is not contained in the Frattini subalgebra");
	if (!is_nilpotent(quotient(local, local_v).algebra))
		throw Error(ErrorCode::PreconditionViolated, "U/V is not nilpotent");
	return FrattiniVerdict{is_nilpotent(local)};
}

std::optional<PrimitiveCertificate> is_primitive(const Algebra& a, std::uint64_t budget)
{
	if (!a.field().is_finite())
		throw Error(ErrorCode::InfiniteField, "primitivity needs a prime field");
	if (!is_soluble(a))
		return std::nullopt;
	const auto mins = minimal_ideals(a, budget);
	for (const auto& c : mins) {
		if (!(centralizer(a, c) == c))
			continue;
		if (mins.size() != 1)
			throw Error(ErrorCode::TheoremViolated, "primitive algebra with more than one minimal ideal");
		const bool lie = a.is_lie();
		if (!lie && !(left_centre(a) == c))
			throw Error(ErrorCode::TheoremViolated, "socle of a non-Lie primitive algebra differs from the left centre");
		return PrimitiveCertificate{c, std::nullopt, lie};
	}
	return std::nullopt;
}

Subspace primitive_complement(const Algebra& p, const PrimitiveCertificate& cert, std::uint64_t budget)
{
	const Subspace& c = cert.socle;
	if (c.is_full())
		throw Error(ErrorCode::NoComplementNeeded, "P equals its socle");
	if (!is_soluble(p))
		throw Error(ErrorCode::PreconditionViolated, "primitive algebra must be soluble");
	const Quotient q = quotient(p, c);
	const auto mins = minimal_ideals(q.algebra, budget);
	if (mins.empty())
		throw Error(ErrorCode::TheoremViolated, "nonzero quotient without minimal ideals");
	const Subspace b = q.preimage(mins.front());

	std::optional<Element> chosen;
	const auto socle_basis = c.basis_vectors();
	for_each_projective_point(p.field(), b.dim(), budget, [&](const Vector& local) {
		if (chosen)
			return;
		Element x = b.lift(local);
		for (const auto& y : socle_basis)
			if (!is_zero(p.multiply(x, y))) {
				chosen = std::move(x);
				return;
			}
	});
	if (!chosen)
		throw Error(ErrorCode::TheoremViolated, "no element of B acts nontrivially on the socle");
	Subspace m = engel_subalgebra(p, *chosen).space;
	if (!(m + c).is_full() || !m.intersect(c).is_zero() || !is_closed(p, m))
		throw Error(ErrorCode::TheoremViolated, "Engel subalgebra does not complement the socle");
	return m;
}

Matrix conjugation_map(const Algebra& a, const Element& c)
{
	return Matrix::identity(a.field(), a.dim()) + a.left_mult(c);
}

std::optional<Element> conjugating_element(const Algebra& a, const Subspace& c_ideal, const Subspace& u,
                                           const Subspace& v)
{
	if (!is_ideal(a, c_ideal) || !product_space(a, c_ideal, c_ideal).is_zero())
		throw Error(ErrorCode::NotAbelianIdeal, "C must be an abelian two-sided ideal");
	if (u.dim() != v.dim())
		return std::nullopt;
	const std::size_t n = a.dim();
	const auto cb = c_ideal.basis_vectors();
	const auto ub = u.basis_vectors();
	// unknowns gamma with c = sum gamma_k c_k; for each u_i: res_V(u_i + c u_i) = 0
	Matrix system(a.field(), ub.size() * n, cb.size());
	Vector rhs = zero_vector(a.field(), ub.size() * n);
	for (std::size_t i = 0; i < ub.size(); ++i) {
		Vector base = v.residue(ub[i]);
		for (std::size_t r = 0; r < n; ++r)
			rhs[i * n + r] = -base[r];
		for (std::size_t k = 0; k < cb.size(); ++k) {
			Vector col = v.residue(a.multiply(cb[k], ub[i]));
			for (std::size_t r = 0; r < n; ++r)
				system(i * n + r, k) = col[r];
		}
	}
	auto gamma = solve(system, rhs);
	if (!gamma)
		return std::nullopt;
	Element c = zero_vector(a.field(), n);
	for (std::size_t k = 0; k < cb.size(); ++k)
		axpy(c, (*gamma)[k], cb[k]);

	const Matrix alpha = conjugation_map(a, c);
	std::vector<Vector> images;
	for (const auto& x : ub)
		images.push_back(alpha * x);
	if (!(Subspace::span(a.field(), n, images) == v))
		throw Error(ErrorCode::TheoremViolated, "solved conjugator does not map U onto V");
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (alpha * a.product(i, j) != a.multiply(alpha.column(i), alpha.column(j)))
				throw Error(ErrorCode::TheoremViolated, "1 + L_c is not an automorphism");
	return c;
}

std::vector<Subspace> complements(const Algebra& a, const Subspace& c, std::uint64_t budget)
{
	std::vector<Subspace> out;
	SubspaceEnumerator it(a.field(), a.dim(), a.dim() - c.dim(), budget);
	while (auto s = it.next())
		if (s->intersect(c).is_zero() && is_closed(a, *s))
			out.push_back(std::move(*s));
	return out;
}

ConjugacyReport conjugacy_theorem_check(const Algebra& p, const PrimitiveCertificate& cert, std::uint64_t budget)
{
	ConjugacyReport report{true, complements(p, cert.socle, budget), {}, {}};
	if (report.complements.empty()) {
		report.holds = false;
		report.detail = "no complement to the socle";
		return report;
	}
	if (!cert.is_lie && report.complements.size() != 1) {
		report.holds = false;
		report.detail = std::to_string(report.complements.size()) + " complements in a non-Lie primitive algebra";
		return report;
	}
	for (std::size_t i = 0; i < report.complements.size(); ++i)
		for (std::size_t j = i + 1; j < report.complements.size(); ++j) {
			auto c = conjugating_element(p, cert.socle, report.complements[i], report.complements[j]);
			if (!c) {
				report.holds = false;
				report.detail = "complements " + std::to_string(i) + " and " + std::to_string(j) + " are not conjugate";
				return report;
			}
			report.pairs.push_back(ConjugacyPair{i, j, std::move(*c)});
		}
	return report;
}

} // namespace leibniz
