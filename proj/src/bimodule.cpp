#include "leibniz/bimodule.hpp"

namespace leibniz {

Bimodule::Bimodule(Algebra algebra, std::size_t module_dim, std::vector<Matrix> t, std::vector<Matrix> s)
    : algebra_(std::move(algebra)), module_dim_(module_dim), t_(std::move(t)), s_(std::move(s))
{
	if (t_.size() != algebra_.dim() || s_.size() != algebra_.dim())
		throw Error(ErrorCode::ShapeMismatch, "one action matrix per algebra basis vector");
	for (const auto* family : {&t_, &s_})
		for (const auto& m : *family)
			if (m.rows() != module_dim_ || m.cols() != module_dim_ || !(m.field() == algebra_.field()))
				throw Error(ErrorCode::ShapeMismatch, "action matrices must be module_dim square over the algebra field");
}

static Matrix combine(const std::vector<Matrix>& family, const Element& a, Field field, std::size_t m)
{
	Matrix out(field, m, m);
	for (std::size_t i = 0; i < family.size(); ++i)
		if (!a.at(i).is_zero())
			out = out + family[i].scaled(a[i]);
	return out;
}

Matrix Bimodule::t(const Element& a) const { return combine(t_, a, algebra_.field(), module_dim_); }
Matrix Bimodule::s(const Element& a) const { return combine(s_, a, algebra_.field(), module_dim_); }

BimoduleVerdict verify_bimodule(const Bimodule& b)
{
	const Algebra& a = b.algebra();
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t j = 0; j < a.dim(); ++j) {
			const Element& ab = a.product(i, j);
			const Matrix& ti = b.t_basis(i);
			const Matrix& tj = b.t_basis(j);
			const Matrix& sj = b.s_basis(j);
			const Matrix& si = b.s_basis(i);
			if (!(ti * tj == b.t(ab) + tj * ti))
				return BimoduleVerdict{BimoduleFailure{1, i, j}};
			if (!(ti * sj == sj * ti + b.s(ab)))
				return BimoduleVerdict{BimoduleFailure{2, i, j}};
			if (!(b.s(ab) == sj * si + ti * sj))
				return BimoduleVerdict{BimoduleFailure{3, i, j}};
		}
	return BimoduleVerdict{};
}

Bimodule regular_bimodule(const Algebra& a)
{
	std::vector<Matrix> t, s;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		t.push_back(a.left_mult(a.basis_element(i)));
		s.push_back(a.right_mult(a.basis_element(i)));
	}
	Bimodule b(a, a.dim(), std::move(t), std::move(s));
	if (!verify_bimodule(b).holds())
		throw Error(ErrorCode::NotLeibniz, "regular bimodule of a non-Leibniz table");
	return b;
}

Bimodule ideal_bimodule(const Algebra& a, const Subspace& ideal)
{
	if (!is_ideal(a, ideal))
		throw Error(ErrorCode::NotAnIdeal, "bimodule on a subspace needs a two-sided ideal");
	const auto basis = ideal.basis_vectors();
	std::vector<Matrix> t, s;
	for (std::size_t i = 0; i < a.dim(); ++i) {
		std::vector<Vector> tc, sc;
		for (const auto& m : basis) {
			tc.push_back(ideal.coordinates(a.multiply(a.basis_element(i), m)));
			sc.push_back(ideal.coordinates(a.multiply(m, a.basis_element(i))));
		}
		t.push_back(Matrix::from_columns(a.field(), ideal.dim(), tc));
		s.push_back(Matrix::from_columns(a.field(), ideal.dim(), sc));
	}
	Bimodule b(a, ideal.dim(), std::move(t), std::move(s));
	if (!verify_bimodule(b).holds())
		throw Error(ErrorCode::TheoremViolated, "ideal of a Leibniz algebra is not a bimodule");
	return b;
}

Bimodule lie_bimodule(const Algebra& lie, std::size_t module_dim, std::vector<Matrix> t, RightAction mode)
{
	if (!lie.is_lie() || !verify_leibniz(lie).holds())
		throw Error(ErrorCode::NotLie, "Lie-module construction needs a Lie algebra");
	std::vector<Matrix> s;
	for (const auto& m : t)
		s.push_back(mode == RightAction::Zero ? Matrix(lie.field(), module_dim, module_dim) : -m);
	Bimodule b(lie, module_dim, std::move(t), std::move(s));
	if (!verify_bimodule(b).holds())
		throw Error(ErrorCode::NotBimodule, "T is not a representation of the Lie algebra");
	return b;
}

std::uint64_t next_random(std::uint64_t& state)
{
	std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

Element random_element(const Algebra& a, std::uint64_t& state)
{
	Element x = a.zero_element();
	for (auto& c : x) {
		std::uint64_t r = next_random(state);
		if (a.field().is_finite())
			c = Scalar(a.field(), r % a.field().characteristic());
		else
			c = a.field().from_int(static_cast<long>(r % 7) - 3);
	}
	return x;
}

namespace {

template <class Fn>
void for_each_test_element(const Algebra& a, const EngelWitnessOptions& options, Fn&& fn)
{
	for (std::size_t i = 0; i < a.dim(); ++i)
		fn(a.basis_element(i));
	const auto& f = a.field();
	std::uint64_t count = 1;
	bool small = f.is_finite();
	for (std::size_t i = 0; small && i < a.dim(); ++i) {
		count *= f.characteristic();
		small = count <= options.exhaustive_limit;
	}
	if (small) {
		for_each_vector(f, a.dim(), options.exhaustive_limit, fn);
		return;
	}
	std::uint64_t state = options.seed;
	for (std::size_t k = 0; k < options.random_samples; ++k)
		fn(random_element(a, state));
}

} // namespace

Vector engel_witness(const Bimodule& b, const EngelWitnessOptions& options)
{
	const Algebra& a = b.algebra();
	const Field f = a.field();
	if (b.module_dim() == 0)
		throw Error(ErrorCode::PreconditionViolated, "module must be nonzero");
	for_each_test_element(a, options, [&](const Element& x) {
		if (!b.t(x).is_nilpotent())
			throw Error(ErrorCode::HypothesisViolated, "some T_a is not nilpotent");
	});
	for_each_test_element(a, options, [&](const Element& x) {
		if (!b.s(x).is_nilpotent())
			throw Error(ErrorCode::TheoremViolated, "T is nil but some S_a is not nilpotent");
	});
	Matrix stacked(f, 0, b.module_dim());
	for (std::size_t i = 0; i < a.dim(); ++i)
		stacked = vstack(vstack(stacked, b.t_basis(i)), b.s_basis(i));
	Subspace joint = kernel(stacked);
	if (joint.is_zero())
		throw Error(ErrorCode::TheoremViolated, "nil bimodule without a common null vector");
	return joint.basis_vector(0);
}

} // namespace leibniz
