#include "leibniz/algebra.hpp"

namespace leibniz {

Algebra::Algebra(Field field, std::size_t dim, std::vector<std::string> labels)
    : Algebra(field, dim, std::vector<Vector>(dim * dim, zero_vector(field, dim)), std::move(labels))
{}

Algebra::Algebra(Field field, std::size_t dim, std::vector<Vector> table, std::vector<std::string> labels)
    : field_(field), dim_(dim), table_(std::move(table)), labels_(std::move(labels))
{
	if (table_.size() != dim * dim)
		throw Error(ErrorCode::ShapeMismatch, "structure table must have dim^2 entries");
	for (const auto& v : table_) {
		if (v.size() != dim)
			throw Error(ErrorCode::ShapeMismatch, "product vector length differs from dim");
		for (const auto& s : v)
			if (!(s.field() == field))
				throw Error(ErrorCode::MixedFields, "structure constant over " + s.field().name());
	}
	if (!labels_.empty() && labels_.size() != dim)
		throw Error(ErrorCode::ShapeMismatch, "label count differs from dim");
}

Element Algebra::multiply(const Element& x, const Element& y) const
{
	if (x.size() != dim_ || y.size() != dim_)
		throw Error(ErrorCode::ShapeMismatch, "element length differs from dim");
	Element out = zero_element();
	for (std::size_t i = 0; i < dim_; ++i) {
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < dim_; ++j) {
			if (y[j].is_zero())
				continue;
			axpy(out, x[i] * y[j], product(i, j));
		}
	}
	return out;
}

Matrix Algebra::left_mult(const Element& a) const
{
	std::vector<Vector> cols;
	cols.reserve(dim_);
	for (std::size_t j = 0; j < dim_; ++j)
		cols.push_back(multiply(a, basis_element(j)));
	return Matrix::from_columns(field_, dim_, cols);
}

Matrix Algebra::right_mult(const Element& a) const
{
	std::vector<Vector> cols;
	cols.reserve(dim_);
	for (std::size_t j = 0; j < dim_; ++j)
		cols.push_back(multiply(basis_element(j), a));
	return Matrix::from_columns(field_, dim_, cols);
}

Element Algebra::power(const Element& a, std::size_t k) const
{
	if (k == 0)
		throw Error(ErrorCode::PreconditionViolated, "power exponent must be at least 1");
	Element p = a;
	for (std::size_t i = 1; i < k; ++i)
		p = multiply(a, p);
	return p;
}

bool Algebra::is_lie() const
{
	for (std::size_t i = 0; i < dim_; ++i)
		for (std::size_t j = i; j < dim_; ++j)
			if (!leibniz::is_zero(product(i, j) + product(j, i)))
				return false;
	// in characteristic 2, e_i e_i = -e_i e_i says nothing
	for (std::size_t i = 0; i < dim_; ++i)
		if (!leibniz::is_zero(product(i, i)))
			return false;
	return true;
}

LeibnizVerdict verify_leibniz(const Algebra& a)
{
	const std::size_t n = a.dim();
	for (std::size_t i = 0; i < n; ++i) {
		Element ei = a.basis_element(i);
		for (std::size_t j = 0; j < n; ++j) {
			Element ej = a.basis_element(j);
			const Vector& eiej = a.product(i, j);
			for (std::size_t k = 0; k < n; ++k) {
				Vector lhs = a.multiply(ei, a.product(j, k));
				Vector rhs = a.multiply(eiej, a.basis_element(k)) + a.multiply(ej, a.product(i, k));
				if (lhs != rhs)
					return LeibnizVerdict{LeibnizFailure{i, j, k, std::move(lhs), std::move(rhs)}};
			}
		}
	}
	return LeibnizVerdict{};
}

Subalgebra Subalgebra::of(const Algebra& a, Subspace space)
{
	if (space.ambient_dim() != a.dim())
		throw Error(ErrorCode::AmbientMismatch, "subspace ambient differs from algebra dim");
	if (!is_closed(a, space))
		throw Error(ErrorCode::NotClosed, "subspace is not closed under multiplication");
	return Subalgebra(std::move(space));
}

Subalgebra Subalgebra::whole(const Algebra& a) { return Subalgebra(Subspace::full(a.field(), a.dim())); }

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v)
{
	std::vector<Vector> products;
	auto ub = u.basis_vectors();
	auto vb = v.basis_vectors();
	for (const auto& x : ub)
		for (const auto& y : vb)
			products.push_back(a.multiply(x, y));
	return Subspace::span(a.field(), a.dim(), products);
}

bool is_closed(const Algebra& a, const Subspace& u)
{
	auto b = u.basis_vectors();
	for (const auto& x : b)
		for (const auto& y : b)
			if (!u.contains(a.multiply(x, y)))
				return false;
	return true;
}

bool is_right_ideal(const Algebra& a, const Subspace& u)
{
	for (const auto& x : u.basis_vectors())
		for (std::size_t j = 0; j < a.dim(); ++j)
			if (!u.contains(a.multiply(x, a.basis_element(j))))
				return false;
	return true;
}

bool is_left_ideal(const Algebra& a, const Subspace& u)
{
	for (const auto& x : u.basis_vectors())
		for (std::size_t j = 0; j < a.dim(); ++j)
			if (!u.contains(a.multiply(a.basis_element(j), x)))
				return false;
	return true;
}

bool is_ideal(const Algebra& a, const Subspace& u) { return is_left_ideal(a, u) && is_right_ideal(a, u); }

std::vector<Subspace> lower_central_series(const Algebra& a)
{
	const Subspace whole = Subspace::full(a.field(), a.dim());
	std::vector<Subspace> chain{whole};
	for (;;) {
		Subspace next = product_space(a, whole, chain.back());
		if (next == chain.back())
			break;
		chain.push_back(std::move(next));
	}
	return chain;
}

std::vector<Subspace> derived_series(const Algebra& a)
{
	std::vector<Subspace> chain{Subspace::full(a.field(), a.dim())};
	for (;;) {
		Subspace next = product_space(a, chain.back(), chain.back());
		if (next == chain.back())
			break;
		chain.push_back(std::move(next));
	}
	return chain;
}

bool is_nilpotent(const Algebra& a) { return lower_central_series(a).back().is_zero(); }

bool is_soluble(const Algebra& a) { return derived_series(a).back().is_zero(); }

std::optional<std::size_t> nilpotency_class(const Algebra& a)
{
	auto chain = lower_central_series(a);
	if (!chain.back().is_zero())
		return std::nullopt;
	// chain = A^1, ..., A^{c+1} = 0
	return chain.size() - 1;
}

namespace {

/// Kernel of the stacked maps, i.e. the joint kernel.
Subspace joint_kernel(Field field, std::size_t n, const std::vector<Matrix>& maps)
{
	Matrix stacked(field, 0, n);
	for (const auto& m : maps)
		stacked = vstack(stacked, m);
	return kernel(stacked);
}

} // namespace

Subspace left_centre(const Algebra& a)
{
	std::vector<Matrix> maps;
	for (std::size_t j = 0; j < a.dim(); ++j)
		maps.push_back(a.right_mult(a.basis_element(j)));
	return joint_kernel(a.field(), a.dim(), maps);
}

Subspace centre(const Algebra& a)
{
	return centralizer(a, Subspace::full(a.field(), a.dim()));
}

Normalizers normalizers(const Algebra& a, const Subalgebra& u)
{
	const Matrix residue = u.space().residue_matrix();
	std::vector<Matrix> left_maps, right_maps;
	for (const auto& b : u.space().basis_vectors()) {
		// a b = R_b(a) and b a = L_b(a) as functions of a
		left_maps.push_back(residue * a.right_mult(b));
		right_maps.push_back(residue * a.left_mult(b));
	}
	Subspace left = joint_kernel(a.field(), a.dim(), left_maps);
	Subspace right = joint_kernel(a.field(), a.dim(), right_maps);
	Subspace full = left.intersect(right);
	if (!is_closed(a, left) || !is_closed(a, full))
		throw Error(ErrorCode::TheoremViolated, "normaliser is not a subalgebra");
	return Normalizers{std::move(left), std::move(right), std::move(full)};
}

Subspace centralizer(const Algebra& a, const Subspace& u)
{
	std::vector<Matrix> maps;
	for (const auto& b : u.basis_vectors()) {
		maps.push_back(a.right_mult(b));
		maps.push_back(a.left_mult(b));
	}
	Subspace c = joint_kernel(a.field(), a.dim(), maps);
	if (!is_closed(a, c))
		throw Error(ErrorCode::TheoremViolated, "centraliser is not a subalgebra");
	return c;
}

Subspace Quotient::project(const Subspace& u) const
{
	std::vector<Vector> images;
	for (const auto& b : u.basis_vectors())
		images.push_back(projection * b);
	return Subspace::span(algebra.field(), algebra.dim(), images);
}

Subspace Quotient::preimage(const Subspace& u) const
{
	std::vector<Vector> gens = kernel.basis_vectors();
	for (const auto& b : u.basis_vectors())
		gens.push_back(section * b);
	return Subspace::span(kernel.field(), kernel.ambient_dim(), gens);
}

Quotient quotient(const Algebra& a, const Subspace& k)
{
	if (k.ambient_dim() != a.dim())
		throw Error(ErrorCode::AmbientMismatch, "ideal ambient differs from algebra dim");
	if (!is_ideal(a, k))
		throw Error(ErrorCode::NotAnIdeal, "quotient needs a two-sided ideal");
	const auto free_cols = k.non_pivots();
	const std::size_t q = free_cols.size();
	Matrix projection(a.field(), q, a.dim());
	Matrix section(a.field(), a.dim(), q);
	const Matrix residue = k.residue_matrix();
	for (std::size_t r = 0; r < q; ++r) {
		for (std::size_t c = 0; c < a.dim(); ++c)
			projection(r, c) = residue(free_cols[r], c);
		section(free_cols[r], r) = a.field().one();
	}
	std::vector<Vector> table;
	table.reserve(q * q);
	for (std::size_t i = 0; i < q; ++i)
		for (std::size_t j = 0; j < q; ++j)
			table.push_back(projection * a.product(free_cols[i], free_cols[j]));
	std::vector<std::string> labels;
	if (a.has_labels())
		for (auto c : free_cols)
			labels.push_back(a.labels()[c]);
	Algebra qa(a.field(), q, std::move(table), std::move(labels));
	if (!verify_leibniz(qa).holds())
		throw Error(ErrorCode::TheoremViolated, "quotient of a Leibniz algebra failed the identity");
	return Quotient{std::move(qa), k, std::move(projection), std::move(section)};
}

Algebra restrict(const Algebra& a, const Subalgebra& u)
{
	const Subspace& s = u.space();
	auto basis = s.basis_vectors();
	std::vector<Vector> table;
	table.reserve(basis.size() * basis.size());
	for (const auto& x : basis)
		for (const auto& y : basis)
			table.push_back(s.coordinates(a.multiply(x, y)));
	return Algebra(a.field(), s.dim(), std::move(table));
}

Subspace right_closure(const Algebra& a, const Subspace& u, const Subspace& x)
{
	Subspace w = u;
	auto xb = x.basis_vectors();
	for (;;) {
		std::vector<Vector> gens = w.basis_vectors();
		for (const auto& b : w.basis_vectors())
			for (const auto& y : xb)
				gens.push_back(a.multiply(b, y));
		Subspace next = Subspace::span(a.field(), a.dim(), gens);
		if (next == w)
			return w;
		w = std::move(next);
	}
}

RightSubnormality is_right_subnormal(const Algebra& a, const Subalgebra& u)
{
	std::vector<Subspace> chain{Subspace::full(a.field(), a.dim())};
	for (;;) {
		Subspace next = right_closure(a, u.space(), chain.back());
		if (next == chain.back())
			break;
		chain.push_back(std::move(next));
	}
	bool ok = chain.back() == u.space();
	return RightSubnormality{ok, std::move(chain)};
}

bool is_lie_quotient(const Algebra& a)
{
	Subspace lc = left_centre(a);
	if (!is_ideal(a, lc))
		throw Error(ErrorCode::TheoremViolated, "left centre is not a two-sided ideal");
	return quotient(a, lc).algebra.is_lie();
}

} // namespace leibniz
