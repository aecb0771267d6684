#pragma once

/**
 * Finite-dimensional algebras given by structure constants,
 * e_i e_j = sum_k c[i][j][k] e_k, and the left Leibniz machinery on top:
 * multiplication operators, series, centres, normalisers, quotients.
 *
 * An Algebra is only a multiplication table; whether it is Leibniz is a
 * verdict of verify_leibniz(). Loaders and generators refuse tables that
 * fail it, so everything downstream may assume the identity.
 */

#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

using Element = Vector;

class Algebra
{
  public:
	/// The zero multiplication on F^dim.
	Algebra(Field field, std::size_t dim, std::vector<std::string> labels = {});
	/// `table[i * dim + j]` is the product e_i e_j.
	Algebra(Field field, std::size_t dim, std::vector<Vector> table, std::vector<std::string> labels = {});

	const Field& field() const noexcept { return field_; }
	std::size_t dim() const noexcept { return dim_; }
	const std::vector<std::string>& labels() const noexcept { return labels_; }
	bool has_labels() const noexcept { return !labels_.empty(); }

	const Vector& product(std::size_t i, std::size_t j) const { return table_.at(i * dim_ + j); }
	const std::vector<Vector>& table() const noexcept { return table_; }

	Element zero_element() const { return zero_vector(field_, dim_); }
	Element basis_element(std::size_t i) const { return unit_vector(field_, dim_, i); }

	Element multiply(const Element& x, const Element& y) const;

	/// Matrix of L_a : x -> a x.
	Matrix left_mult(const Element& a) const;
	/// Matrix of R_a : x -> x a.
	Matrix right_mult(const Element& a) const;

	/// Left-normed power: a^1 = a, a^{k+1} = a a^k.
	Element power(const Element& a, std::size_t k) const;

	/// x x = 0 on the basis and e_i e_j = -e_j e_i; for a Leibniz algebra
	/// this is equivalent to being a Lie algebra.
	bool is_lie() const;

	bool operator==(const Algebra&) const = default;

  private:
	Field field_;
	std::size_t dim_;
	std::vector<Vector> table_;
	std::vector<std::string> labels_;
};

struct LeibnizFailure
{
	std::size_t i, j, k; ///< 0-based basis triple
	Vector lhs;          ///< e_i (e_j e_k)
	Vector rhs;          ///< (e_i e_j) e_k + e_j (e_i e_k)
};

struct LeibnizVerdict
{
	std::optional<LeibnizFailure> failure;
	bool holds() const noexcept { return !failure.has_value(); }
};

/// Checks a(bc) = (ab)c + b(ac) on all basis triples, in lexicographic order.
LeibnizVerdict verify_leibniz(const Algebra& a);

/// A subspace verified to be closed under multiplication.
class Subalgebra
{
  public:
	/// Throws NotClosed if `space` is not closed.
	static Subalgebra of(const Algebra& a, Subspace space);
	static Subalgebra whole(const Algebra& a);

	const Subspace& space() const noexcept { return space_; }
	std::size_t dim() const noexcept { return space_.dim(); }

	bool operator==(const Subalgebra&) const = default;

  private:
	explicit Subalgebra(Subspace space) : space_(std::move(space)) {}
	Subspace space_;
};

/// Span of u v over basis vectors u of U and v of V.
Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v);

bool is_closed(const Algebra& a, const Subspace& u);
/// U A in U.
bool is_right_ideal(const Algebra& a, const Subspace& u);
/// A U in U.
bool is_left_ideal(const Algebra& a, const Subspace& u);
bool is_ideal(const Algebra& a, const Subspace& u);

/// A = A^1, A^{k+1} = A A^k, until two consecutive terms agree.
std::vector<Subspace> lower_central_series(const Algebra& a);
/// A^(0) = A, A^(r+1) = (A^(r))^2, until two consecutive terms agree.
std::vector<Subspace> derived_series(const Algebra& a);

bool is_nilpotent(const Algebra& a);
bool is_soluble(const Algebra& a);
/// Smallest c with A^{c+1} = 0, or nullopt if A is not nilpotent.
std::optional<std::size_t> nilpotency_class(const Algebra& a);

/// {z : z A = 0}.
Subspace left_centre(const Algebra& a);
/// {z : z A = A z = 0}.
Subspace centre(const Algebra& a);

struct Normalizers
{
	Subspace left;  ///< a U in U
	Subspace right; ///< U a in U
	Subspace full;  ///< both
};

Normalizers normalizers(const Algebra& a, const Subalgebra& u);

/// {x : x U = U x = 0}.
Subspace centralizer(const Algebra& a, const Subspace& u);

/// A/K on the basis given by the non-pivot columns of K's canonical form.
struct Quotient
{
	Algebra algebra;
	Subspace kernel;
	Matrix projection; ///< dim(A/K) x dim(A)
	Matrix section;    ///< dim(A) x dim(A/K), projection * section = 1

	Element project(const Element& x) const { return projection * x; }
	Element lift(const Element& x) const { return section * x; }
	Subspace project(const Subspace& u) const;
	/// Full preimage of a subspace of A/K.
	Subspace preimage(const Subspace& u) const;
};

/// Throws NotAnIdeal unless K is a two-sided ideal.
Quotient quotient(const Algebra& a, const Subspace& k);

/// The structure constants of U on its canonical basis.
Algebra restrict(const Algebra& a, const Subalgebra& u);

/// Right-multiplicative closure of U inside X: the smallest W containing U with W X in W.
Subspace right_closure(const Algebra& a, const Subspace& u, const Subspace& x);

struct RightSubnormality
{
	bool subnormal;
	/// X_0 = A, X_{i+1} = right_closure(U, X_i), up to stabilisation.
	std::vector<Subspace> chain;
};

RightSubnormality is_right_subnormal(const Algebra& a, const Subalgebra& u);

/// Builds the quotient A/lc(A) and checks x x = 0 there on basis squares and pair sums.
bool is_lie_quotient(const Algebra& a);

} // namespace leibniz
