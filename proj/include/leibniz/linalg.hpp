#pragma once

/**
 * Dense exact linear algebra over a Field.
 *
 * Vectors are plain coordinate sequences. Matrices act on column vectors,
 * so the matrix of a linear map has the image of the j-th basis vector as
 * its j-th column. Subspaces are stored in a canonical form (reduced row
 * echelon basis with no zero rows), and all subspace equality is equality
 * of that canonical form.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Scalar& s, const Vector& x);

class Matrix
{
  public:
	Matrix(Field field, std::size_t rows, std::size_t cols);

	static Matrix identity(Field field, std::size_t n);
	static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
	static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

	const Field& field() const noexcept { return field_; }
	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }

	Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	Vector row(std::size_t r) const;
	Vector column(std::size_t c) const;
	std::vector<Vector> row_vectors() const;

	Matrix operator+(const Matrix& rhs) const;
	Matrix operator-(const Matrix& rhs) const;
	Matrix operator*(const Matrix& rhs) const;
	Vector operator*(const Vector& v) const;
	Matrix operator-() const;
	Matrix scaled(const Scalar& s) const;

	Matrix transpose() const;
	Matrix pow(std::size_t exponent) const;
	bool is_zero() const;
	bool is_square() const noexcept { return rows_ == cols_; }

	/// m^n == 0 with n the matrix size.
	bool is_nilpotent() const;

	bool operator==(const Matrix& rhs) const;

  private:
	Field field_;
	std::size_t rows_;
	std::size_t cols_;
	std::vector<Scalar> data_;
};

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct RrefResult
{
	Matrix reduced; ///< nonzero rows only
	std::size_t rank;
	std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

class Subspace
{
  public:
	static Subspace zero(Field field, std::size_t ambient_dim);
	static Subspace full(Field field, std::size_t ambient_dim);
	static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
	/// Row space of `m`.
	static Subspace row_space(const Matrix& m);

	const Field& field() const noexcept { return basis_.field(); }
	std::size_t ambient_dim() const noexcept { return basis_.cols(); }
	std::size_t dim() const noexcept { return basis_.rows(); }
	bool is_zero() const noexcept { return dim() == 0; }
	bool is_full() const noexcept { return dim() == ambient_dim(); }

	/// Canonical RREF basis matrix, one row per basis vector.
	const Matrix& basis() const noexcept { return basis_; }
	std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
	Vector basis_vector(std::size_t i) const { return basis_.row(i); }
	const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

	/// v minus its component along the basis read off at the pivot columns.
	/// Zero exactly when v lies in the subspace.
	Vector residue(const Vector& v) const;
	/// Matrix of the residue map, ambient x ambient.
	Matrix residue_matrix() const;

	bool contains(const Vector& v) const;
	bool contains(const Subspace& other) const;

	/// Coordinates of a member vector with respect to the canonical basis.
	/// Throws PreconditionViolated if v is not in the subspace.
	Vector coordinates(const Vector& v) const;
	/// Inverse of coordinates().
	Vector lift(const Vector& coords) const;
	/// A subspace of this one, rewritten in this subspace's coordinates.
	Subspace coordinates(const Subspace& sub) const;
	/// A subspace of F^dim() carried back into the ambient space.
	Subspace lift(const Subspace& local) const;

	Subspace operator+(const Subspace& other) const;
	Subspace intersect(const Subspace& other) const;
	/// Span of the standard basis vectors at the non-pivot columns.
	Subspace complement() const;
	std::vector<std::size_t> non_pivots() const;

	bool operator==(const Subspace& other) const;
	/// Canonical total order: ambient dimension, then dimension, then entries.
	std::strong_ordering operator<=>(const Subspace& other) const;

  private:
	Subspace(Matrix basis, std::vector<std::size_t> pivots);
	void require_same_ambient(const Subspace& other) const;

	Matrix basis_;
	std::vector<std::size_t> pivots_;
};

/// Solution space of m x = 0, a subspace of F^cols.
Subspace kernel(const Matrix& m);
/// Column space of m, a subspace of F^rows.
Subspace image(const Matrix& m);
/// Kernel of m^n for the n x n matrix m.
Subspace generalized_nullspace(const Matrix& m);
/// Image of m^n for the n x n matrix m; complements generalized_nullspace(m).
Subspace fitting_image(const Matrix& m);

/// A particular solution x of m x = rhs, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// The Gaussian binomial [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

/// Number of subspaces of F_p^n (of dimension `dim` when given), saturating at UINT64_MAX.
std::uint64_t subspace_count(std::size_t n, std::uint64_t p, std::optional<std::size_t> dim = std::nullopt);

inline constexpr std::uint64_t default_budget = 1'000'000;

/**
 * Every subspace of F_p^n exactly once, by rank and then by pivot pattern,
 * each emitted in canonical form. The total count is checked against the
 * budget before anything is produced.
 */
class SubspaceEnumerator
{
  public:
	SubspaceEnumerator(Field field, std::size_t ambient_dim, std::optional<std::size_t> dim = std::nullopt,
	                   std::uint64_t budget = default_budget);

	std::uint64_t total() const noexcept { return total_; }
	std::optional<Subspace> next();

  private:
	bool start_rank();
	bool advance_pivots();
	void start_pattern();
	Subspace build() const;

	Field field_;
	std::size_t n_;
	std::size_t rank_;
	std::size_t last_rank_;
	std::uint64_t total_;
	std::vector<std::size_t> pivots_;
	std::vector<std::pair<std::size_t, std::size_t>> free_;
	std::vector<std::uint64_t> digits_;
	bool pattern_live_ = false;
	bool exhausted_ = false;
};

/**
 * All vectors of F^n in a deterministic order. Over F_p it is the full
 * odometer over enumerate order (first coordinate fastest) and stops after
 * p^n vectors. Over Q it is infinite: level k emits the vectors whose
 * coordinates are among the first k rationals and that use the k-th one.
 */
class VectorEnumerator
{
  public:
	VectorEnumerator(Field field, std::size_t n);
	std::optional<Vector> next();

  private:
	bool advance();

	Field field_;
	std::size_t n_;
	std::vector<Scalar> values_;
	std::vector<std::size_t> digits_;
	std::size_t level_ = 0;
	bool started_ = false;
	bool done_ = false;
};

/// Calls fn on every nonzero vector whose first nonzero coordinate is 1.
/// Throws InfiniteField over Q and BudgetExceeded when there are too many points.
void for_each_projective_point(Field field, std::size_t n, std::uint64_t budget,
                               const std::function<void(const Vector&)>& fn);

/// Calls fn on every vector of F_p^n. Same errors as for_each_projective_point.
void for_each_vector(Field field, std::size_t n, std::uint64_t budget, const std::function<void(const Vector&)>& fn);

} // namespace leibniz
