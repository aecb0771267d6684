#include "leibniz/linalg.hpp"

#include <algorithm>
#include <limits>

namespace leibniz {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(Field field, std::size_t n, std::size_t i)
{
	Vector v = zero_vector(field, n);
	v.at(i) = field.one();
	return v;
}

bool is_zero(const Vector& v)
{
	return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void require_same_length(const Vector& a, const Vector& b)
{
	if (a.size() != b.size())
		throw Error(ErrorCode::ShapeMismatch, "vector lengths differ");
}

Vector operator+(const Vector& a, const Vector& b)
{
	require_same_length(a, b);
	Vector r = a;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
	require_same_length(a, b);
	Vector r = a;
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

Vector operator-(const Vector& a)
{
	Vector r = a;
	for (auto& s : r)
		s = -s;
	return r;
}

Vector operator*(const Scalar& s, const Vector& v)
{
	Vector r = v;
	for (auto& x : r)
		x *= s;
	return r;
}

void axpy(Vector& y, const Scalar& s, const Vector& x)
{
	require_same_length(y, x);
	if (s.is_zero())
		return;
	for (std::size_t i = 0; i < y.size(); ++i)
		if (!x[i].is_zero())
			y[i] += s * x[i];
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero())
{}

Matrix Matrix::identity(Field field, std::size_t n)
{
	Matrix m(field, n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = field.one();
	return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows)
{
	Matrix m(field, rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r) {
		if (rows[r].size() != cols)
			throw Error(ErrorCode::ShapeMismatch, "row length differs from column count");
		for (std::size_t c = 0; c < cols; ++c)
			m(r, c) = rows[r][c];
	}
	return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns)
{
	Matrix m(field, rows, columns.size());
	for (std::size_t c = 0; c < columns.size(); ++c) {
		if (columns[c].size() != rows)
			throw Error(ErrorCode::ShapeMismatch, "column length differs from row count");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = columns[c][r];
	}
	return m;
}

Vector Matrix::row(std::size_t r) const
{
	return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
	              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
	Vector v;
	v.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v.push_back((*this)(r, c));
	return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
	std::vector<Vector> out;
	out.reserve(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		out.push_back(row(r));
	return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
	if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
		throw Error(ErrorCode::ShapeMismatch, "matrix sum shapes");
	Matrix m = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		m.data_[i] += rhs.data_[i];
	return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
	if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
		throw Error(ErrorCode::ShapeMismatch, "matrix difference shapes");
	Matrix m = *this;
	for (std::size_t i = 0; i < data_.size(); ++i)
		m.data_[i] -= rhs.data_[i];
	return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
	if (cols_ != rhs.rows_)
		throw Error(ErrorCode::ShapeMismatch, "matrix product shapes");
	Matrix m(field_, rows_, rhs.cols_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k) {
			const Scalar& a = (*this)(i, k);
			if (a.is_zero())
				continue;
			for (std::size_t j = 0; j < rhs.cols_; ++j)
				if (!rhs(k, j).is_zero())
					m(i, j) += a * rhs(k, j);
		}
	return m;
}

Vector Matrix::operator*(const Vector& v) const
{
	if (v.size() != cols_)
		throw Error(ErrorCode::ShapeMismatch, "matrix-vector shapes");
	Vector out = zero_vector(field_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t k = 0; k < cols_; ++k)
			if (!(*this)(i, k).is_zero() && !v[k].is_zero())
				out[i] += (*this)(i, k) * v[k];
	return out;
}

Matrix Matrix::operator-() const
{
	Matrix m = *this;
	for (auto& s : m.data_)
		s = -s;
	return m;
}

Matrix Matrix::scaled(const Scalar& s) const
{
	Matrix m = *this;
	for (auto& x : m.data_)
		x *= s;
	return m;
}

Matrix Matrix::transpose() const
{
	Matrix m(field_, cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			m(j, i) = (*this)(i, j);
	return m;
}

Matrix Matrix::pow(std::size_t exponent) const
{
	if (!is_square())
		throw Error(ErrorCode::ShapeMismatch, "power of a non-square matrix");
	Matrix result = identity(field_, rows_);
	Matrix base = *this;
	while (exponent > 0) {
		if (exponent & 1)
			result = result * base;
		exponent >>= 1;
		if (exponent > 0)
			base = base * base;
	}
	return result;
}

bool Matrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_nilpotent() const { return pow(rows_).is_zero(); }

bool Matrix::operator==(const Matrix& rhs) const
{
	return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix vstack(const Matrix& top, const Matrix& bottom)
{
	if (top.cols() != bottom.cols())
		throw Error(ErrorCode::ShapeMismatch, "vstack column counts");
	Matrix m(top.field(), top.rows() + bottom.rows(), top.cols());
	for (std::size_t r = 0; r < top.rows(); ++r)
		for (std::size_t c = 0; c < top.cols(); ++c)
			m(r, c) = top(r, c);
	for (std::size_t r = 0; r < bottom.rows(); ++r)
		for (std::size_t c = 0; c < top.cols(); ++c)
			m(top.rows() + r, c) = bottom(r, c);
	return m;
}

// ---------------------------------------------------------------------------
// Row reduction

RrefResult rref(const Matrix& input)
{
	Matrix m = input;
	const std::size_t rows = m.rows(), cols = m.cols();
	std::vector<std::size_t> pivots;
	std::size_t r = 0;
	for (std::size_t c = 0; c < cols && r < rows; ++c) {
		std::size_t sel = r;
		while (sel < rows && m(sel, c).is_zero())
			++sel;
		if (sel == rows)
			continue;
		if (sel != r)
			for (std::size_t j = 0; j < cols; ++j)
				std::swap(m(sel, j), m(r, j));
		Scalar inv = m(r, c).inverse();
		for (std::size_t j = c; j < cols; ++j)
			m(r, j) *= inv;
		for (std::size_t i = 0; i < rows; ++i) {
			if (i == r || m(i, c).is_zero())
				continue;
			Scalar f = m(i, c);
			for (std::size_t j = c; j < cols; ++j)
				if (!m(r, j).is_zero())
					m(i, j) -= f * m(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	Matrix reduced(m.field(), r, cols);
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			reduced(i, j) = m(i, j);
	return RrefResult{std::move(reduced), r, std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots))
{}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) { return Subspace(Matrix(field, 0, ambient_dim), {}); }

Subspace Subspace::full(Field field, std::size_t ambient_dim)
{
	std::vector<std::size_t> piv(ambient_dim);
	for (std::size_t i = 0; i < ambient_dim; ++i)
		piv[i] = i;
	return Subspace(Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
	return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m)
{
	auto r = rref(m);
	return Subspace(std::move(r.reduced), std::move(r.pivots));
}

void Subspace::require_same_ambient(const Subspace& other) const
{
	if (ambient_dim() != other.ambient_dim())
		throw Error(ErrorCode::AmbientMismatch,
		            std::to_string(ambient_dim()) + " vs " + std::to_string(other.ambient_dim()));
	if (!(field() == other.field()))
		throw Error(ErrorCode::MixedFields, field().name() + " vs " + other.field().name());
}

Vector Subspace::residue(const Vector& v) const
{
	if (v.size() != ambient_dim())
		throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
	Vector r = v;
	for (std::size_t i = 0; i < dim(); ++i) {
		Scalar c = r[pivots_[i]];
		if (c.is_zero())
			continue;
		for (std::size_t j = 0; j < ambient_dim(); ++j)
			if (!basis_(i, j).is_zero())
				r[j] -= c * basis_(i, j);
	}
	return r;
}

Matrix Subspace::residue_matrix() const
{
	const std::size_t n = ambient_dim();
	std::vector<Vector> cols;
	cols.reserve(n);
	for (std::size_t j = 0; j < n; ++j)
		cols.push_back(residue(unit_vector(field(), n, j)));
	return Matrix::from_columns(field(), n, cols);
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(residue(v)); }

bool Subspace::contains(const Subspace& other) const
{
	require_same_ambient(other);
	for (std::size_t i = 0; i < other.dim(); ++i)
		if (!contains(other.basis_vector(i)))
			return false;
	return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
	if (!contains(v))
		throw Error(ErrorCode::PreconditionViolated, "vector is not in the subspace");
	Vector c;
	c.reserve(dim());
	for (auto p : pivots_)
		c.push_back(v[p]);
	return c;
}

Vector Subspace::lift(const Vector& coords) const
{
	if (coords.size() != dim())
		throw Error(ErrorCode::ShapeMismatch, "coordinate count differs from subspace dimension");
	Vector v = zero_vector(field(), ambient_dim());
	for (std::size_t i = 0; i < dim(); ++i)
		axpy(v, coords[i], basis_vector(i));
	return v;
}

Subspace Subspace::coordinates(const Subspace& sub) const
{
	require_same_ambient(sub);
	std::vector<Vector> cs;
	for (const auto& v : sub.basis_vectors())
		cs.push_back(coordinates(v));
	return span(field(), dim(), cs);
}

Subspace Subspace::lift(const Subspace& local) const
{
	if (local.ambient_dim() != dim())
		throw Error(ErrorCode::AmbientMismatch, "local subspace ambient differs from subspace dimension");
	std::vector<Vector> vs;
	for (const auto& c : local.basis_vectors())
		vs.push_back(lift(c));
	return span(field(), ambient_dim(), vs);
}

Subspace Subspace::operator+(const Subspace& other) const
{
	require_same_ambient(other);
	return row_space(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const
{
	require_same_ambient(other);
	const std::size_t n = ambient_dim();
	// columns u_1..u_r, -v_1..-v_s; a kernel vector (l, m) gives sum l_i u_i = sum m_j v_j
	std::vector<Vector> cols;
	for (std::size_t i = 0; i < dim(); ++i)
		cols.push_back(basis_vector(i));
	for (std::size_t j = 0; j < other.dim(); ++j)
		cols.push_back(-other.basis_vector(j));
	Subspace ker = kernel(Matrix::from_columns(field(), n, cols));
	std::vector<Vector> meet;
	for (std::size_t k = 0; k < ker.dim(); ++k) {
		Vector lam = ker.basis_vector(k);
		Vector x = zero_vector(field(), n);
		for (std::size_t i = 0; i < dim(); ++i)
			axpy(x, lam[i], basis_vector(i));
		meet.push_back(std::move(x));
	}
	Subspace result = span(field(), n, meet);
	if (dim() + other.dim() != (*this + other).dim() + result.dim())
		throw Error(ErrorCode::TheoremViolated, "dimension formula failed for intersection");
	return result;
}

std::vector<std::size_t> Subspace::non_pivots() const
{
	std::vector<std::size_t> out;
	std::size_t k = 0;
	for (std::size_t j = 0; j < ambient_dim(); ++j) {
		if (k < pivots_.size() && pivots_[k] == j)
			++k;
		else
			out.push_back(j);
	}
	return out;
}

Subspace Subspace::complement() const
{
	std::vector<Vector> vs;
	for (auto j : non_pivots())
		vs.push_back(unit_vector(field(), ambient_dim(), j));
	return span(field(), ambient_dim(), vs);
}

bool Subspace::operator==(const Subspace& other) const { return basis_ == other.basis_; }

std::strong_ordering Subspace::operator<=>(const Subspace& other) const
{
	if (auto c = ambient_dim() <=> other.ambient_dim(); c != 0)
		return c;
	if (auto c = dim() <=> other.dim(); c != 0)
		return c;
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = 0; j < ambient_dim(); ++j)
			if (auto c = basis_(i, j) <=> other.basis_(i, j); c != 0)
				return c;
	return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Kernels and images

Subspace kernel(const Matrix& m)
{
	auto r = rref(m);
	const std::size_t cols = m.cols();
	std::vector<bool> is_pivot(cols, false);
	for (auto p : r.pivots)
		is_pivot[p] = true;
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < cols; ++f) {
		if (is_pivot[f])
			continue;
		Vector v = unit_vector(m.field(), cols, f);
		for (std::size_t i = 0; i < r.rank; ++i)
			v[r.pivots[i]] = -r.reduced(i, f);
		basis.push_back(std::move(v));
	}
	Subspace k = Subspace::span(m.field(), cols, basis);
	if (k.dim() + r.rank != cols)
		throw Error(ErrorCode::TheoremViolated, "rank-nullity failed");
	return k;
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace generalized_nullspace(const Matrix& m)
{
	if (!m.is_square())
		throw Error(ErrorCode::ShapeMismatch, "generalized nullspace of a non-square matrix");
	return kernel(m.pow(m.rows()));
}

Subspace fitting_image(const Matrix& m)
{
	if (!m.is_square())
		throw Error(ErrorCode::ShapeMismatch, "fitting image of a non-square matrix");
	return image(m.pow(m.rows()));
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs)
{
	if (rhs.size() != m.rows())
		throw Error(ErrorCode::ShapeMismatch, "right-hand side length");
	Matrix aug(m.field(), m.rows(), m.cols() + 1);
	for (std::size_t i = 0; i < m.rows(); ++i) {
		for (std::size_t j = 0; j < m.cols(); ++j)
			aug(i, j) = m(i, j);
		aug(i, m.cols()) = rhs[i];
	}
	auto r = rref(aug);
	if (!r.pivots.empty() && r.pivots.back() == m.cols())
		return std::nullopt;
	Vector x = zero_vector(m.field(), m.cols());
	for (std::size_t i = 0; i < r.rank; ++i)
		x[r.pivots[i]] = r.reduced(i, m.cols());
	return x;
}

// ---------------------------------------------------------------------------
// Counting and enumeration

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
	if (a != 0 && b > saturated / a)
		return saturated;
	return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > saturated - b ? saturated : a + b; }

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp)
{
	std::uint64_t r = 1;
	for (std::size_t i = 0; i < exp; ++i)
		r = sat_mul(r, base);
	return r;
}

} // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q)
{
	if (k > n)
		return 0;
	// row recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
	std::vector<std::uint64_t> row(k + 1, 0);
	row[0] = 1;
	for (std::uint64_t m = 1; m <= n; ++m)
		for (std::uint64_t j = std::min(m, k); j >= 1; --j)
			row[j] = sat_add(row[j - 1], sat_mul(sat_pow(q, j), row[j]));
	return row[k];
}

std::uint64_t subspace_count(std::size_t n, std::uint64_t p, std::optional<std::size_t> dim)
{
	if (dim)
		return gaussian_binomial(n, *dim, p);
	std::uint64_t total = 0;
	for (std::size_t k = 0; k <= n; ++k)
		total = sat_add(total, gaussian_binomial(n, k, p));
	return total;
}

SubspaceEnumerator::SubspaceEnumerator(Field field, std::size_t ambient_dim, std::optional<std::size_t> dim,
                                       std::uint64_t budget)
    : field_(field), n_(ambient_dim)
{
	if (!field.is_finite())
		throw Error(ErrorCode::InfiniteField, "subspace enumeration needs a prime field");
	if (dim && *dim > n_) {
		total_ = 0;
		exhausted_ = true;
		rank_ = last_rank_ = 0;
		return;
	}
	total_ = subspace_count(n_, field.characteristic(), dim);
	if (total_ > budget)
		throw Error(ErrorCode::BudgetExceeded, std::to_string(total_) + " subspaces of " + field.name() + "^" +
		                                           std::to_string(n_) + " exceed budget " + std::to_string(budget));
	rank_ = dim.value_or(0);
	last_rank_ = dim.value_or(n_);
	start_rank();
}

bool SubspaceEnumerator::start_rank()
{
	pivots_.resize(rank_);
	for (std::size_t i = 0; i < rank_; ++i)
		pivots_[i] = i;
	start_pattern();
	return true;
}

bool SubspaceEnumerator::advance_pivots()
{
	const std::size_t r = pivots_.size();
	for (std::size_t i = r; i-- > 0;) {
		if (pivots_[i] < n_ - r + i) {
			++pivots_[i];
			for (std::size_t j = i + 1; j < r; ++j)
				pivots_[j] = pivots_[j - 1] + 1;
			return true;
		}
	}
	return false;
}

void SubspaceEnumerator::start_pattern()
{
	free_.clear();
	std::vector<bool> is_pivot(n_, false);
	for (auto p : pivots_)
		is_pivot[p] = true;
	for (std::size_t i = 0; i < pivots_.size(); ++i)
		for (std::size_t j = pivots_[i] + 1; j < n_; ++j)
			if (!is_pivot[j])
				free_.emplace_back(i, j);
	digits_.assign(free_.size(), 0);
	pattern_live_ = true;
}

Subspace SubspaceEnumerator::build() const
{
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < pivots_.size(); ++i)
		rows.push_back(unit_vector(field_, n_, pivots_[i]));
	for (std::size_t k = 0; k < free_.size(); ++k)
		rows[free_[k].first][free_[k].second] = Scalar(field_, digits_[k]);
	return Subspace::span(field_, n_, rows);
}

std::optional<Subspace> SubspaceEnumerator::next()
{
	if (exhausted_)
		return std::nullopt;
	Subspace out = build();
	const std::uint64_t p = field_.characteristic();
	std::size_t k = 0;
	while (k < digits_.size()) {
		if (++digits_[k] < p)
			break;
		digits_[k] = 0;
		++k;
	}
	if (k == digits_.size()) {
		if (advance_pivots()) {
			start_pattern();
		} else if (rank_ < last_rank_) {
			++rank_;
			start_rank();
		} else {
			exhausted_ = true;
		}
	}
	return out;
}

VectorEnumerator::VectorEnumerator(Field field, std::size_t n) : field_(field), n_(n)
{
	if (field.is_finite()) {
		values_ = first_elements(field, field.characteristic());
		level_ = values_.size();
	}
}

bool VectorEnumerator::advance()
{
	// odometer over digits in [0, level_)
	std::size_t k = 0;
	while (k < n_) {
		if (++digits_[k] < level_)
			return true;
		digits_[k] = 0;
		++k;
	}
	return false;
}

std::optional<Vector> VectorEnumerator::next()
{
	if (done_)
		return std::nullopt;
	auto emit = [&]() {
		Vector v;
		v.reserve(n_);
		for (auto d : digits_)
			v.push_back(values_[d]);
		return v;
	};
	if (field_.is_finite()) {
		if (!started_) {
			started_ = true;
			digits_.assign(n_, 0);
			return emit();
		}
		if (!advance()) {
			done_ = true;
			return std::nullopt;
		}
		return emit();
	}
	if (n_ == 0) {
		done_ = true;
		return Vector{};
	}
	auto uses_newest = [&]() {
		return std::any_of(digits_.begin(), digits_.end(), [&](std::size_t d) { return d + 1 == level_; });
	};
	if (!started_) {
		started_ = true;
		level_ = 1;
		values_ = first_elements(field_, 1);
		digits_.assign(n_, 0);
		return emit();
	}
	for (;;) {
		if (!advance()) {
			++level_;
			values_ = first_elements(field_, level_);
			digits_.assign(n_, 0);
		}
		if (uses_newest())
			return emit();
	}
}

void for_each_vector(Field field, std::size_t n, std::uint64_t budget, const std::function<void(const Vector&)>& fn)
{
	if (!field.is_finite())
		throw Error(ErrorCode::InfiniteField, "vector enumeration needs a prime field");
	std::uint64_t count = sat_pow(field.characteristic(), n);
	if (count > budget)
		throw Error(ErrorCode::BudgetExceeded,
		            std::to_string(count) + " vectors exceed budget " + std::to_string(budget));
	VectorEnumerator it(field, n);
	while (auto v = it.next())
		fn(*v);
}

void for_each_projective_point(Field field, std::size_t n, std::uint64_t budget,
                               const std::function<void(const Vector&)>& fn)
{
	if (!field.is_finite())
		throw Error(ErrorCode::InfiniteField, "point enumeration needs a prime field");
	std::uint64_t count = gaussian_binomial(n, 1, field.characteristic());
	if (count > budget)
		throw Error(ErrorCode::BudgetExceeded,
		            std::to_string(count) + " points exceed budget " + std::to_string(budget));
	// leading 1 at position lead, arbitrary entries after it
	for (std::size_t lead = 0; lead < n; ++lead) {
		VectorEnumerator tail(field, n - lead - 1);
		while (auto t = tail.next()) {
			Vector v = zero_vector(field, n);
			v[lead] = field.one();
			for (std::size_t j = 0; j < t->size(); ++j)
				v[lead + 1 + j] = (*t)[j];
			fn(v);
		}
	}
}

} // namespace leibniz
