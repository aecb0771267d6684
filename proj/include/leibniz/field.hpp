#pragma once

/**
 * Exact scalars over the rationals and over prime fields F_p.
 *
 * A Field is a small value describing where arithmetic happens. A Scalar
 * carries its Field and is always kept in canonical form: rationals in
 * lowest terms with positive denominator, residues in [0, p).
 * Mixing scalars from different fields raises ErrorCode::MixedFields.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "leibniz/error.hpp"

namespace leibniz {

class Scalar;

class Field
{
  public:
	enum class Kind { Rationals, PrimeField };

	static Field rationals() { return Field(Kind::Rationals, 0); }

	/// Throws InvalidField unless p is a prime below 2^32.
	static Field prime(std::uint64_t p);

	Kind kind() const noexcept { return kind_; }
	bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
	std::uint64_t characteristic() const noexcept { return p_; }

	/// Number of elements, or nullopt for the (infinite) rationals.
	std::optional<std::uint64_t> cardinality() const
	{
		if (is_finite())
			return p_;
		return std::nullopt;
	}

	/// True if the field has at least `n` elements.
	bool has_at_least(std::uint64_t n) const { return !is_finite() || p_ >= n; }

	/// "Q" or "F_p".
	std::string name() const;

	Scalar zero() const;
	Scalar one() const;
	Scalar from_int(long value) const;
	Scalar from_fraction(long num, long den) const;

	/// Parses "num", "-num" or "num/den". Over F_p the value is reduced mod p.
	Scalar parse(const std::string& text) const;

	bool operator==(const Field&) const = default;

  private:
	Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

	Kind kind_;
	std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

class Scalar
{
  public:
	Scalar(Field field, mpq_class value);
	Scalar(Field field, std::uint64_t residue);

	const Field& field() const noexcept { return field_; }

	bool is_zero() const;
	bool is_one() const;

	Scalar operator+(const Scalar& rhs) const;
	Scalar operator-(const Scalar& rhs) const;
	Scalar operator*(const Scalar& rhs) const;
	Scalar operator/(const Scalar& rhs) const;
	Scalar operator-() const;
	Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
	Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
	Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
	Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }

	Scalar inverse() const;
	Scalar pow(std::uint64_t exponent) const;

	/// Equality requires equal fields; scalars of different fields compare unequal.
	bool operator==(const Scalar& rhs) const;

	/// A total order used for canonical containers. Over Q it is the numeric
	/// order, over F_p the order of residues in [0, p).
	std::strong_ordering operator<=>(const Scalar& rhs) const;

	/// "num/den" or "num" over Q, the decimal residue over F_p.
	std::string to_string() const;

	/// Only meaningful over Q.
	const mpq_class& rational() const { return std::get<mpq_class>(value_); }
	/// Only meaningful over F_p.
	std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  private:
	void require_same_field(const Scalar& rhs) const;

	Field field_;
	std::variant<mpq_class, std::uint64_t> value_;
};

/**
 * Deterministic stream of field elements.
 *
 * Over F_p it yields 0, 1, ..., p-1 and then stops. Over Q it never stops and
 * yields every rational exactly once, ordered by height max(|num|, den), then
 * by denominator, then by |num|, positive before negative:
 * 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, -1/3, 2/3, -2/3, ...
 */
class FieldEnumerator
{
  public:
	explicit FieldEnumerator(Field field);

	std::optional<Scalar> next();

  private:
	void fill_next_height();

	Field field_;
	std::uint64_t residue_ = 0;
	long height_ = 0;
	std::vector<mpq_class> batch_;
	std::size_t position_ = 0;
};

/// The first `count` elements of the canonical enumeration (fewer if the field is smaller).
std::vector<Scalar> first_elements(Field field, std::size_t count);

} // namespace leibniz
