#include "leibniz/field.hpp"

#include <numeric>

namespace leibniz {

std::string_view error_code_name(ErrorCode code)
{
	switch (code) {
	case ErrorCode::DivisionByZero: return "DivisionByZero";
	case ErrorCode::MixedFields: return "MixedFields";
	case ErrorCode::InvalidField: return "InvalidField";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::AmbientMismatch: return "AmbientMismatch";
	case ErrorCode::ShapeMismatch: return "ShapeMismatch";
	case ErrorCode::BudgetExceeded: return "BudgetExceeded";
	case ErrorCode::InfiniteField: return "InfiniteField";
	case ErrorCode::NotAnIdeal: return "NotAnIdeal";
	case ErrorCode::NotClosed: return "NotClosed";
	case ErrorCode::NotLeibniz: return "NotLeibniz";
	case ErrorCode::FieldTooSmall: return "FieldTooSmall";
	case ErrorCode::CertificationFailed: return "CertificationFailed";
	case ErrorCode::PreconditionViolated: return "PreconditionViolated";
	case ErrorCode::HypothesisViolated: return "HypothesisViolated";
	case ErrorCode::TheoremViolated: return "TheoremViolated";
	case ErrorCode::NoComplementNeeded: return "NoComplementNeeded";
	case ErrorCode::NotAbelianIdeal: return "NotAbelianIdeal";
	case ErrorCode::NotLie: return "NotLie";
	case ErrorCode::NotBimodule: return "NotBimodule";
	case ErrorCode::RetryBudgetExceeded: return "RetryBudgetExceeded";
	}
	return "Unknown";
}

bool is_prime(std::uint64_t n)
{
	if (n < 2)
		return false;
	for (std::uint64_t d = 2; d * d <= n; ++d)
		if (n % d == 0)
			return false;
	return true;
}

Field Field::prime(std::uint64_t p)
{
	if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
		throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a supported prime");
	return Field(Kind::PrimeField, p);
}

std::string Field::name() const
{
	if (is_finite())
		return "F_" + std::to_string(p_);
	return "Q";
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const
{
	if (!is_finite())
		return Scalar(*this, mpq_class(value));
	long r = value % static_cast<long>(p_);
	if (r < 0)
		r += static_cast<long>(p_);
	return Scalar(*this, static_cast<std::uint64_t>(r));
}

Scalar Field::from_fraction(long num, long den) const
{
	if (den == 0)
		throw Error(ErrorCode::DivisionByZero, "zero denominator");
	return from_int(num) / from_int(den);
}

Scalar Field::parse(const std::string& text) const
{
	auto parse_integer = [&](const std::string& s) {
		mpz_class z;
		if (s.empty() || z.set_str(s, 10) != 0)
			throw Error(ErrorCode::ParseError, "invalid scalar '" + text + "'");
		return z;
	};
	std::string body = text;
	if (!body.empty() && body.front() == '+')
		body.erase(0, 1);
	auto slash = body.find('/');
	mpz_class num = parse_integer(body.substr(0, slash));
	mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_integer(body.substr(slash + 1));
	if (den == 0)
		throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
	if (!is_finite()) {
		mpq_class q(num, den);
		q.canonicalize();
		return Scalar(*this, q);
	}
	mpz_class p(static_cast<unsigned long>(p_));
	mpz_class rn = num % p, rd = den % p;
	if (rn < 0)
		rn += p;
	if (rd < 0)
		rd += p;
	if (rd == 0)
		throw Error(ErrorCode::DivisionByZero, "denominator divisible by p in '" + text + "'");
	return Scalar(*this, static_cast<std::uint64_t>(rn.get_ui())) /
	       Scalar(*this, static_cast<std::uint64_t>(rd.get_ui()));
}

Scalar::Scalar(Field field, mpq_class value) : field_(field)
{
	if (field.is_finite())
		throw Error(ErrorCode::MixedFields, "rational value for a prime field");
	value.canonicalize();
	value_ = std::move(value);
}

Scalar::Scalar(Field field, std::uint64_t residue) : field_(field)
{
	if (!field.is_finite())
		throw Error(ErrorCode::MixedFields, "residue for the rationals");
	value_ = residue % field.characteristic();
}

void Scalar::require_same_field(const Scalar& rhs) const
{
	if (!(field_ == rhs.field_))
		throw Error(ErrorCode::MixedFields, field_.name() + " vs " + rhs.field_.name());
}

bool Scalar::is_zero() const
{
	if (field_.is_finite())
		return residue() == 0;
	return sgn(rational()) == 0;
}

bool Scalar::is_one() const
{
	if (field_.is_finite())
		return residue() == 1;
	return rational() == 1;
}

Scalar Scalar::operator+(const Scalar& rhs) const
{
	require_same_field(rhs);
	if (field_.is_finite())
		return Scalar(field_, (residue() + rhs.residue()) % field_.characteristic());
	return Scalar(field_, mpq_class(rational() + rhs.rational()));
}

Scalar Scalar::operator-(const Scalar& rhs) const
{
	require_same_field(rhs);
	if (field_.is_finite()) {
		auto p = field_.characteristic();
		return Scalar(field_, (residue() + p - rhs.residue()) % p);
	}
	return Scalar(field_, mpq_class(rational() - rhs.rational()));
}

Scalar Scalar::operator*(const Scalar& rhs) const
{
	require_same_field(rhs);
	if (field_.is_finite())
		return Scalar(field_, (residue() * rhs.residue()) % field_.characteristic());
	return Scalar(field_, mpq_class(rational() * rhs.rational()));
}

Scalar Scalar::operator/(const Scalar& rhs) const
{
	require_same_field(rhs);
	return *this * rhs.inverse();
}

Scalar Scalar::operator-() const
{
	if (field_.is_finite()) {
		auto p = field_.characteristic();
		return Scalar(field_, (p - residue()) % p);
	}
	return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inverse() const
{
	if (is_zero())
		throw Error(ErrorCode::DivisionByZero, "inverse of zero");
	if (!field_.is_finite())
		return Scalar(field_, mpq_class(1 / rational()));
	// extended Euclid on (residue, p)
	std::int64_t a = static_cast<std::int64_t>(residue());
	std::int64_t m = static_cast<std::int64_t>(field_.characteristic());
	std::int64_t x0 = 1, x1 = 0, b = m;
	while (b != 0) {
		std::int64_t q = a / b;
		std::int64_t t = a - q * b;
		a = b;
		b = t;
		t = x0 - q * x1;
		x0 = x1;
		x1 = t;
	}
	if (x0 < 0)
		x0 += m;
	return Scalar(field_, static_cast<std::uint64_t>(x0));
}

Scalar Scalar::pow(std::uint64_t exponent) const
{
	Scalar result = field_.one();
	Scalar base = *this;
	while (exponent > 0) {
		if (exponent & 1)
			result *= base;
		base *= base;
		exponent >>= 1;
	}
	return result;
}

bool Scalar::operator==(const Scalar& rhs) const
{
	if (!(field_ == rhs.field_))
		return false;
	if (field_.is_finite())
		return residue() == rhs.residue();
	return rational() == rhs.rational();
}

std::strong_ordering Scalar::operator<=>(const Scalar& rhs) const
{
	require_same_field(rhs);
	if (field_.is_finite())
		return residue() <=> rhs.residue();
	int c = cmp(rational(), rhs.rational());
	return c < 0 ? std::strong_ordering::less
	             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const
{
	if (field_.is_finite())
		return std::to_string(residue());
	return rational().get_str();
}

FieldEnumerator::FieldEnumerator(Field field) : field_(field) {}

void FieldEnumerator::fill_next_height()
{
	++height_;
	batch_.clear();
	position_ = 0;
	const long h = height_;
	for (long d = 1; d <= h; ++d) {
		auto push = [&](long n) {
			batch_.push_back(mpq_class(mpz_class(n), mpz_class(d)));
			if (n != 0)
				batch_.push_back(mpq_class(mpz_class(-n), mpz_class(d)));
		};
		if (d < h) {
			if (std::gcd(h, d) == 1)
				push(h);
		} else {
			for (long n = (h == 1 ? 0 : 1); n <= h; ++n)
				if (n == 0 || ((n < h || h == 1) && std::gcd(n, d) == 1))
					push(n);
		}
	}
}

std::optional<Scalar> FieldEnumerator::next()
{
	if (field_.is_finite()) {
		if (residue_ >= field_.characteristic())
			return std::nullopt;
		return Scalar(field_, residue_++);
	}
	while (position_ >= batch_.size())
		fill_next_height();
	return Scalar(field_, batch_[position_++]);
}

std::vector<Scalar> first_elements(Field field, std::size_t count)
{
	std::vector<Scalar> out;
	FieldEnumerator it(field);
	while (out.size() < count) {
		auto s = it.next();
		if (!s)
			break;
		out.push_back(*s);
	}
	return out;
}

} // namespace leibniz
