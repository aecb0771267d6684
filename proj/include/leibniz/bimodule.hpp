#pragma once

#include <cstdint>
#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

/**
 * A Leibniz bimodule M of A as a pair of linear maps a -> T_a (left action,
 * T_a(m) = a m) and a -> S_a (right action, S_a(m) = m a), stored on the
 * basis of A. Construction only checks shapes; verify_bimodule() checks
 * the axioms.
 */
class Bimodule
{
  public:
	Bimodule(Algebra algebra, std::size_t module_dim, std::vector<Matrix> t, std::vector<Matrix> s);

	const Algebra& algebra() const noexcept { return algebra_; }
	std::size_t module_dim() const noexcept { return module_dim_; }
	const Matrix& t_basis(std::size_t i) const { return t_.at(i); }
	const Matrix& s_basis(std::size_t i) const { return s_.at(i); }

	Matrix t(const Element& a) const;
	Matrix s(const Element& a) const;

  private:
	Algebra algebra_;
	std::size_t module_dim_;
	std::vector<Matrix> t_;
	std::vector<Matrix> s_;
};

struct BimoduleFailure
{
	int identity; ///< 1: T_aT_b = T_ab + T_bT_a, 2: T_aS_b = S_bT_a + S_ab, 3: S_ab = S_bS_a + T_aS_b
	std::size_t i, j;
};

struct BimoduleVerdict
{
	std::optional<BimoduleFailure> failure;
	bool holds() const noexcept { return !failure.has_value(); }
};

BimoduleVerdict verify_bimodule(const Bimodule& b);

/// A acting on itself: T = L, S = R.
Bimodule regular_bimodule(const Algebra& a);

/// A two-sided ideal M of A as a bimodule, acted on by left and right multiplication.
Bimodule ideal_bimodule(const Algebra& a, const Subspace& ideal);

/// Lie-module constructions: S = 0 or S = -T from a representation T of a Lie algebra.
enum class RightAction { Zero, MinusLeft };
Bimodule lie_bimodule(const Algebra& lie, std::size_t module_dim, std::vector<Matrix> t, RightAction mode);

struct EngelWitnessOptions
{
	std::size_t random_samples = 20;
	std::uint64_t seed = 0x5eed;
	/// Over F_p, every element is checked when p^dim(A) is at most this.
	std::uint64_t exhaustive_limit = 4096;
};

/**
 * A nonzero m with T_a m = S_a m = 0 for all a, for a bimodule on which all
 * T_a are nilpotent. The hypothesis is checked on the basis, then on every
 * element (small F_p) or on a seeded sample; a failure raises
 * HypothesisViolated. Non-nilpotent S_a or an empty joint kernel raise
 * TheoremViolated. The returned vector is the first canonical basis vector
 * of the joint kernel.
 */
Vector engel_witness(const Bimodule& b, const EngelWitnessOptions& options = {});

/// Deterministic pseudo-random element: uniform residues over F_p, integers in [-3, 3] over Q.
Element random_element(const Algebra& a, std::uint64_t& state);

/// splitmix64 step
std::uint64_t next_random(std::uint64_t& state);

} // namespace leibniz
