#pragma once

/**
 * Ideal-theoretic structure by exhaustive enumeration over prime fields:
 * minimal ideals, socle, maximal subalgebras, Frattini subalgebra,
 * primitivity, complements to the socle and their conjugacy.
 *
 * Everything here that enumerates throws InfiniteField over Q and
 * BudgetExceeded when the candidate count exceeds the budget.
 */

#include <optional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Smallest two-sided ideal containing the given vectors.
Subspace ideal_closure(const Algebra& a, const Subspace& v);
Subspace ideal_closure(const Algebra& a, const Element& v);

/// Inclusion-minimal ideal closures of projective points, sorted canonically.
std::vector<Subspace> minimal_ideals(const Algebra& a, std::uint64_t budget = default_budget);

Subspace socle(const Algebra& a, std::uint64_t budget = default_budget);

/// Every closed subspace (subalgebra), in enumeration order.
std::vector<Subspace> all_subalgebras(const Algebra& a, std::uint64_t budget = default_budget);

/// Inclusion-maximal proper subalgebras.
std::vector<Subspace> maximal_subalgebras(const Algebra& a, std::uint64_t budget = default_budget);

/// Intersection of the maximal subalgebras (A itself when there are none).
Subspace frattini(const Algebra& a, std::uint64_t budget = default_budget);

struct FrattiniVerdict
{
	bool holds; ///< U is nilpotent
};

/**
 * Given U right subnormal in A, V a two-sided ideal of U inside the
 * Frattini subalgebra and U/V nilpotent, checks that U is nilpotent.
 * Throws PreconditionViolated naming the first hypothesis that fails.
 */
FrattiniVerdict frattini_nilpotency_check(const Algebra& a, const Subalgebra& u, const Subspace& v,
                                          std::uint64_t budget = default_budget);
/// As above with Phi(A) already computed.
FrattiniVerdict frattini_nilpotency_check(const Algebra& a, const Subalgebra& u, const Subspace& v,
                                          const Subspace& phi);

struct PrimitiveCertificate
{
	Subspace socle;
	std::optional<Subspace> complement;
	bool is_lie;
};

/// Soluble with a minimal ideal C equal to its own centraliser. The returned
/// certificate has no complement yet.
std::optional<PrimitiveCertificate> is_primitive(const Algebra& a, std::uint64_t budget = default_budget);

/// M = E_P(b) for b in the preimage of a minimal ideal of P/C with L_b(C) != 0.
/// Throws NoComplementNeeded when P = C.
Subspace primitive_complement(const Algebra& p, const PrimitiveCertificate& cert,
                              std::uint64_t budget = default_budget);

/// alpha_c = 1 + L_c.
Matrix conjugation_map(const Algebra& a, const Element& c);

/// Some c in the abelian ideal C with (1 + L_c)(U) = V, if any.
/// Throws NotAbelianIdeal when C is not an abelian two-sided ideal.
std::optional<Element> conjugating_element(const Algebra& a, const Subspace& c_ideal, const Subspace& u,
                                           const Subspace& v);

/// Subalgebras M with M + C = A and M cap C = 0.
std::vector<Subspace> complements(const Algebra& a, const Subspace& c, std::uint64_t budget = default_budget);

struct ConjugacyPair
{
	std::size_t first, second;
	Element conjugator;
};

struct ConjugacyReport
{
	bool holds;
	std::vector<Subspace> complements;
	std::vector<ConjugacyPair> pairs;
	std::string detail; ///< empty when holds
};

/// Enumerates all complements to the socle and checks they are pairwise
/// C-conjugate, and that there is exactly one when P is not Lie.
ConjugacyReport conjugacy_theorem_check(const Algebra& p, const PrimitiveCertificate& cert,
                                        std::uint64_t budget = default_budget);

} // namespace leibniz
