#pragma once

/**
 * Engel subalgebras E_A(a) = generalized nullspace of L_a, Fitting
 * decompositions, and Cartan subalgebras found by descent through
 * Engel subalgebras.
 */

#include <optional>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct EngelSubalgebra
{
	Element base_element;
	Subspace space;         ///< kernel of L_a^n
	Subspace fitting_image; ///< image of L_a^n
};

/// E_A(a) together with the complementary Fitting component. Note that a
/// itself need not lie in E_A(a).
EngelSubalgebra engel_subalgebra(const Algebra& a, const Element& x);

/// The subalgebra generated by x: span of x, x^2, x^3, ...
Subspace generated_subalgebra(const Algebra& a, const Element& x);

/**
 * An element x' of E_A(x) with L_{x'} = L_x: writes x = x' + b inside the
 * subalgebra generated by x, with x' in the null part and b in the image
 * part of L_x restricted there. Then b is a sum of powers of degree >= 2,
 * so L_b = 0.
 */
Element engel_representative(const Algebra& a, const Element& x);

struct SelfNormalizingVerdict
{
	bool holds;
	std::optional<Vector> counterexample; ///< in the right normaliser but not in U
};

/// Requires E_A(x) in U (PreconditionViolated otherwise) and checks that the
/// right normaliser of U is U.
SelfNormalizingVerdict check_right_self_normalizing(const Algebra& a, const Subalgebra& u, const Element& x);

struct CartanCertificate
{
	Subalgebra subalgebra;
	std::size_t nilpotency_class;
	bool normalizer_equal;
	std::optional<Element> witness_element; ///< some a with E_A(a) = the subalgebra
};

bool is_cartan(const Algebra& a, const Subalgebra& u);

/// A certificate when u is Cartan, nullopt otherwise.
std::optional<CartanCertificate> certify_cartan(const Algebra& a, const Subalgebra& u,
                                                std::optional<Element> witness = std::nullopt);

/**
 * A minimal Engel subalgebra, certified Cartan. Starts from the basis vector
 * with the smallest Engel subalgebra; while the current E = E_A(a) is not
 * nilpotent, picks u in E with L_u not nilpotent on E and replaces a by
 * a + t u for the first of dim(A)+1 canonical scalars t with E_A(a + t u)
 * strictly inside E.
 *
 * Throws FieldTooSmall when the field has fewer than dim(A)+1 elements and
 * CertificationFailed if the result is not Cartan.
 */
CartanCertificate minimal_engel_search(const Algebra& a);

/// Image of C + K in A/K, certified Cartan there.
CartanCertificate cartan_in_quotient(const Algebra& a, const Subspace& k, const CartanCertificate& c);

/// The certificate's subalgebra lives in coordinates of the ideal N (as
/// produced by restrict); this checks N + N_A(C) = A.
bool intravariance_check(const Algebra& a, const Subspace& n_ideal, const CartanCertificate& c);

} // namespace leibniz
