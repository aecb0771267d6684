#include "leibniz/suite.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "leibniz/engel.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

struct Outcome
{
	CheckStatus status;
	std::string detail;
};

Outcome pass(std::string d) { return {CheckStatus::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {CheckStatus::Skip, std::move(d)}; }

std::uint64_t fnv1a(const std::string& s)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : s) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

std::string coords(const Vector& v)
{
	std::string out = "(";
	for (std::size_t i = 0; i < v.size(); ++i)
		out += (i ? "," : "") + v[i].to_string();
	return out + ")";
}

class Context
{
  public:
	Context(const std::string& name, const Algebra& a, const SuiteOptions& opt) : a(a), opt(opt)
	{
		for (std::size_t i = 0; i < a.dim(); ++i)
			elements.push_back(a.basis_element(i));
		std::uint64_t state = opt.seed ^ fnv1a(name);
		for (std::size_t k = 0; k < opt.samples && a.dim() > 0; ++k)
			elements.push_back(random_element(a, state));
	}

	const Algebra& a;
	const SuiteOptions& opt;
	std::vector<Element> elements;

	bool finite() const { return a.field().is_finite(); }

	/// p^dim when within the budget.
	bool exhaustive_elements() const
	{
		if (!finite())
			return false;
		std::uint64_t count = 1;
		for (std::size_t i = 0; i < a.dim(); ++i) {
			count *= a.field().characteristic();
			if (count > opt.budget)
				return false;
		}
		return true;
	}

	template <class Fn>
	void for_each_element(Fn&& fn) const
	{
		for_each_vector(a.field(), a.dim(), opt.budget, fn);
	}

	const std::vector<Subspace>& subalgebras()
	{
		if (!subalgebras_)
			subalgebras_ = all_subalgebras(a, opt.budget);
		return *subalgebras_;
	}

	const std::vector<Subspace>& maximal()
	{
		if (!maximal_) {
			std::vector<Subspace> out;
			const auto& subs = subalgebras();
			for (const auto& m : subs) {
				if (m.is_full())
					continue;
				bool is_max = true;
				for (const auto& o : subs)
					if (!o.is_full() && o.dim() > m.dim() && o.contains(m)) {
						is_max = false;
						break;
					}
				if (is_max)
					out.push_back(m);
			}
			maximal_ = std::move(out);
		}
		return *maximal_;
	}

	const CartanCertificate& cartan()
	{
		if (!cartan_)
			cartan_ = minimal_engel_search(a);
		return *cartan_;
	}

	/// Canonical ideals: series terms, centres and, over F_p, the minimal ideals.
	std::vector<Subspace> ideals()
	{
		std::set<Subspace> found;
		for (const auto& s : lower_central_series(a))
			found.insert(s);
		for (const auto& s : derived_series(a))
			found.insert(s);
		found.insert(left_centre(a));
		found.insert(centre(a));
		if (finite()) {
			try {
				for (const auto& m : minimal_ideals(a, opt.budget))
					found.insert(m);
			} catch (const Error& e) {
				if (e.code() != ErrorCode::BudgetExceeded)
					throw;
			}
		}
		std::vector<Subspace> out;
		for (const auto& s : found)
			if (is_ideal(a, s))
				out.push_back(s);
		return out;
	}

  private:
	std::optional<std::vector<Subspace>> subalgebras_;
	std::optional<std::vector<Subspace>> maximal_;
	std::optional<CartanCertificate> cartan_;
};

Outcome check_operators(Context& c)
{
	const Algebra& a = c.a;
	if (auto v = verify_leibniz(a); !v.holds())
		return fail("identity fails on basis triple (" + std::to_string(v.failure->i + 1) + "," +
		            std::to_string(v.failure->j + 1) + "," + std::to_string(v.failure->k + 1) + ")");
	const auto& els = c.elements;
	std::size_t pairs = 0;
	for (std::size_t i = 0; i < els.size(); ++i)
		for (std::size_t j = i; j < els.size(); j += 3) {
			const Matrix lx = a.left_mult(els[i]), ly = a.left_mult(els[j]);
			if (!(a.left_mult(a.multiply(els[i], els[j])) == lx * ly - ly * lx))
				return fail("L_ab != [L_a, L_b] for a = " + coords(els[i]) + ", b = " + coords(els[j]));
			++pairs;
		}
	return pass(std::to_string(pairs) + " pairs");
}

/// Every bracketing of the word x_i ... x_j.
std::vector<Element> bracketings(const Algebra& a, const std::vector<Element>& word, std::size_t i, std::size_t j)
{
	if (i == j)
		return {word[i]};
	std::vector<Element> out;
	for (std::size_t m = i; m < j; ++m)
		for (const auto& l : bracketings(a, word, i, m))
			for (const auto& r : bracketings(a, word, m + 1, j))
				out.push_back(a.multiply(l, r));
	return out;
}

Outcome check_power(Context& c)
{
	const Algebra& a = c.a;
	const auto series = lower_central_series(a);
	auto term = [&](std::size_t k) { return series[std::min(k - 1, series.size() - 1)]; };
	std::size_t products = 0;
	for (std::size_t e = 0; e < c.elements.size(); ++e) {
		const Element& x = c.elements[e];
		for (std::size_t k = 2; k <= 4; ++k) {
			const std::vector<Element> word(k, x);
			const Element normed = a.power(x, k);
			for (const auto& b : bracketings(a, word, 0, k - 1)) {
				++products;
				if (!a.left_mult(b).is_zero())
					return fail("L_b != 0 for a bracketed power of degree " + std::to_string(k) + " of " + coords(x));
				if (!is_zero(b) && b != normed)
					return fail("nonzero bracketed power of degree " + std::to_string(k) + " of " + coords(x) +
					            " differs from the left-normed power");
			}
			std::vector<Element> mixed;
			for (std::size_t t = 0; t < k; ++t)
				mixed.push_back(c.elements[(e + 3 * t) % c.elements.size()]);
			for (const auto& b : bracketings(a, mixed, 0, k - 1)) {
				++products;
				if (!term(k).contains(b))
					return fail("a product of " + std::to_string(k) + " elements lies outside A^" + std::to_string(k));
			}
		}
	}
	return pass(std::to_string(products) + " bracketed products");
}

Outcome check_left_centre(Context& c)
{
	const Algebra& a = c.a;
	const Subspace z = left_centre(a);
	if (!is_ideal(a, z))
		return fail("left centre is not a two-sided ideal");
	for (const auto& x : c.elements)
		if (!z.contains(a.multiply(x, x)))
			return fail("square of " + coords(x) + " lies outside the left centre");
	if (!is_lie_quotient(a))
		return fail("quotient by the left centre is not Lie");
	if (a.is_lie() && !(z == centre(a)))
		return fail("Lie algebra whose left centre differs from its centre");
	return pass("left centre dim " + std::to_string(z.dim()));
}

Outcome check_normalizer_growth(Context& c)
{
	const Algebra& a = c.a;
	if (!is_nilpotent(a))
		return skip("A is not nilpotent");
	std::vector<Subspace> subs;
	if (c.finite()) {
		subs = c.subalgebras();
	} else {
		for (const auto& x : c.elements)
			subs.push_back(generated_subalgebra(a, x));
		for (const auto& s : lower_central_series(a))
			subs.push_back(s);
	}
	std::size_t tested = 0;
	for (const auto& u : subs) {
		if (u.is_full())
			continue;
		++tested;
		if (normalizers(a, Subalgebra::of(a, u)).full == u)
			return fail("proper subalgebra equal to its normalizer");
	}
	return pass(std::to_string(tested) + " proper subalgebras");
}

Outcome check_absolute_engel(Context& c)
{
	const Algebra& a = c.a;
	bool all_nil = true;
	std::optional<Element> witness;
	auto test = [&](const Element& x) {
		if (all_nil && !a.left_mult(x).is_nilpotent()) {
			all_nil = false;
			witness = x;
		}
	};
	const bool exhaustive = c.exhaustive_elements();
	if (exhaustive)
		c.for_each_element(test);
	else
		for (const auto& x : c.elements)
			test(x);
	const bool nil = is_nilpotent(a);
	if (nil && !all_nil)
		return fail("nilpotent algebra with non-nilpotent L_a at a = " + coords(*witness));
	if (!nil && all_nil) {
		if (exhaustive)
			return fail("every L_a nilpotent but A is not nilpotent");
		return skip("sampled L_a all nilpotent on a non-nilpotent algebra");
	}
	return pass(std::string(nil ? "nilpotent" : "not nilpotent") + (exhaustive ? ", exhaustive" : ", sampled"));
}

Outcome check_char0(Context& c)
{
	const Algebra& a = c.a;
	if (c.finite())
		return skip("field of positive characteristic");
	if (!is_soluble(a))
		return skip("A is not soluble");
	const Subspace full = Subspace::full(a.field(), a.dim());
	const Subspace a2 = product_space(a, full, full);
	if (!is_nilpotent(restrict(a, Subalgebra::of(a, a2))))
		return fail("soluble rational algebra with non-nilpotent A^2");
	return pass("A^2 nilpotent, dim " + std::to_string(a2.dim()));
}

Outcome check_fitting(Context& c)
{
	const Algebra& a = c.a;
	for (const auto& x : c.elements) {
		const EngelSubalgebra e = engel_subalgebra(a, x);
		if (!is_closed(a, e.space))
			return fail("E_A(a) not closed for a = " + coords(x));
		if (e.space.dim() + e.fitting_image.dim() != a.dim() || !e.space.intersect(e.fitting_image).is_zero())
			return fail("Fitting decomposition not direct for a = " + coords(x));
	}
	return pass(std::to_string(c.elements.size()) + " elements");
}

Outcome check_representative(Context& c)
{
	const Algebra& a = c.a;
	for (const auto& x : c.elements) {
		const Element r = engel_representative(a, x);
		const Subspace e = engel_subalgebra(a, x).space;
		if (!e.contains(r))
			return fail("representative outside E_A(a) for a = " + coords(x));
		if (!(a.left_mult(r) == a.left_mult(x)))
			return fail("L_a' != L_a for a = " + coords(x));
		if (!(engel_subalgebra(a, r).space == e))
			return fail("E_A(a') != E_A(a) for a = " + coords(x));
	}
	return pass(std::to_string(c.elements.size()) + " elements");
}

Outcome check_self_normalizing(Context& c)
{
	const Algebra& a = c.a;
	std::size_t tested = 0;
	for (const auto& x : c.elements) {
		const Subspace e = engel_subalgebra(a, x).space;
		std::vector<Subspace> overs{e};
		if (c.finite())
			for (const auto& u : c.subalgebras())
				if (u.contains(e) && !(u == e))
					overs.push_back(u);
		for (const auto& u : overs) {
			++tested;
			auto v = check_right_self_normalizing(a, Subalgebra::of(a, u), x);
			if (!v.holds)
				return fail("right normalizer exceeds a subalgebra containing E_A(a), a = " + coords(x));
		}
	}
	return pass(std::to_string(tested) + " subalgebras");
}

Outcome check_maximal_right(Context& c)
{
	const Algebra& a = c.a;
	if (!c.finite())
		return skip("needs a prime field");
	const auto& maxes = c.maximal();
	bool all_right = true, all_ideal = true;
	for (const auto& m : maxes) {
		all_right = all_right && is_right_ideal(a, m);
		all_ideal = all_ideal && is_ideal(a, m);
	}
	const bool nil = is_nilpotent(a);
	if (all_right && !nil)
		return fail("every maximal subalgebra is a right ideal but A is not nilpotent");
	if (nil && !all_ideal)
		return fail("nilpotent algebra with a maximal subalgebra that is not an ideal");
	return pass(std::to_string(maxes.size()) + " maximal subalgebras" + (all_right ? ", all right ideals" : ""));
}

Outcome check_frattini(Context& c)
{
	const Algebra& a = c.a;
	if (!c.finite())
		return skip("needs a prime field");
	Subspace phi = Subspace::full(a.field(), a.dim());
	for (const auto& m : c.maximal())
		phi = phi.intersect(m);
	for (const auto& m : c.maximal())
		if (!(phi.intersect(m) == phi))
			return fail("Frattini subalgebra not inside a maximal subalgebra");
	std::size_t right_ideals = 0, instances = 0;
	for (const auto& u : c.subalgebras()) {
		if (phi.contains(u) && is_right_ideal(a, u)) {
			++right_ideals;
			if (!is_nilpotent(restrict(a, Subalgebra::of(a, u))))
				return fail("right ideal inside the Frattini subalgebra is not nilpotent");
		}
		try {
			const Subalgebra handle = Subalgebra::of(a, u);
			if (!frattini_nilpotency_check(a, handle, u.intersect(phi), phi).holds)
				return fail("U/V nilpotent with V in the Frattini subalgebra, yet U is not nilpotent");
			++instances;
		} catch (const Error& e) {
			if (e.code() != ErrorCode::PreconditionViolated)
				throw;
		}
	}
	return pass("Frattini dim " + std::to_string(phi.dim()) + ", " + std::to_string(right_ideals) +
	            " right ideals inside, " + std::to_string(instances) + " quotient instances");
}

Outcome check_min_engel(Context& c)
{
	const Algebra& a = c.a;
	if (!a.field().has_at_least(a.dim() + 1))
		return skip("field has fewer than dim+1 elements");
	const CartanCertificate& cert = c.cartan();
	if (!is_cartan(a, cert.subalgebra))
		return fail("descent result is not Cartan");
	if (!c.exhaustive_elements())
		return pass("descent result Cartan, dim " + std::to_string(cert.subalgebra.dim()));
	std::set<Subspace> engel;
	c.for_each_element([&](const Element& x) { engel.insert(engel_subalgebra(a, x).space); });
	std::set<Subspace> minimal;
	for (const auto& e : engel) {
		bool is_min = true;
		for (const auto& o : engel)
			if (o.dim() < e.dim() && e.contains(o)) {
				is_min = false;
				break;
			}
		if (is_min)
			minimal.insert(e);
	}
	std::set<Subspace> cartans;
	for (const auto& u : c.subalgebras())
		if (is_cartan(a, Subalgebra::of(a, u)))
			cartans.insert(u);
	if (!minimal.contains(cert.subalgebra.space()))
		return fail("descent result is not a minimal Engel subalgebra");
	if (minimal != cartans) {
		std::size_t extra_min = 0, extra_cartan = 0;
		for (const auto& m : minimal)
			extra_min += !cartans.contains(m);
		for (const auto& m : cartans)
			extra_cartan += !minimal.contains(m);
		return fail(std::to_string(extra_min) + " minimal Engel subalgebras not Cartan, " +
		            std::to_string(extra_cartan) + " Cartan subalgebras not minimal Engel");
	}
	return pass(std::to_string(cartans.size()) + " Cartan subalgebras, all minimal Engel, exhaustive");
}

Outcome check_cartan_overalgebras(Context& c)
{
	const Algebra& a = c.a;
	if (!a.field().has_at_least(a.dim() + 1))
		return skip("field has fewer than dim+1 elements");
	const Subspace& cs = c.cartan().subalgebra.space();
	std::vector<Subspace> overs{cs, Subspace::full(a.field(), a.dim())};
	if (c.finite()) {
		for (const auto& u : c.subalgebras())
			if (u.contains(cs))
				overs.push_back(u);
	} else {
		for (const auto& x : c.elements)
			if (auto e = engel_subalgebra(a, x).space; e.contains(cs))
				overs.push_back(e);
	}
	for (const auto& u : overs)
		if (!(normalizers(a, Subalgebra::of(a, u)).right == u))
			return fail("subalgebra containing a Cartan subalgebra is not its own right normalizer");
	return pass(std::to_string(overs.size()) + " subalgebras containing C");
}

Outcome check_cartan_quotient(Context& c)
{
	const Algebra& a = c.a;
	if (!a.field().has_at_least(a.dim() + 1))
		return skip("field has fewer than dim+1 elements");
	const CartanCertificate& cert = c.cartan();
	std::size_t tested = 0;
	for (const auto& k : c.ideals()) {
		const CartanCertificate image = cartan_in_quotient(a, k, cert);
		const Quotient q = quotient(a, k);
		if (!is_cartan(q.algebra, image.subalgebra))
			return fail("image of C in a quotient is not Cartan");
		++tested;
	}
	return pass(std::to_string(tested) + " quotients");
}

Outcome check_intravariance(Context& c)
{
	const Algebra& a = c.a;
	std::size_t tested = 0;
	for (const auto& n : c.ideals()) {
		if (n.is_zero() || n.is_full() || !a.field().has_at_least(n.dim() + 1))
			continue;
		const Algebra local = restrict(a, Subalgebra::of(a, n));
		const CartanCertificate cert = minimal_engel_search(local);
		if (!intravariance_check(a, n, cert))
			return fail("N + N_A(C) != A for an ideal N of dim " + std::to_string(n.dim()));
		++tested;
	}
	if (tested == 0)
		return skip("no proper nonzero ideal with enough scalars");
	return pass(std::to_string(tested) + " ideals");
}

Outcome check_primitive(Context& c)
{
	const Algebra& a = c.a;
	if (!c.finite())
		return skip("needs a prime field");
	auto cert = is_primitive(a, c.opt.budget);
	if (!cert)
		return skip("not primitive");
	if (cert->socle.is_full())
		return pass("P equals its socle");
	const Subspace m = primitive_complement(a, *cert, c.opt.budget);
	const ConjugacyReport report = conjugacy_theorem_check(a, *cert, c.opt.budget);
	if (!report.holds)
		return fail(report.detail);
	bool found = false;
	for (const auto& s : report.complements)
		found = found || s == m;
	if (!found)
		return fail("constructed complement missing from the census");
	if (!cert->is_lie && !(left_centre(a) == cert->socle))
		return fail("socle differs from the left centre");
	return pass("socle dim " + std::to_string(cert->socle.dim()) + ", " + std::to_string(report.complements.size()) +
	            " complements, all conjugate" + (cert->is_lie ? "" : ", non-Lie"));
}

Outcome check_representation(Context& c)
{
	const Algebra& a = c.a;
	if (a.dim() == 0)
		return skip("zero algebra");
	const Bimodule regular = regular_bimodule(a);
	if (!is_nilpotent(a)) {
		try {
			engel_witness(regular);
		} catch (const Error& e) {
			if (e.code() == ErrorCode::HypothesisViolated)
				return pass("non-nilpotent: hypothesis violation detected");
			if (e.code() == ErrorCode::TheoremViolated && !c.exhaustive_elements())
				return skip("sampled hypothesis check missed a non-nilpotent L_a");
			throw;
		}
		return c.exhaustive_elements() ? fail("non-nilpotent algebra passed the nil hypothesis")
		                               : skip("sampled hypothesis check missed a non-nilpotent L_a");
	}
	std::vector<Bimodule> modules{regular};
	const Subspace full = Subspace::full(a.field(), a.dim());
	if (const Subspace a2 = product_space(a, full, full); !a2.is_zero())
		modules.push_back(ideal_bimodule(a, a2));
	for (const auto& b : modules) {
		const Vector w = engel_witness(b);
		if (is_zero(w))
			return fail("zero witness");
		for (const auto& x : c.elements)
			if (!is_zero(b.t(x) * w) || !is_zero(b.s(x) * w))
				return fail("witness not annihilated by a = " + coords(x));
	}
	return pass(std::to_string(modules.size()) + " bimodules");
}

struct Entry
{
	TheoremInfo info;
	std::function<Outcome(Context&)> run;
};

const std::vector<Entry>& entries()
{
	static const std::vector<Entry> table{
	    {{"leibniz-operators", {}, "left multiplications are derivations: L_ab = L_a L_b - L_b L_a"}, check_operators},
	    {{"power", {}, "any product of two or more copies of a has zero left multiplication, nonzero ones equal the "
	                   "left-normed power, and products of k elements lie in A^k"},
	     check_power},
	    {{"left-centre", {}, "the left centre is a two-sided ideal containing every square, with Lie quotient"},
	     check_left_centre},
	    {{"normalizer-growth", {}, "a proper subalgebra of a nilpotent algebra is properly inside its normalizer"},
	     check_normalizer_growth},
	    {{"absolute-engel", {}, "A is nilpotent iff every L_a is nilpotent"}, check_absolute_engel},
	    {{"char0-derived", {}, "over Q, a soluble algebra has nilpotent A^2"}, check_char0},
	    {{"fitting", {}, "E_A(a) is a subalgebra and A = E_A(a) + im L_a^n is direct"}, check_fitting},
	    {{"engel-representative", {}, "some a' in E_A(a) has L_a' = L_a and E_A(a') = E_A(a)"}, check_representative},
	    {{"right-self-normalizing", {}, "a subalgebra containing an Engel subalgebra is its own right normalizer"},
	     check_self_normalizing},
	    {{"maximal-right-ideals", {}, "if every maximal subalgebra is a right ideal then A is nilpotent"},
	     check_maximal_right},
	    {{"frattini", {}, "U right subnormal with U/V nilpotent for an ideal V inside the Frattini subalgebra is "
	                      "nilpotent; right ideals inside the Frattini subalgebra are nilpotent"},
	     check_frattini},
	    {{"minimal-engel-cartan", {"th-minE"},
	      "with at least dim+1 scalars, the Cartan subalgebras are exactly the minimal Engel subalgebras"},
	     check_min_engel},
	    {{"cartan-overalgebras", {}, "a subalgebra containing a Cartan subalgebra is its own right normalizer"},
	     check_cartan_overalgebras},
	    {{"cartan-quotient", {}, "the image of a Cartan subalgebra in A/K is a Cartan subalgebra"}, check_cartan_quotient},
	    {{"intravariance", {}, "for an ideal N with Cartan subalgebra C, N + N_A(C) = A"}, check_intravariance},
	    {{"primitive-splitting", {}, "a primitive algebra splits over its socle, its complements are conjugate, and "
	                                 "unique with socle = left centre when not Lie"},
	     check_primitive},
	    {{"representation-engel", {}, "a bimodule with every T_a nilpotent has a nonzero vector killed by all T_a "
	                                  "and S_a"},
	     check_representation},
	};
	return table;
}

} // namespace

const std::vector<TheoremInfo>& theorem_catalogue()
{
	static const std::vector<TheoremInfo> out = [] {
		std::vector<TheoremInfo> v;
		for (const auto& e : entries())
			v.push_back(e.info);
		return v;
	}();
	return out;
}

std::optional<std::string> resolve_theorem(const std::string& name)
{
	for (const auto& t : theorem_catalogue()) {
		if (t.name == name)
			return t.name;
		for (const auto& alias : t.aliases)
			if (alias == name)
				return t.name;
	}
	return std::nullopt;
}

const char* status_name(CheckStatus s)
{
	switch (s) {
	case CheckStatus::Pass:
		return "pass";
	case CheckStatus::Fail:
		return "fail";
	case CheckStatus::Skip:
		return "skip";
	}
	return "?";
}

EntryResult check_algebra(const std::string& name, const Algebra& a, const SuiteOptions& options)
{
	Context ctx(name, a, options);
	EntryResult result{name, {}};
	for (const auto& e : entries()) {
		if (!options.filter.empty() &&
		    std::find(options.filter.begin(), options.filter.end(), e.info.name) == options.filter.end())
			continue;
		Outcome o;
		try {
			o = e.run(ctx);
		} catch (const Error& err) {
			switch (err.code()) {
			case ErrorCode::BudgetExceeded:
			case ErrorCode::InfiniteField:
			case ErrorCode::FieldTooSmall:
				o = skip(err.what());
				break;
			default:
				o = fail(err.what());
			}
		} catch (const std::exception& err) {
			o = fail(err.what());
		}
		result.checks.push_back(CheckResult{e.info.name, o.status, std::move(o.detail)});
	}
	return result;
}

SuiteReport run_theorem_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options)
{
	SuiteReport report;
	for (const auto& t : theorem_catalogue())
		if (options.filter.empty() || std::find(options.filter.begin(), options.filter.end(), t.name) != options.filter.end())
			report.theorems.push_back(t.name);
	for (const auto& e : corpus)
		report.entries.push_back(check_algebra(e.name, e.algebra, options));
	return report;
}

std::size_t SuiteReport::count(CheckStatus s) const
{
	std::size_t n = 0;
	for (const auto& e : entries)
		for (const auto& c : e.checks)
			n += c.status == s;
	return n;
}

Json SuiteReport::to_json() const
{
	Json j;
	Json th = Json::array();
	for (const auto& name : theorems)
		for (const auto& t : theorem_catalogue())
			if (t.name == name)
				th.push_back(Json{{"name", t.name}, {"statement", t.statement}});
	j["theorems"] = std::move(th);
	Json es = Json::array();
	for (const auto& e : entries) {
		Json checks = Json::array();
		for (const auto& c : e.checks)
			checks.push_back(Json{{"theorem", c.theorem}, {"status", status_name(c.status)}, {"detail", c.detail}});
		es.push_back(Json{{"algebra", e.algebra}, {"checks", std::move(checks)}});
	}
	j["entries"] = std::move(es);
	j["summary"] = Json{{"pass", count(CheckStatus::Pass)},
	                    {"fail", count(CheckStatus::Fail)},
	                    {"skip", count(CheckStatus::Skip)}};
	return j;
}

std::string SuiteReport::to_text() const
{
	std::ostringstream out;
	std::size_t width = 8;
	for (const auto& e : entries)
		width = std::max(width, e.algebra.size());
	out << std::left << std::setw(static_cast<int>(width)) << "algebra";
	for (std::size_t k = 0; k < theorems.size(); ++k)
		out << ' ' << std::right << std::setw(2) << k + 1;
	out << '\n';
	for (const auto& e : entries) {
		out << std::left << std::setw(static_cast<int>(width)) << e.algebra;
		for (const auto& c : e.checks)
			out << "  " << (c.status == CheckStatus::Pass ? 'P' : c.status == CheckStatus::Fail ? 'F' : '.');
		out << '\n';
	}
	out << '\n';
	for (std::size_t k = 0; k < theorems.size(); ++k)
		for (const auto& t : theorem_catalogue())
			if (t.name == theorems[k])
				out << std::right << std::setw(2) << k + 1 << "  " << t.name << ": " << t.statement << '\n';
	bool header = false;
	for (const auto& e : entries)
		for (const auto& c : e.checks)
			if (c.status == CheckStatus::Fail) {
				if (!header)
					out << "\nfailures:\n";
				header = true;
				out << "  " << e.algebra << " / " << c.theorem << ": " << c.detail << '\n';
			}
	out << "\npass " << count(CheckStatus::Pass) << ", fail " << count(CheckStatus::Fail) << ", skip "
	    << count(CheckStatus::Skip) << '\n';
	return out.str();
}

} // namespace leibniz
