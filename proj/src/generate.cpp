#include "leibniz/generate.hpp"

#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

class TableBuilder
{
  public:
	TableBuilder(Field field, std::size_t dim) : field_(field), dim_(dim), table_(dim * dim, zero_vector(field, dim)) {}

	TableBuilder& set(std::size_t i, std::size_t j, std::size_t k, long value)
	{
		table_[i * dim_ + j][k] = field_.from_int(value);
		return *this;
	}

	Vector& at(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }

	Algebra build(std::vector<std::string> labels = {}) const { return Algebra(field_, dim_, table_, std::move(labels)); }

  private:
	Field field_;
	std::size_t dim_;
	std::vector<Vector> table_;
};

Algebra checked(Algebra a, const char* what)
{
	if (!verify_leibniz(a).holds())
		throw Error(ErrorCode::NotLeibniz, std::string(what) + " failed the Leibniz identity");
	return a;
}

} // namespace

Algebra split_extension(const Algebra& lie, const std::vector<Matrix>& t, RightAction mode,
                        std::vector<std::string> module_labels)
{
	if (t.empty() && lie.dim() != 0)
		throw Error(ErrorCode::ShapeMismatch, "one action matrix per Lie basis vector");
	const std::size_t m = t.empty() ? 0 : t.front().rows();
	const Bimodule module = lie_bimodule(lie, m, t, mode);
	const std::size_t l = lie.dim();
	const std::size_t n = l + m;
	const Field f = lie.field();
	TableBuilder tb(f, n);
	for (std::size_t i = 0; i < l; ++i) {
		for (std::size_t j = 0; j < l; ++j)
			for (std::size_t k = 0; k < l; ++k)
				tb.at(i, j)[k] = lie.product(i, j)[k];
		for (std::size_t j = 0; j < m; ++j)
			for (std::size_t k = 0; k < m; ++k) {
				tb.at(i, l + j)[l + k] = module.t_basis(i)(k, j);
				tb.at(l + j, i)[l + k] = module.s_basis(i)(k, j);
			}
	}
	std::vector<std::string> labels;
	if (lie.has_labels() || !module_labels.empty()) {
		for (std::size_t i = 0; i < l; ++i)
			labels.push_back(lie.has_labels() ? lie.labels()[i] : "l" + std::to_string(i + 1));
		for (std::size_t j = 0; j < m; ++j)
			labels.push_back(j < module_labels.size() ? module_labels[j] : "m" + std::to_string(j + 1));
	}
	return checked(tb.build(std::move(labels)), "split extension");
}

Algebra cyclic_algebra(std::size_t k, Field field)
{
	TableBuilder tb(field, k);
	for (std::size_t i = 0; i + 1 < k; ++i)
		tb.set(0, i, i + 1, 1);
	std::vector<std::string> labels;
	for (std::size_t i = 1; i <= k; ++i)
		labels.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
	return checked(tb.build(std::move(labels)), "cyclic algebra");
}

Algebra random_nilpotent(std::size_t n, Field field, std::uint64_t seed, std::size_t retry_budget)
{
	std::uint64_t state = seed;
	for (std::size_t attempt = 0; attempt < retry_budget; ++attempt) {
		TableBuilder tb(field, n);
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				for (std::size_t k = std::max(i, j) + 1; k < n; ++k) {
					if (next_random(state) % 3 != 0)
						continue;
					std::uint64_t r = next_random(state);
					if (field.is_finite())
						tb.at(i, j)[k] = Scalar(field, 1 + r % (field.characteristic() - 1));
					else
						tb.at(i, j)[k] = field.from_int((r & 1) ? static_cast<long>(1 + (r >> 1) % 2)
						                                        : -static_cast<long>(1 + (r >> 1) % 2));
				}
		Algebra a = tb.build();
		if (verify_leibniz(a).holds())
			return a;
	}
	throw Error(ErrorCode::RetryBudgetExceeded,
	            "no Leibniz table after " + std::to_string(retry_budget) + " attempts");
}

Algebra paper_example(Field field)
{
	// basis u, n, k, n^2
	TableBuilder tb(field, 4);
	tb.set(0, 1, 0, 1);                 // u n = u
	tb.set(1, 0, 0, -1).set(1, 0, 2, 1); // n u = -u + k
	tb.set(0, 3, 2, 1);                 // u n^2 = k
	tb.set(1, 2, 2, -1);                // n k = -k
	tb.set(1, 1, 3, 1);                 // n n = n^2
	return checked(tb.build({"u", "n", "k", "n^2"}), "example algebra");
}

Algebra abelian_algebra(std::size_t n, Field field) { return Algebra(field, n); }

Algebra heisenberg_algebra(Field field)
{
	TableBuilder tb(field, 3);
	tb.set(0, 1, 2, 1).set(1, 0, 2, -1);
	return checked(tb.build({"x", "y", "z"}), "Heisenberg algebra");
}

Algebra two_dim_nonabelian_lie(Field field)
{
	TableBuilder tb(field, 2);
	tb.set(0, 1, 1, 1).set(1, 0, 1, -1);
	return checked(tb.build({"h", "x"}), "two-dimensional Lie algebra");
}

Algebra sl2(Field field)
{
	// e, f, h
	TableBuilder tb(field, 3);
	tb.set(0, 1, 2, 1).set(1, 0, 2, -1);
	tb.set(2, 0, 0, 2).set(0, 2, 0, -2);
	tb.set(2, 1, 1, -2).set(1, 2, 1, 2);
	return checked(tb.build({"e", "f", "h"}), "sl2");
}

std::optional<std::string> verify_entry(const CorpusEntry& entry, std::uint64_t budget)
{
	const Algebra& a = entry.algebra;
	if (auto v = verify_leibniz(a); !v.holds())
		return "Leibniz identity fails at triple (" + std::to_string(v.failure->i + 1) + "," +
		       std::to_string(v.failure->j + 1) + "," + std::to_string(v.failure->k + 1) + ")";
	auto check = [](const std::optional<bool>& flag, bool actual, const char* name) -> std::optional<std::string> {
		if (flag && *flag != actual)
			return std::string("flag ") + name + " is " + (*flag ? "true" : "false") + " but computes " +
			       (actual ? "true" : "false");
		return std::nullopt;
	};
	if (auto m = check(entry.flags.nilpotent, is_nilpotent(a), "nilpotent"))
		return m;
	if (auto m = check(entry.flags.soluble, is_soluble(a), "soluble"))
		return m;
	if (auto m = check(entry.flags.lie, a.is_lie(), "lie"))
		return m;
	if (entry.flags.primitive) {
		if (!a.field().is_finite())
			return std::string("primitive flag on an algebra over Q");
		if (auto m = check(entry.flags.primitive, is_primitive(a, budget).has_value(), "primitive"))
			return m;
	}
	return std::nullopt;
}

std::vector<CorpusEntry> default_corpus()
{
	std::vector<CorpusEntry> out;
	const std::vector<Field> fields{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5),
	                                Field::prime(7)};
	auto tag = [](const Field& f) { return f.is_finite() ? "F" + std::to_string(f.characteristic()) : std::string("Q"); };
	auto add = [&](std::string name, Algebra a, std::string construction, std::vector<std::string> params,
	               KnownFlags flags, std::optional<std::uint64_t> seed = std::nullopt) {
		params.insert(params.begin(), "field=" + a.field().name());
		out.push_back(CorpusEntry{std::move(name), std::move(a), std::move(construction), std::move(params), seed, flags});
	};
	auto maybe_primitive = [](const Field& f, bool value) -> std::optional<bool> {
		if (f.is_finite())
			return value;
		return std::nullopt;
	};

	for (const auto& f : fields) {
		const std::string t = tag(f);
		add("paper-example-" + t, paper_example(f), "paper-example", {}, {false, true, false, maybe_primitive(f, false)});
		for (std::size_t k = 1; k <= 4; ++k)
			add("cyclic-" + std::to_string(k) + "-" + t, cyclic_algebra(k, f), "cyclic", {"k=" + std::to_string(k)},
			    {true, true, k == 1, std::nullopt});
		for (std::size_t n = 2; n <= 3; ++n)
			add("abelian-" + std::to_string(n) + "-" + t, abelian_algebra(n, f), "abelian",
			    {"dim=" + std::to_string(n)}, {true, true, true, maybe_primitive(f, false)});
		add("heisenberg-" + t, heisenberg_algebra(f), "heisenberg", {}, {true, true, true, std::nullopt});
		add("lie2-" + t, two_dim_nonabelian_lie(f), "lie2", {}, {false, true, true, maybe_primitive(f, true)});
		for (std::size_t n = 3; n <= 4; ++n)
			for (std::uint64_t seed = 1; seed <= 3; ++seed)
				add("random-nilpotent-" + std::to_string(n) + "-" + t + "-s" + std::to_string(seed),
				    random_nilpotent(n, f, seed), "random-nilpotent", {"dim=" + std::to_string(n)},
				    {true, true, std::nullopt, std::nullopt}, seed);
	}

	// one-dimensional Lie algebra acting on modules
	const auto one_dim = [](const Field& f) { return Algebra(f, 1, std::vector<std::string>{"h"}); };
	auto scalar_rep = [](const Field& f, long lambda) { return std::vector<Matrix>{Matrix::identity(f, 1).scaled(f.from_int(lambda))}; };
	auto mode_tag = [](RightAction m) { return m == RightAction::Zero ? std::string("szero") : std::string("sminust"); };
	struct ScalarCase
	{
		Field field;
		long lambda;
	};
	const std::vector<ScalarCase> scalar_cases{{Field::rationals(), 1}, {Field::rationals(), 2}, {Field::prime(3), 1},
	                                           {Field::prime(3), 2}, {Field::prime(5), 2}, {Field::prime(5), 3},
	                                           {Field::prime(7), 3}};
	for (const auto& c : scalar_cases)
		for (auto mode : {RightAction::Zero, RightAction::MinusLeft})
			add("split-scalar-l" + std::to_string(c.lambda) + "-" + mode_tag(mode) + "-" + tag(c.field),
			    split_extension(one_dim(c.field), scalar_rep(c.field, c.lambda), mode, {"m"}), "split",
			    {"lie=dim1", "rep=scalar " + std::to_string(c.lambda), "s=" + mode_tag(mode)},
			    {false, true, mode == RightAction::MinusLeft, maybe_primitive(c.field, true)});

	// x^2 - d irreducible: companion [[0, d], [1, 0]]
	struct IrreducibleCase
	{
		Field field;
		long d;
	};
	const std::vector<IrreducibleCase> irreducible{{Field::rationals(), -1}, {Field::prime(3), -1}, {Field::prime(5), 2},
	                                               {Field::prime(7), -1}};
	for (const auto& c : irreducible) {
		Matrix j(c.field, 2, 2);
		j(0, 1) = c.field.from_int(c.d);
		j(1, 0) = c.field.one();
		for (auto mode : {RightAction::Zero, RightAction::MinusLeft})
			add("split-irreducible-" + mode_tag(mode) + "-" + tag(c.field),
			    split_extension(one_dim(c.field), {j}, mode, {"m1", "m2"}), "split",
			    {"lie=dim1", "rep=companion x^2-(" + std::to_string(c.d) + ")", "s=" + mode_tag(mode)},
			    {false, true, mode == RightAction::MinusLeft, maybe_primitive(c.field, true)});
		if (c.field.is_finite() && c.field.characteristic() <= 5) {
			// two-dimensional abelian Lie algebra acting faithfully by 1 and J
			for (auto mode : {RightAction::Zero, RightAction::MinusLeft})
				add("split-abelian2-irreducible-" + mode_tag(mode) + "-" + tag(c.field),
				    split_extension(Algebra(c.field, 2, std::vector<std::string>{"h1", "h2"}), {Matrix::identity(c.field, 2), j}, mode,
				                    {"m1", "m2"}),
				    "split", {"lie=abelian2", "rep=(1, companion)", "s=" + mode_tag(mode)},
				    {false, true, mode == RightAction::MinusLeft, maybe_primitive(c.field, true)});
		}
	}

	for (const auto& f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
		Matrix nil(f, 2, 2);
		nil(1, 0) = f.one();
		add("split-jordan-szero-" + tag(f), split_extension(one_dim(f), {nil}, RightAction::Zero, {"m1", "m2"}), "split",
		    {"lie=dim1", "rep=nilpotent jordan", "s=szero"}, {true, true, false, std::nullopt});
		// the two-dimensional Lie algebra acting on a line through h only
		Matrix th = Matrix::identity(f, 1).scaled(f.from_int(2));
		add("split-lie2-scalar-szero-" + tag(f),
		    split_extension(two_dim_nonabelian_lie(f), {th, Matrix(f, 1, 1)}, RightAction::Zero, {"m"}), "split",
		    {"lie=lie2", "rep=h->2,x->0", "s=szero"}, {false, true, false, maybe_primitive(f, false)});
	}

	for (const auto& f : {Field::rationals(), Field::prime(5), Field::prime(7)})
		add("sl2-" + tag(f), sl2(f), "sl2", {}, {false, false, true, maybe_primitive(f, false)});
	for (const auto& f : {Field::rationals(), Field::prime(5)}) {
		Matrix te(f, 2, 2), tf(f, 2, 2), th(f, 2, 2);
		te(0, 1) = f.one();
		tf(1, 0) = f.one();
		th(0, 0) = f.one();
		th(1, 1) = -f.one();
		add("sl2-natural-szero-" + tag(f), split_extension(sl2(f), {te, tf, th}, RightAction::Zero, {"v1", "v2"}),
		    "split", {"lie=sl2", "rep=natural", "s=szero"}, {false, false, false, maybe_primitive(f, false)});
	}
	return out;
}

std::vector<std::pair<std::string, Bimodule>> nil_bimodule_family()
{
	std::vector<std::pair<std::string, Bimodule>> out;
	for (const auto& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7)}) {
		const std::string t = f.is_finite() ? "F" + std::to_string(f.characteristic()) : "Q";
		auto unit = [&](std::size_t r, std::size_t c) {
			Matrix m(f, 3, 3);
			m(r, c) = f.one();
			return m;
		};
		const Matrix jordan = unit(0, 1) + unit(1, 2);
		for (auto mode : {RightAction::Zero, RightAction::MinusLeft}) {
			const std::string m = mode == RightAction::Zero ? "szero" : "sminust";
			out.emplace_back("heisenberg-triangular-" + m + "-" + t,
			                 lie_bimodule(heisenberg_algebra(f), 3, {unit(0, 1), unit(1, 2), unit(0, 2)}, mode));
			out.emplace_back("abelian2-jordan-" + m + "-" + t,
			                 lie_bimodule(abelian_algebra(2, f), 3, {jordan, jordan * jordan}, mode));
		}
	}
	for (const auto& f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
		const std::string t = f.is_finite() ? "F" + std::to_string(f.characteristic()) : "Q";
		for (std::size_t k = 3; k <= 4; ++k) {
			const Algebra a = cyclic_algebra(k, f);
			const Subspace full = Subspace::full(f, k);
			out.emplace_back("cyclic-" + std::to_string(k) + "-square-ideal-" + t,
			                 ideal_bimodule(a, product_space(a, full, full)));
		}
	}
	return out;
}

} // namespace leibniz
