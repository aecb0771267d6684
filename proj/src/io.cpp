#include "leibniz/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace leibniz {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
	throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where)
{
	if (!j.is_object())
		fail(where, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		fail(where, std::string("missing field \"") + key + "\"");
	return *it;
}

std::uint64_t unsigned_field(const Json& j, const std::string& where)
{
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
		fail(where, "expected a non-negative integer");
	return j.get<std::uint64_t>();
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where)
{
	if (j.is_string()) {
		try {
			return f.parse(j.get<std::string>());
		} catch (const Error& e) {
			fail(where, e.detail());
		}
	}
	if (j.is_number_integer())
		return f.from_int(j.get<long>());
	fail(where, "expected a scalar string such as \"-3/2\"");
}

Vector vector_from_json(const Field& f, const Json& j, std::size_t n, const std::string& where)
{
	if (!j.is_array() || j.size() != n)
		fail(where, "expected an array of " + std::to_string(n) + " scalars");
	Vector v;
	for (std::size_t k = 0; k < n; ++k)
		v.push_back(scalar_from_json(f, j[k], where + "[" + std::to_string(k) + "]"));
	return v;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t n, const std::string& where)
{
	if (!j.is_array() || j.size() != n)
		fail(where, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
	std::vector<Vector> rows;
	for (std::size_t r = 0; r < n; ++r)
		rows.push_back(vector_from_json(f, j[r], n, where + "[" + std::to_string(r) + "]"));
	return Matrix::from_rows(f, n, rows);
}

std::string read_text(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

Json parse_text(const std::string& text, const std::string& source)
{
	try {
		return Json::parse(text);
	} catch (const Json::parse_error& e) {
		std::size_t line = 1, column = 1;
		const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
		for (std::size_t i = 0; i < limit; ++i) {
			if (text[i] == '\n') {
				++line;
				column = 1;
			} else {
				++column;
			}
		}
		throw Error(ErrorCode::ParseError,
		            source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
	}
}

Json flags_to_json(const KnownFlags& flags)
{
	Json j = Json::object();
	auto put = [&](const char* key, const std::optional<bool>& v) {
		if (v)
			j[key] = *v;
	};
	put("nilpotent", flags.nilpotent);
	put("soluble", flags.soluble);
	put("lie", flags.lie);
	put("primitive", flags.primitive);
	return j;
}

KnownFlags flags_from_json(const Json& j, const std::string& where)
{
	KnownFlags flags;
	if (!j.is_object())
		fail(where, "flags must be an object");
	auto get = [&](const char* key) -> std::optional<bool> {
		auto it = j.find(key);
		if (it == j.end() || it->is_null())
			return std::nullopt;
		if (!it->is_boolean())
			fail(where + "." + key, "expected a boolean");
		return it->get<bool>();
	};
	flags.nilpotent = get("nilpotent");
	flags.soluble = get("soluble");
	flags.lie = get("lie");
	flags.primitive = get("primitive");
	return flags;
}

} // namespace

Json field_to_json(const Field& f)
{
	if (f.is_finite())
		return Json{{"kind", "Fp"}, {"p", f.characteristic()}};
	return Json{{"kind", "Q"}};
}

Field field_from_json(const Json& j)
{
	const Json& kind = member(j, "kind", "field");
	if (kind == "Q")
		return Field::rationals();
	if (kind == "Fp") {
		const std::uint64_t p = unsigned_field(member(j, "p", "field"), "field.p");
		try {
			return Field::prime(p);
		} catch (const Error& e) {
			fail("field.p", e.detail());
		}
	}
	fail("field.kind", "expected \"Q\" or \"Fp\"");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json vector_to_json(const Vector& v)
{
	Json j = Json::array();
	for (const auto& c : v)
		j.push_back(c.to_string());
	return j;
}

Json subspace_to_json(const Subspace& s)
{
	Json j = Json::array();
	for (const auto& row : s.basis_vectors())
		j.push_back(vector_to_json(row));
	return j;
}

Json matrix_to_json(const Matrix& m)
{
	Json j = Json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		j.push_back(vector_to_json(m.row(r)));
	return j;
}

Json algebra_to_json(const Algebra& a)
{
	Json j;
	j["field"] = field_to_json(a.field());
	j["dim"] = a.dim();
	if (a.has_labels())
		j["labels"] = a.labels();
	Json products = Json::array();
	for (std::size_t i = 0; i < a.dim(); ++i)
		for (std::size_t k = 0; k < a.dim(); ++k)
			if (!is_zero(a.product(i, k)))
				products.push_back(Json{{"i", i + 1}, {"j", k + 1}, {"out", vector_to_json(a.product(i, k))}});
	j["products"] = std::move(products);
	return j;
}

Algebra algebra_from_json(const Json& j)
{
	if (!j.is_object())
		fail("algebra", "expected an object");
	const Field f = field_from_json(member(j, "field", "algebra"));
	const std::size_t n = unsigned_field(member(j, "dim", "algebra"), "dim");
	std::vector<std::string> labels;
	if (auto it = j.find("labels"); it != j.end()) {
		if (!it->is_array() || it->size() != n)
			fail("labels", "expected " + std::to_string(n) + " strings");
		for (std::size_t k = 0; k < n; ++k) {
			if (!(*it)[k].is_string())
				fail("labels[" + std::to_string(k) + "]", "expected a string");
			labels.push_back((*it)[k].get<std::string>());
		}
	}
	std::vector<Vector> table(n * n, zero_vector(f, n));
	std::vector<bool> seen(n * n, false);
	const Json& products = member(j, "products", "algebra");
	if (!products.is_array())
		fail("products", "expected an array");
	for (std::size_t p = 0; p < products.size(); ++p) {
		const std::string where = "products[" + std::to_string(p) + "]";
		const Json& entry = products[p];
		const std::size_t i = unsigned_field(member(entry, "i", where), where + ".i");
		const std::size_t k = unsigned_field(member(entry, "j", where), where + ".j");
		if (i < 1 || i > n)
			fail(where + ".i", "index out of range 1.." + std::to_string(n));
		if (k < 1 || k > n)
			fail(where + ".j", "index out of range 1.." + std::to_string(n));
		if (seen[(i - 1) * n + (k - 1)])
			fail(where, "duplicate product e" + std::to_string(i) + " e" + std::to_string(k));
		seen[(i - 1) * n + (k - 1)] = true;
		table[(i - 1) * n + (k - 1)] = vector_from_json(f, member(entry, "out", where), n, where + ".out");
	}
	return Algebra(f, n, std::move(table), std::move(labels));
}

Algebra parse_algebra(const std::string& text, const std::string& source)
{
	const Json j = parse_text(text, source);
	try {
		return algebra_from_json(j);
	} catch (const Error& e) {
		throw Error(e.code(), source + ": " + e.detail());
	}
}

Algebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_text(path), path.string()); }

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error(ErrorCode::ParseError, path.string() + ": cannot write file");
	out << text;
}

Json bimodule_to_json(const Bimodule& b)
{
	Json t = Json::array(), s = Json::array();
	for (std::size_t i = 0; i < b.algebra().dim(); ++i) {
		t.push_back(matrix_to_json(b.t_basis(i)));
		s.push_back(matrix_to_json(b.s_basis(i)));
	}
	return Json{{"algebra", algebra_to_json(b.algebra())}, {"module_dim", b.module_dim()}, {"T", t}, {"S", s}};
}

Bimodule bimodule_from_json(const Json& j)
{
	Algebra a = algebra_from_json(member(j, "algebra", "bimodule"));
	const std::size_t m = unsigned_field(member(j, "module_dim", "bimodule"), "module_dim");
	auto family = [&](const char* key) {
		const Json& arr = member(j, key, "bimodule");
		if (!arr.is_array() || arr.size() != a.dim())
			fail(key, "expected one matrix per algebra basis vector");
		std::vector<Matrix> out;
		for (std::size_t i = 0; i < a.dim(); ++i)
			out.push_back(matrix_from_json(a.field(), arr[i], m, std::string(key) + "[" + std::to_string(i) + "]"));
		return out;
	};
	auto t = family("T");
	auto s = family("S");
	return Bimodule(std::move(a), m, std::move(t), std::move(s));
}

void write_corpus(const std::filesystem::path& dir, const std::vector<CorpusEntry>& entries)
{
	std::filesystem::create_directories(dir);
	Json manifest = Json::array();
	for (const auto& e : entries) {
		const std::string file = e.name + ".json";
		write_text(dir / file, dump_json(algebra_to_json(e.algebra)));
		Json m;
		m["name"] = e.name;
		m["file"] = file;
		m["construction"] = e.construction;
		m["parameters"] = e.parameters;
		m["seed"] = e.seed ? Json(*e.seed) : Json(nullptr);
		m["flags"] = flags_to_json(e.flags);
		manifest.push_back(std::move(m));
	}
	write_text(dir / "manifest.json", dump_json(Json{{"entries", manifest}}));
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir, std::uint64_t budget)
{
	if (!std::filesystem::is_directory(dir))
		throw Error(ErrorCode::ParseError, dir.string() + ": not a directory");
	std::vector<CorpusEntry> out;
	const auto manifest_path = dir / "manifest.json";
	if (std::filesystem::exists(manifest_path)) {
		const std::string source = manifest_path.string();
		const Json manifest = parse_text(read_text(manifest_path), source);
		try {
			const Json& entries = member(manifest, "entries", "manifest");
			if (!entries.is_array())
				fail("entries", "expected an array");
			for (std::size_t k = 0; k < entries.size(); ++k) {
				const std::string where = "entries[" + std::to_string(k) + "]";
				const Json& m = entries[k];
				const Json& file = member(m, "file", where);
				if (!file.is_string())
					fail(where + ".file", "expected a string");
				CorpusEntry e{m.value("name", file.get<std::string>()), load_algebra(dir / file.get<std::string>()),
				              m.value("construction", std::string("file")), {}, std::nullopt, {}};
				if (auto p = m.find("parameters"); p != m.end() && p->is_array())
					for (const auto& s : *p)
						e.parameters.push_back(s.get<std::string>());
				if (auto s = m.find("seed"); s != m.end() && !s->is_null())
					e.seed = unsigned_field(*s, where + ".seed");
				if (auto fl = m.find("flags"); fl != m.end())
					e.flags = flags_from_json(*fl, where + ".flags");
				out.push_back(std::move(e));
			}
		} catch (const Json::exception& e) {
			fail(source, e.what());
		}
	} else {
		std::vector<std::filesystem::path> files;
		for (const auto& de : std::filesystem::directory_iterator(dir))
			if (de.is_regular_file() && de.path().extension() == ".json")
				files.push_back(de.path());
		std::sort(files.begin(), files.end());
		for (const auto& p : files)
			out.push_back(CorpusEntry{p.stem().string(), load_algebra(p), "file", {}, std::nullopt, {}});
	}
	for (const auto& e : out)
		if (auto problem = verify_entry(e, budget))
			throw Error(ErrorCode::NotLeibniz, "corpus entry " + e.name + ": " + *problem);
	return out;
}

} // namespace leibniz
