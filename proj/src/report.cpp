#include "leibniz/report.hpp"

#include <sstream>

#include "leibniz/engel.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

std::string trim(const std::string& s)
{
	const auto b = s.find_first_not_of(" \t");
	if (b == std::string::npos)
		return {};
	return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	std::istringstream in(s);
	while (std::getline(in, cur, sep))
		out.push_back(trim(cur));
	return out;
}

Json subspace_entry(const Algebra& a, const Subspace& s)
{
	return Json{{"dim", s.dim()}, {"basis", subspace_to_json(s)}, {"text", describe(a, s)}};
}

Json chain_entry(const Algebra& a, const std::vector<Subspace>& chain)
{
	Json j = Json::array();
	for (const auto& s : chain)
		j.push_back(subspace_entry(a, s));
	return j;
}

void require_finite(const Algebra& a, const char* what)
{
	if (!a.field().is_finite())
		throw Error(ErrorCode::InfiniteField, std::string(what) + " is only available over prime fields F_p");
}

} // namespace

Element parse_element(const Algebra& a, const std::string& text)
{
	const std::string t = trim(text);
	if (a.has_labels())
		for (std::size_t i = 0; i < a.dim(); ++i)
			if (a.labels()[i] == t)
				return a.basis_element(i);
	const auto parts = split(t, ',');
	if (parts.size() != a.dim())
		throw Error(ErrorCode::ParseError, "element \"" + t + "\" needs " + std::to_string(a.dim()) +
		                                       " comma-separated scalars or a basis label");
	Element x;
	for (const auto& p : parts)
		x.push_back(a.field().parse(p));
	return x;
}

Subspace parse_subspace(const Algebra& a, const std::string& text)
{
	std::vector<Vector> gens;
	for (const auto& part : split(text, ';'))
		if (!part.empty())
			gens.push_back(parse_element(a, part));
	return Subspace::span(a.field(), a.dim(), gens);
}

std::string describe(const Algebra& a, const Vector& v)
{
	if (!a.has_labels()) {
		std::string out = "(";
		for (std::size_t i = 0; i < v.size(); ++i)
			out += (i ? "," : "") + v[i].to_string();
		return out + ")";
	}
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (v[i].is_zero())
			continue;
		std::string c = v[i].to_string();
		const bool negative = !a.field().is_finite() && c.front() == '-';
		if (negative)
			c.erase(0, 1);
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		if (c != "1")
			out += c + "*";
		out += a.labels()[i];
	}
	return out.empty() ? "0" : out;
}

std::string describe(const Algebra& a, const Subspace& s)
{
	if (s.is_zero())
		return "0";
	std::string out = "span{";
	for (std::size_t i = 0; i < s.dim(); ++i)
		out += (i ? ", " : "") + describe(a, s.basis_vector(i));
	return out + "}";
}

Json verify_report(const Algebra& a)
{
	const LeibnizVerdict v = verify_leibniz(a);
	Json j;
	j["holds"] = v.holds();
	if (v.failure)
		j["failure"] = Json{{"triple", {v.failure->i + 1, v.failure->j + 1, v.failure->k + 1}},
		                    {"lhs", vector_to_json(v.failure->lhs)},
		                    {"rhs", vector_to_json(v.failure->rhs)}};
	return j;
}

Json analyze(const Algebra& a, const AnalyzeOptions& o)
{
	Json r;
	r["algebra"] = Json{{"dim", a.dim()}, {"field", a.field().name()}};
	if (a.has_labels())
		r["algebra"]["labels"] = a.labels();
	const Json verdict = verify_report(a);
	r["leibniz"] = verdict;
	if (!verdict["holds"].get<bool>())
		return r;
	r["properties"] = Json{{"lie", a.is_lie()}, {"nilpotent", is_nilpotent(a)}, {"soluble", is_soluble(a)}};
	if (auto c = nilpotency_class(a))
		r["properties"]["nilpotency_class"] = *c;

	if (o.series)
		r["series"] = Json{{"lower_central", chain_entry(a, lower_central_series(a))},
		                   {"derived", chain_entry(a, derived_series(a))}};
	if (o.centres)
		r["centres"] = Json{{"left_centre", subspace_entry(a, left_centre(a))}, {"centre", subspace_entry(a, centre(a))}};
	if (o.normalizer) {
		const Subspace u = parse_subspace(a, *o.normalizer);
		const Normalizers n = normalizers(a, Subalgebra::of(a, u));
		r["normalizer"] = Json{{"subalgebra", subspace_entry(a, u)},
		                       {"left", subspace_entry(a, n.left)},
		                       {"right", subspace_entry(a, n.right)},
		                       {"right_is_subalgebra", is_closed(a, n.right)},
		                       {"full", subspace_entry(a, n.full)},
		                       {"centralizer", subspace_entry(a, centralizer(a, u))}};
	}
	if (o.engel) {
		const Element x = parse_element(a, *o.engel);
		const EngelSubalgebra e = engel_subalgebra(a, x);
		const Element rep = engel_representative(a, x);
		r["engel"] = Json{{"element", vector_to_json(x)},
		                  {"subalgebra", subspace_entry(a, e.space)},
		                  {"fitting_image", subspace_entry(a, e.fitting_image)},
		                  {"contains_element", e.space.contains(x)},
		                  {"representative", vector_to_json(rep)}};
	}
	if (o.cartan) {
		const CartanCertificate c = minimal_engel_search(a);
		Json j = subspace_entry(a, c.subalgebra.space());
		j["nilpotency_class"] = c.nilpotency_class;
		j["normalizer_equal"] = c.normalizer_equal;
		j["witness"] = c.witness_element ? vector_to_json(*c.witness_element) : Json(nullptr);
		r["cartan"] = std::move(j);
	}
	if (o.socle) {
		require_finite(a, "--socle");
		Json mins = Json::array();
		for (const auto& m : minimal_ideals(a, o.budget))
			mins.push_back(subspace_entry(a, m));
		r["socle"] = Json{{"minimal_ideals", std::move(mins)}, {"socle", subspace_entry(a, socle(a, o.budget))}};
	}
	if (o.frattini) {
		require_finite(a, "--frattini");
		Json maxes = Json::array();
		for (const auto& m : maximal_subalgebras(a, o.budget))
			maxes.push_back(subspace_entry(a, m));
		r["frattini"] = Json{{"maximal_subalgebras", std::move(maxes)}, {"frattini", subspace_entry(a, frattini(a, o.budget))}};
	}
	if (o.primitive) {
		require_finite(a, "--primitive");
		Json j;
		if (auto cert = is_primitive(a, o.budget)) {
			j["primitive"] = true;
			j["lie"] = cert->is_lie;
			j["socle"] = subspace_entry(a, cert->socle);
			if (!cert->socle.is_full()) {
				j["complement"] = subspace_entry(a, primitive_complement(a, *cert, o.budget));
				const ConjugacyReport rep = conjugacy_theorem_check(a, *cert, o.budget);
				j["complement_count"] = rep.complements.size();
				j["all_conjugate"] = rep.holds;
				Json pairs = Json::array();
				for (const auto& p : rep.pairs)
					pairs.push_back(Json{{"first", p.first}, {"second", p.second}, {"conjugator", vector_to_json(p.conjugator)}});
				j["conjugators"] = std::move(pairs);
			}
		} else {
			j["primitive"] = false;
		}
		r["primitive"] = std::move(j);
	}
	return r;
}

std::string analyze_text(const Algebra& a, const Json& r)
{
	std::ostringstream out;
	auto text = [](const Json& entry) { return entry["text"].get<std::string>(); };
	out << "dim " << a.dim() << " over " << a.field().name() << '\n';
	if (!r["leibniz"]["holds"].get<bool>()) {
		const auto& t = r["leibniz"]["failure"]["triple"];
		out << "Leibniz identity fails at (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
		return out.str();
	}
	const auto& p = r["properties"];
	out << "Leibniz identity holds\n";
	out << "lie: " << (p["lie"].get<bool>() ? "yes" : "no") << ", nilpotent: " << (p["nilpotent"].get<bool>() ? "yes" : "no")
	    << ", soluble: " << (p["soluble"].get<bool>() ? "yes" : "no") << '\n';
	if (r.contains("series")) {
		out << "lower central series:";
		for (const auto& s : r["series"]["lower_central"])
			out << ' ' << s["dim"];
		out << "\nderived series:";
		for (const auto& s : r["series"]["derived"])
			out << ' ' << s["dim"];
		out << '\n';
	}
	if (r.contains("centres"))
		out << "left centre: " << text(r["centres"]["left_centre"]) << "\ncentre: " << text(r["centres"]["centre"]) << '\n';
	if (r.contains("normalizer")) {
		const auto& n = r["normalizer"];
		out << "normalizers of " << text(n["subalgebra"]) << ":\n  left:  " << text(n["left"]) << "\n  right: "
		    << text(n["right"]) << (n["right_is_subalgebra"].get<bool>() ? "" : "  (not a subalgebra)")
		    << "\n  full:  " << text(n["full"]) << "\n  centralizer: " << text(n["centralizer"]) << '\n';
	}
	if (r.contains("engel"))
		out << "Engel subalgebra: " << text(r["engel"]["subalgebra"]) << "\nFitting image: " << text(r["engel"]["fitting_image"])
		    << '\n';
	if (r.contains("cartan"))
		out << "Cartan subalgebra (dim " << r["cartan"]["dim"] << ", class " << r["cartan"]["nilpotency_class"]
		    << "): " << text(r["cartan"]) << '\n';
	if (r.contains("socle")) {
		for (const auto& m : r["socle"]["minimal_ideals"])
			out << "minimal ideal: " << text(m) << '\n';
		out << "socle: " << text(r["socle"]["socle"]) << '\n';
	}
	if (r.contains("frattini"))
		out << "maximal subalgebras: " << r["frattini"]["maximal_subalgebras"].size()
		    << "\nFrattini subalgebra: " << text(r["frattini"]["frattini"]) << '\n';
	if (r.contains("primitive")) {
		const auto& pr = r["primitive"];
		if (!pr["primitive"].get<bool>()) {
			out << "not primitive\n";
		} else {
			out << "primitive" << (pr["lie"].get<bool>() ? " (Lie)" : " (non-Lie)") << ", socle " << text(pr["socle"]) << '\n';
			if (pr.contains("complement"))
				out << "complement: " << text(pr["complement"]) << "\ncomplements: " << pr["complement_count"]
				    << (pr["all_conjugate"].get<bool>() ? ", all conjugate" : ", NOT all conjugate") << '\n';
		}
	}
	return out.str();
}

} // namespace leibniz
