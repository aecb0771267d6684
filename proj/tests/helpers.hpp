#pragma once

#include <initializer_list>

#include "leibniz/algebra.hpp"

namespace testing {

inline leibniz::Vector vec(const leibniz::Field& f, std::initializer_list<long> xs)
{
	leibniz::Vector v;
	for (long x : xs)
		v.push_back(f.from_int(x));
	return v;
}

inline leibniz::Subspace span(const leibniz::Field& f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows)
{
	std::vector<leibniz::Vector> vs;
	for (auto r : rows)
		vs.push_back(vec(f, r));
	return leibniz::Subspace::span(f, n, vs);
}

inline leibniz::Matrix mat(const leibniz::Field& f, std::initializer_list<std::initializer_list<long>> rows)
{
	std::vector<leibniz::Vector> vs;
	for (auto r : rows)
		vs.push_back(vec(f, r));
	return leibniz::Matrix::from_rows(f, vs.empty() ? 0 : vs.front().size(), vs);
}

} // namespace testing
