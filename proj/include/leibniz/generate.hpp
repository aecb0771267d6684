#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/bimodule.hpp"

namespace leibniz {

/// The Lie algebra L extended by a module M: (l, m)(l', m') = (l l', T_l m' + S_{l'} m),
/// with S = 0 (never Lie once T != 0) or S = -T (the semidirect product).
/// Throws NotLie or NotBimodule.
Algebra split_extension(const Algebra& lie, const std::vector<Matrix>& t, RightAction mode,
                        std::vector<std::string> module_labels = {});

/// Basis a, a^2, ..., a^k with a a^i = a^{i+1}, a a^k = 0, every other product zero.
Algebra cyclic_algebra(std::size_t k, Field field);

/// Products e_i e_j supported on e_k with k > max(i, j), drawn sparsely at
/// random from the seed until the Leibniz identity holds.
/// Throws RetryBudgetExceeded.
Algebra random_nilpotent(std::size_t n, Field field, std::uint64_t seed, std::size_t retry_budget = 200'000);

/// The four-dimensional algebra on u, n, k, n^2 with un = u, nu = -u + k,
/// un^2 = k, nk = -k, nn = n^2 and every other product zero.
Algebra paper_example(Field field);

Algebra abelian_algebra(std::size_t n, Field field);
/// x y = z, y x = -z.
Algebra heisenberg_algebra(Field field);
/// h x = x, x h = -x.
Algebra two_dim_nonabelian_lie(Field field);
/// e f = h, h e = 2e, h f = -2f (and antisymmetric).
Algebra sl2(Field field);

struct KnownFlags
{
	std::optional<bool> nilpotent;
	std::optional<bool> soluble;
	std::optional<bool> lie;
	std::optional<bool> primitive;
};

struct CorpusEntry
{
	std::string name;
	Algebra algebra;
	std::string construction;           ///< generator tag
	std::vector<std::string> parameters; ///< "key=value"
	std::optional<std::uint64_t> seed;
	KnownFlags flags;
};

/// Re-verifies the Leibniz identity and every flag that is set; returns a
/// description of the first mismatch.
std::optional<std::string> verify_entry(const CorpusEntry& entry, std::uint64_t budget = default_budget);

/// Bimodules on which every T_a is nilpotent: nilpotent Lie representations
/// in both right-action modes, and ideals of nilpotent algebras.
std::vector<std::pair<std::string, Bimodule>> nil_bimodule_family();

/// The built-in corpus: deterministic, mixes Q and F_2, F_3, F_5, F_7.
std::vector<CorpusEntry> default_corpus();

} // namespace leibniz
