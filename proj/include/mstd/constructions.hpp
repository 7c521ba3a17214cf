#pragma once
// Generators for the explicit MSTD families: the parametric theorem-2..6
// constructions, the named catalog A_1..A_15 / S4_X, base expansion and the
// two-factor product embedding.

#include <optional>
#include <string>
#include <vector>

#include "mstd/core_sets.hpp"

namespace mstd {

enum class Family { T2, T3, T4, T5, T6, BaseExpand, ProductEmbed, Catalog };

struct ConstructionResult {
    IntSet primary_set;                 // A
    std::optional<IntSet> companion_set; // A* (theorem5) or the extended set (theorem6)
    IntSet symmetric_core;              // B
    int64_t claimed_delta;              // for primary_set
    bool verified;                      // delta matches and B is symmetric
};

// name in {A_1..A_15, S4_X}; throws validation_error on unknown names.
IntSet catalog(const std::string& name);
const std::vector<std::string>& catalog_names();

// X = {2^n - 2^j : k <= j <= n}, m = (2^{n+1}+d) + (2^n-2^k), Y = m-X,
// Z = {2^n + jd : 1 <= j <= (2^n-2^k)/d}, A = X⊔Y⊔Z ∪ {2^n}.
// Requires n >= 3, 0 <= k <= n-2, d > 1, d | 2^{n-k}-1.
ConstructionResult theorem2(int64_t n, int64_t k, int64_t d);

// X = {2^n - 2^j : 0 <= j <= n}, m = (2^{n+1}-1) + (2^n-2^l), A = X⊔(m-X) ∪ {2^n}.
// Requires n >= 3, 1 <= l <= n-2.
ConstructionResult theorem3(int64_t n, int64_t l);

// X = {jd : 0 <= j <= n}, m = (4n+1)d + 1, Z = (2nd, (2n+1)d],
// A = X⊔(m-X)⊔Z ∪ {2nd}. Requires n > 1, d > 1.
ConstructionResult theorem4(int64_t n, int64_t d);

// X = {2j : 0 <= j < n}, m = 2(k+1)n - 2, Z = {2jn-1 : 1 <= j <= k},
// A* = X⊔(m-X)⊔Z ∪ {2n}, A = A* ∪ {m+2}; primary_set = A, companion_set = A*.
// Requires n >= 2, k >= 3.
ConstructionResult theorem5(int64_t n, int64_t k);

// X = [0,n], m = (2k+3)n, Z = ⊔_{j=1..k} [2jn+1, (2j+1)n-1], A = X⊔(m-X)⊔Z ∪ {2n},
// companion_set = A ⊔ [(2k+4)n, (2k+5)n) with delta 2. Requires n > 1, k > 1.
ConstructionResult theorem6(int64_t n, int64_t k);

// {sum over i<t of a_i m^i : a_i in A}; m defaults to 2*max(A)+1 and must be
// at least that (no carries, so |result ± result| = |A ± A|^t).
IntSet base_expand(const IntSet& a, int64_t t, std::optional<int64_t> m = std::nullopt);

// {lambda*a + mu*b}; defaults lambda=1, mu=2*max(A)+1. Rejects colliding
// choices (|result| < |A|*|B|). Satisfies |C ± C| = |A ± A|*|B ± B|.
IntSet product_embed(const IntSet& a, const IntSet& b,
                     std::optional<int64_t> lambda = std::nullopt,
                     std::optional<int64_t> mu = std::nullopt);

} // namespace mstd
