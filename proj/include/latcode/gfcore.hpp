#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcode/errors.hpp"

namespace latcode::gf {

// Field elements are integers in [0, q).  For extension fields GF(p^e) an
// element encodes a polynomial c. + c.x + ... over GF(p) as sum c_i * p^i.
using Fe = int;
using VectorGF = std::vector<Fe>;

// Exact arithmetic in GF(q) for prime powers 2 <= q <= 256.  Prime fields use
// modular arithmetic; extension fields use exp/log tables over an irreducible
// modulus (a fixed published polynomial per (p, e) unless one is supplied).
class Field {
public:
    explicit Field(int q);
    Field(int q, const std::vector<int>& modulus);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }

    // Modulus coefficients c0..ce (monic). Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    bool valid(Fe a) const { return a >= 0 && a < q_; }

    Fe add(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws std::domain_error on a == 0

    bool operator==(const Field& other) const {
        return q_ == other.q_ && modulus_ == other.modulus_;
    }

private:
    void check(Fe a) const;
    void build_tables();

    int q_ = 0, p_ = 0, e_ = 1;
    std::vector<int> modulus_;          // empty for prime fields
    std::vector<Fe> exp_, log_;         // extension fields only
};

// A subspace of GF(q)^n in canonical reduced-row-echelon form.  Two subspaces
// are equal iff their RREF matrices are identical.
struct SubspaceRepr {
    int n = 0;
    std::vector<VectorGF> basis;  // RREF rows, pivots strictly increasing

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero() const { return basis.empty(); }

    // Row-major flattening of the basis entries: a big-endian digit string
    // over base q.  Subspaces of equal dimension compare lexicographically.
    std::vector<int> encoding() const;
    // Printable form of the encoding ("" for the zero subspace).
    std::string label(int q) const;

    bool operator==(const SubspaceRepr& other) const {
        return n == other.n && basis == other.basis;
    }
    bool operator!=(const SubspaceRepr& other) const { return !(*this == other); }
};

// Canonical order: by (dimension, encoding).
bool subspace_less(const SubspaceRepr& a, const SubspaceRepr& b);

// Reduced row echelon form of the span of `rows` (each of length n).
SubspaceRepr rref(const Field& f, const std::vector<VectorGF>& rows, int n);

int rank(const Field& f, const std::vector<VectorGF>& rows, int n);

// Membership of a single vector in the span of an RREF basis.
bool in_span(const Field& f, const SubspaceRepr& s, const VectorGF& v);
bool subspace_contains(const Field& f, const SubspaceRepr& outer, const SubspaceRepr& inner);

// X + Y, the smallest subspace containing both.
SubspaceRepr subspace_sum(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y);

// X ∩ Y via stacked (Zassenhaus-style) elimination.
SubspaceRepr subspace_intersect(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y);

// dim(X+Y) - dim(X∩Y).
int subspace_distance(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y);

SubspaceRepr zero_subspace(int n);
SubspaceRepr full_space(int n);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

// Number of k-dimensional subspaces of GF(q)^n (Gaussian binomial), saturated
// at 2^63-1 to keep budget comparisons safe.
std::uint64_t gaussian_binomial(int n, int k, int q);
std::uint64_t count_subspaces(int n, int q, std::optional<int> k);

// Every subspace of GF(q)^n exactly once, ordered by (dimension, encoding);
// with k given, exactly the Grassmannian slice of dimension k.
std::vector<SubspaceRepr> enumerate_subspaces(
    const Field& f, int n, std::optional<int> k = std::nullopt,
    std::uint64_t budget = kDefaultEnumerationBudget);

// All vectors of GF(q)^n (including zero), in lexicographic order.
std::vector<VectorGF> enumerate_vectors(const Field& f, int n);

}  // namespace latcode::gf
