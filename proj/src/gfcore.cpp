#include "latcode/gfcore.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latcode::gf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// q = p^e with p prime, or throws.
std::pair<int, int> factor_prime_power(int q) {
    if (q < 2 || q > 256) throw std::invalid_argument("field size must satisfy 2 <= q <= 256, got " + std::to_string(q));
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int e = 0, m = q;
        while (m % p == 0) { m /= p; ++e; }
        if (m != 1) break;  // q has a second prime factor
        return {p, e};
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

// Fixed published irreducible moduli (Conway polynomials), coefficients
// c0..ce with ce = 1, for every prime power 4 <= q <= 256.
const std::map<int, std::vector<int>>& default_moduli() {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {2, 2, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 6, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
        {81, {2, 0, 0, 2, 1}},
        {121, {2, 7, 1}},
        {125, {3, 3, 0, 1}},
        {128, {1, 1, 0, 0, 0, 0, 0, 1}},
        {169, {2, 12, 1}},
        {243, {1, 2, 0, 0, 0, 1}},
        {256, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    };
    return table;
}

std::vector<int> digits_of(int value, int p, int e) {
    std::vector<int> d(e, 0);
    for (int i = 0; i < e && value > 0; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int value_of(const std::vector<int>& digits, int p) {
    int v = 0;
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) v = v * p + digits[i];
    return v;
}

// Product of two polynomial-coded elements, reduced by the modulus.
int polymul_mod(int a, int b, int p, int e, const std::vector<int>& modulus) {
    std::vector<int> da = digits_of(a, p, e), db = digits_of(b, p, e);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // Reduce: x^e = -(c0 + c1 x + ... + c_{e-1} x^{e-1})  (modulus is monic).
    for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i) {
            int sub = (c * modulus[i]) % p;
            prod[d - e + i] = ((prod[d - e + i] - sub) % p + p) % p;
        }
    }
    prod.resize(e);
    return value_of(prod, p);
}

}  // namespace

Field::Field(int q) {
    auto [p, e] = factor_prime_power(q);
    q_ = q;
    p_ = p;
    e_ = e;
    if (e_ > 1) modulus_ = default_moduli().at(q);
    build_tables();
}

Field::Field(int q, const std::vector<int>& modulus) {
    auto [p, e] = factor_prime_power(q);
    q_ = q;
    p_ = p;
    e_ = e;
    if (e_ == 1) {
        if (!modulus.empty())
            throw std::invalid_argument("modulus given for prime field GF(" + std::to_string(q) + ")");
    } else {
        if (static_cast<int>(modulus.size()) != e + 1)
            throw std::invalid_argument("modulus must have degree " + std::to_string(e));
        for (int c : modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
        if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
        modulus_ = modulus;
    }
    build_tables();
}

void Field::build_tables() {
    if (e_ == 1) return;
    // Find a multiplicative generator.  The residue ring GF(p)[x]/(f) has an
    // element of order q-1 iff f is irreducible, so a failed search rejects a
    // reducible modulus.
    for (int g = 1; g < q_; ++g) {
        std::vector<Fe> powers;
        powers.reserve(q_ - 1);
        int cur = 1;
        bool early = false;
        for (int i = 0; i < q_ - 1; ++i) {
            powers.push_back(cur);
            cur = polymul_mod(cur, g, p_, e_, modulus_);
            if (cur == 1 && i + 1 < q_ - 1) { early = true; break; }
        }
        if (early || cur != 1) continue;
        exp_ = std::move(powers);
        log_.assign(q_, -1);
        for (int i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
        for (int a = 1; a < q_; ++a)
            if (log_[a] < 0 || exp_[log_[a]] != a)
                throw consistency_fault("exp/log tables do not invert each other");
        return;
    }
    throw std::invalid_argument("modulus is not irreducible over GF(" + std::to_string(p_) + ")");
}

void Field::check(Fe a) const {
    if (!valid(a))
        throw std::invalid_argument("element " + std::to_string(a) + " out of range for GF(" + std::to_string(q_) + ")");
}

Fe Field::add(Fe a, Fe b) const {
    check(a);
    check(b);
    if (e_ == 1) return (a + b) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Fe Field::neg(Fe a) const {
    check(a);
    if (e_ == 1) return (p_ - a) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Fe Field::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) return (a * b) % p_;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

Fe Field::inv(Fe a) const {
    check(a);
    if (a == 0) throw std::domain_error("inversion of zero in GF(" + std::to_string(q_) + ")");
    if (e_ == 1) {
        // Fermat: a^(p-2)
        int r = 1, base = a, k = p_ - 2;
        while (k > 0) {
            if (k & 1) r = (r * base) % p_;
            base = (base * base) % p_;
            k >>= 1;
        }
        return r;
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::vector<int> SubspaceRepr::encoding() const {
    std::vector<int> digits;
    digits.reserve(basis.size() * n);
    for (const auto& row : basis) digits.insert(digits.end(), row.begin(), row.end());
    return digits;
}

std::string SubspaceRepr::label(int q) const {
    std::ostringstream out;
    bool first = true;
    for (const auto& row : basis) {
        for (Fe v : row) {
            if (q > 10 && !first) out << ',';
            out << v;
            first = false;
        }
    }
    return out.str();
}

bool subspace_less(const SubspaceRepr& a, const SubspaceRepr& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.encoding() < b.encoding();
}

SubspaceRepr rref(const Field& f, const std::vector<VectorGF>& rows, int n) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw shape_error("row length " + std::to_string(r.size()) + " does not match ambient dimension " +
                              std::to_string(n));
    std::vector<VectorGF> m = rows;
    for (auto& r : m)
        for (Fe v : r)
            if (!f.valid(v)) throw std::invalid_argument("matrix entry out of range for GF(" + std::to_string(f.q()) + ")");

    int rank_rows = 0;
    for (int col = 0; col < n && rank_rows < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int i = rank_rows; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank_rows], m[pivot]);
        Fe scale = f.inv(m[rank_rows][col]);
        for (int j = col; j < n; ++j) m[rank_rows][j] = f.mul(m[rank_rows][j], scale);
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == rank_rows || m[i][col] == 0) continue;
            Fe factor = m[i][col];
            for (int j = col; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank_rows][j]));
        }
        ++rank_rows;
    }
    m.resize(rank_rows);
    SubspaceRepr s;
    s.n = n;
    s.basis = std::move(m);
    return s;
}

int rank(const Field& f, const std::vector<VectorGF>& rows, int n) { return rref(f, rows, n).dim(); }

bool in_span(const Field& f, const SubspaceRepr& s, const VectorGF& v) {
    if (static_cast<int>(v.size()) != s.n) throw shape_error("vector length does not match ambient dimension");
    VectorGF r = v;
    for (const auto& row : s.basis) {
        int pivot = 0;
        while (pivot < s.n && row[pivot] == 0) ++pivot;
        if (pivot >= s.n || r[pivot] == 0) continue;
        Fe factor = r[pivot];
        for (int j = 0; j < s.n; ++j) r[j] = f.sub(r[j], f.mul(factor, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Fe x) { return x == 0; });
}

bool subspace_contains(const Field& f, const SubspaceRepr& outer, const SubspaceRepr& inner) {
    if (outer.n != inner.n) throw shape_error("ambient dimensions differ");
    return std::all_of(inner.basis.begin(), inner.basis.end(),
                       [&](const VectorGF& v) { return in_span(f, outer, v); });
}

SubspaceRepr subspace_sum(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y) {
    if (x.n != y.n) throw shape_error("ambient dimensions differ: " + std::to_string(x.n) + " vs " + std::to_string(y.n));
    std::vector<VectorGF> rows = x.basis;
    rows.insert(rows.end(), y.basis.begin(), y.basis.end());
    return rref(f, rows, x.n);
}

SubspaceRepr subspace_intersect(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y) {
    if (x.n != y.n) throw shape_error("ambient dimensions differ: " + std::to_string(x.n) + " vs " + std::to_string(y.n));
    const int n = x.n;
    // Stacked elimination: rows [x | x] and [y | 0]; echelon rows whose left
    // half vanished span the intersection on the right half.
    std::vector<VectorGF> stacked;
    stacked.reserve(x.basis.size() + y.basis.size());
    for (const auto& r : x.basis) {
        VectorGF row(2 * n, 0);
        std::copy(r.begin(), r.end(), row.begin());
        std::copy(r.begin(), r.end(), row.begin() + n);
        stacked.push_back(std::move(row));
    }
    for (const auto& r : y.basis) {
        VectorGF row(2 * n, 0);
        std::copy(r.begin(), r.end(), row.begin());
        stacked.push_back(std::move(row));
    }
    SubspaceRepr ech = rref(f, stacked, 2 * n);
    std::vector<VectorGF> inter;
    for (const auto& row : ech.basis) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n, [](Fe v) { return v == 0; });
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return rref(f, inter, n);
}

int subspace_distance(const Field& f, const SubspaceRepr& x, const SubspaceRepr& y) {
    SubspaceRepr s = subspace_sum(f, x, y);
    SubspaceRepr i = subspace_intersect(f, x, y);
    return s.dim() - i.dim();
}

SubspaceRepr zero_subspace(int n) {
    SubspaceRepr s;
    s.n = n;
    return s;
}

SubspaceRepr full_space(int n) {
    SubspaceRepr s;
    s.n = n;
    for (int i = 0; i < n; ++i) {
        VectorGF row(n, 0);
        row[i] = 1;
        s.basis.push_back(std::move(row));
    }
    return s;
}

namespace {

constexpr std::uint64_t kSaturated = UINT64_C(0x7fffffffffffffff);

std::uint64_t sat_from_i128(__int128 v) {
    if (v > static_cast<__int128>(kSaturated)) return kSaturated;
    return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    // Product formula evaluated exactly; each partial quotient is integral.
    __int128 result = 1;
    for (int i = 0; i < k; ++i) {
        __int128 num = 1, den = 1;
        for (int j = 0; j < n - i; ++j) num *= q;   // q^(n-i)
        for (int j = 0; j < i + 1; ++j) den *= q;   // q^(i+1)
        num -= 1;
        den -= 1;
        result = result * num / den;
        if (result > static_cast<__int128>(kSaturated)) return kSaturated;
    }
    return sat_from_i128(result);
}

std::uint64_t count_subspaces(int n, int q, std::optional<int> k) {
    if (k) return gaussian_binomial(n, *k, q);
    __int128 total = 0;
    for (int i = 0; i <= n; ++i) {
        total += static_cast<__int128>(gaussian_binomial(n, i, q));
        if (total > static_cast<__int128>(kSaturated)) return kSaturated;
    }
    return sat_from_i128(total);
}

std::vector<VectorGF> enumerate_vectors(const Field& f, int n) {
    std::vector<VectorGF> out;
    VectorGF v(n, 0);
    while (true) {
        out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[i] == f.q() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

namespace {

// All dimension-k RREF matrices over GF(q)^n: choose pivot columns, then run
// the free entries through all field values.
void enumerate_dim(const Field& f, int n, int k, std::vector<SubspaceRepr>& out) {
    if (k == 0) {
        out.push_back(zero_subspace(n));
        return;
    }
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // Free positions: (i, j) with j > pivots[i] and j not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (int c : pivots) is_pivot[c] = true;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            SubspaceRepr s;
            s.n = n;
            s.basis.assign(k, VectorGF(n, 0));
            for (int i = 0; i < k; ++i) s.basis[i][pivots[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t) s.basis[free_pos[t].first][free_pos[t].second] = vals[t];
            out.push_back(std::move(s));

            int t = static_cast<int>(vals.size()) - 1;
            while (t >= 0 && vals[t] == f.q() - 1) vals[t--] = 0;
            if (t < 0) break;
            ++vals[t];
        }

        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace

std::vector<SubspaceRepr> enumerate_subspaces(const Field& f, int n, std::optional<int> k, std::uint64_t budget) {
    if (n < 0) throw std::invalid_argument("ambient dimension must be non-negative");
    if (k && (*k < 0 || *k > n)) throw std::domain_error("slice dimension k must satisfy 0 <= k <= n");
    std::uint64_t total = count_subspaces(n, f.q(), k);
    if (total > budget)
        throw resource_error("enumeration budget exceeded: GF(" + std::to_string(f.q()) + ")^" + std::to_string(n) +
                             " has " + std::to_string(total) + " subspaces requested, budget is " +
                             std::to_string(budget));

    std::vector<SubspaceRepr> out;
    out.reserve(static_cast<size_t>(total));
    if (k) {
        enumerate_dim(f, n, *k, out);
    } else {
        for (int d = 0; d <= n; ++d) enumerate_dim(f, n, d, out);
    }
    std::sort(out.begin(), out.end(), subspace_less);
    return out;
}

}  // namespace latcode::gf
