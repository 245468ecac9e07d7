#include "latcode/lattice_core.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

namespace latcode::lattice {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& o) const { return Rational(num * o.den + o.num * den, den * o.den); }
Rational Rational::operator-(const Rational& o) const { return Rational(num * o.den - o.num * den, den * o.den); }
bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }

namespace {

void set_bit(std::vector<std::uint64_t>& bits, int words, int row, int col) {
    bits[static_cast<size_t>(row) * words + col / 64] |= std::uint64_t{1} << (col % 64);
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                         std::optional<std::vector<std::string>> labels) {
    if (n <= 0) throw not_a_lattice_error("a lattice needs at least one element", -1, -1);
    if (labels && static_cast<int>(labels->size()) != n)
        throw std::invalid_argument("label count does not match element count");

    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw std::invalid_argument("cover pair (" + std::to_string(lo) + ", " + std::to_string(hi) +
                                        ") references an element out of range");
        if (lo == hi)
            throw not_a_poset_error("cover pair (" + std::to_string(lo) + ", " + std::to_string(lo) +
                                    ") is a self-loop");
        succ[lo].push_back(hi);
        indeg[hi]++;
    }

    // Topological order; a leftover vertex means a cycle.
    std::vector<int> order;
    order.reserve(n);
    std::queue<int> ready;
    {
        std::vector<int> deg = indeg;
        for (int i = 0; i < n; ++i)
            if (deg[i] == 0) ready.push(i);
        while (!ready.empty()) {
            int x = ready.front();
            ready.pop();
            order.push_back(x);
            for (int y : succ[x])
                if (--deg[y] == 0) ready.push(y);
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw not_a_poset_error("cover relation contains a cycle; not a poset");

    FiniteLattice L;
    L.n_ = n;
    L.words_ = (n + 63) / 64;
    L.up_.assign(static_cast<size_t>(n) * L.words_, 0);
    L.down_.assign(static_cast<size_t>(n) * L.words_, 0);

    // Reachability in reverse topological order: up(x) = {x} ∪ ⋃ up(succ(x)).
    for (int idx = n - 1; idx >= 0; --idx) {
        int x = order[idx];
        set_bit(L.up_, L.words_, x, x);
        for (int y : succ[x])
            for (int w = 0; w < L.words_; ++w)
                L.up_[static_cast<size_t>(x) * L.words_ + w] |= L.up_[static_cast<size_t>(y) * L.words_ + w];
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y)) set_bit(L.down_, L.words_, y, x);

    // Join and meet tables, verifying uniqueness pair by pair.
    L.join_.assign(static_cast<size_t>(n) * n, -1);
    L.meet_.assign(static_cast<size_t>(n) * n, -1);
    std::vector<std::uint64_t> bound(L.words_);
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            // Least upper bound: the z in UB with UB ⊆ up(z).
            for (int w = 0; w < L.words_; ++w) bound[w] = L.up_row(x)[w] & L.up_row(y)[w];
            int lub = -1;
            for (int w = 0; w < L.words_ && lub < 0; ++w) {
                std::uint64_t bits = bound[w];
                while (bits) {
                    int z = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    bool least = true;
                    for (int v = 0; v < L.words_; ++v)
                        if ((bound[v] & ~L.up_row(z)[v]) != 0) { least = false; break; }
                    if (least) { lub = z; break; }
                }
            }
            if (lub < 0)
                throw not_a_lattice_error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                          ") has no unique least upper bound", x, y);
            // Greatest lower bound, dually.
            for (int w = 0; w < L.words_; ++w) bound[w] = L.down_row(x)[w] & L.down_row(y)[w];
            int glb = -1;
            for (int w = 0; w < L.words_ && glb < 0; ++w) {
                std::uint64_t bits = bound[w];
                while (bits) {
                    int z = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    bool greatest = true;
                    for (int v = 0; v < L.words_; ++v)
                        if ((bound[v] & ~L.down_row(z)[v]) != 0) { greatest = false; break; }
                    if (greatest) { glb = z; break; }
                }
            }
            if (glb < 0)
                throw not_a_lattice_error("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                          ") has no unique greatest lower bound", x, y);
            L.join_[static_cast<size_t>(x) * n + y] = L.join_[static_cast<size_t>(y) * n + x] = lub;
            L.meet_[static_cast<size_t>(x) * n + y] = L.meet_[static_cast<size_t>(y) * n + x] = glb;
        }
    }

    // Bottom and top exist and are unique once every pair has bounds.
    int bot = 0, top = 0;
    for (int x = 1; x < n; ++x) {
        bot = L.meet(bot, x);
        top = L.join(top, x);
    }
    L.bottom_ = bot;
    L.top_ = top;

    // Stored covers: transitive reduction of the order.
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y || !L.leq(x, y)) continue;
            bool is_cover = true;
            for (int w = 0; w < L.words_; ++w) {
                std::uint64_t between = L.up_row(x)[w] & L.down_row(y)[w];
                if (w == x / 64) between &= ~(std::uint64_t{1} << (x % 64));
                if (w == y / 64) between &= ~(std::uint64_t{1} << (y % 64));
                if (between) { is_cover = false; break; }
            }
            if (is_cover) L.covers_.emplace_back(x, y);
        }
    }
    std::sort(L.covers_.begin(), L.covers_.end());
    L.labels_ = std::move(labels);
    return L;
}

bool FiniteLattice::covers_pair(int lo, int hi) const {
    return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(lo, hi));
}

FiniteLattice FiniteLattice::with_meet_override(int x, int y, int value) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || value < 0 || value >= n_)
        throw std::invalid_argument("meet override out of range");
    FiniteLattice L = *this;
    L.meet_[static_cast<size_t>(x) * n_ + y] = value;
    L.meet_[static_cast<size_t>(y) * n_ + x] = value;
    return L;
}

HeightProfile height(const FiniteLattice& L) {
    const int n = L.size();
    HeightProfile hp;
    hp.heights.assign(n, 0);
    // Longest path over the cover DAG; ascending down-set size is a
    // topological order.
    std::vector<int> order(n), downsize(n, 0);
    for (int x = 0; x < n; ++x) {
        order[x] = x;
        for (int w = 0; w < L.words(); ++w) downsize[x] += std::popcount(L.down_row(x)[w]);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return downsize[a] < downsize[b]; });
    std::vector<std::vector<int>> succ(n);
    for (auto [lo, hi] : L.covers()) succ[lo].push_back(hi);
    for (int x : order)
        for (int y : succ[x]) hp.heights[y] = std::max(hp.heights[y], hp.heights[x] + 1);
    hp.lattice_height = hp.heights[L.top()];
    return hp;
}

std::vector<int> atoms(const FiniteLattice& L) {
    std::vector<int> out;
    for (auto [lo, hi] : L.covers())
        if (lo == L.bottom()) out.push_back(hi);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> whitney_numbers(const FiniteLattice& L) {
    HeightProfile hp = height(L);
    std::vector<long long> w(hp.lattice_height + 1, 0);
    for (int h : hp.heights) w[h]++;
    return w;
}

std::vector<int> sublattice_closure(const FiniteLattice& L, const std::vector<int>& seed) {
    std::vector<bool> in(L.size(), false);
    std::vector<int> members;
    for (int x : seed) {
        if (x < 0 || x >= L.size()) throw std::invalid_argument("seed element out of range");
        if (!in[x]) { in[x] = true; members.push_back(x); }
    }
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            for (int z : {L.join(members[i], members[j]), L.meet(members[i], members[j])}) {
                if (!in[z]) { in[z] = true; members.push_back(z); }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_closed_subset(const FiniteLattice& L, const std::vector<int>& elems) {
    std::vector<bool> in(L.size(), false);
    for (int x : elems) {
        if (x < 0 || x >= L.size()) throw std::invalid_argument("element out of range");
        in[x] = true;
    }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (!in[L.join(elems[i], elems[j])] || !in[L.meet(elems[i], elems[j])]) return false;
    return true;
}

ValuationReport check_valuation(const FiniteLattice& L, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != L.size())
        throw std::invalid_argument("valuation must assign a value to every element");
    ValuationReport r;
    const int n = L.size();
    auto note = [&](bool& flag, std::vector<int> tuple, const char* what) {
        flag = false;
        if (!r.failing_tuple) {
            r.failing_tuple = std::move(tuple);
            r.failing_check = what;
        }
    };
    for (int x = 0; x < n && r.is_valuation; ++x)
        for (int y = x; y < n; ++y)
            if (v[L.join(x, y)] + v[L.meet(x, y)] != v[x] + v[y]) {
                note(r.is_valuation, {x, y}, "valuation identity");
                break;
            }
    for (int x = 0; x < n && r.is_isotone; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y) && !(v[x] <= v[y])) {
                note(r.is_isotone, {x, y}, "isotonicity");
                break;
            }
    for (int x = 0; x < n && r.is_positive; ++x)
        for (int y = 0; y < n; ++y)
            if (L.lt(x, y) && !(v[x] < v[y])) {
                note(r.is_positive, {x, y}, "positivity");
                break;
            }
    // d_v as a metric: separation, non-negativity, triangle inequality.
    auto d = [&](int x, int y) { return v[L.join(x, y)] - v[L.meet(x, y)]; };
    for (int x = 0; x < n && r.metric_ok; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && d(x, y) == Rational(0)) { note(r.metric_ok, {x, y}, "metric separation"); break; }
            if (d(x, y) < Rational(0)) { note(r.metric_ok, {x, y}, "metric non-negativity"); break; }
        }
    for (int x = 0; x < n && r.metric_ok; ++x)
        for (int y = 0; y < n && r.metric_ok; ++y)
            for (int z = 0; z < n; ++z)
                if (!(d(x, z) <= d(x, y) + d(y, z))) {
                    note(r.metric_ok, {x, y, z}, "triangle inequality");
                    break;
                }
    return r;
}

FiniteLattice dual(const FiniteLattice& L) {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(L.covers().size());
    for (auto [lo, hi] : L.covers()) rev.emplace_back(hi, lo);
    return FiniteLattice::from_covers(L.size(), rev, L.labels());
}

std::string hasse_export(const FiniteLattice& L) {
    HeightProfile hp = height(L);
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int x = 0; x < L.size(); ++x) {
        std::string label = L.labels() ? (*L.labels())[x] : std::to_string(x);
        std::string escaped;
        for (char c : label) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        out << "  n" << x << " [label=\"" << escaped << "\"];\n";
    }
    for (int h = 0; h <= hp.lattice_height; ++h) {
        out << "  { rank=same;";
        for (int x = 0; x < L.size(); ++x)
            if (hp.heights[x] == h) out << " n" << x << ";";
        out << " }\n";
    }
    for (auto [lo, hi] : L.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

FiniteLattice boolean_lattice(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("boolean lattice size out of range");
    int size = 1 << n;
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels(size);
    for (int mask = 0; mask < size; ++mask) {
        std::string l(n, '0');
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) l[i] = '1';
        labels[mask] = l;
        for (int i = 0; i < n; ++i)
            if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
    }
    return FiniteLattice::from_covers(size, covers, labels);
}

FiniteLattice chain_lattice(int length) {
    if (length < 0) throw std::invalid_argument("chain length must be non-negative");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < length; ++i) covers.emplace_back(i, i + 1);
    return FiniteLattice::from_covers(length + 1, covers);
}

FiniteLattice m3() {
    return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice n5() {
    // 0 = bottom, 1 ⋖ 2 the long side, 3 the short side, 4 = top.
    return FiniteLattice::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FiniteLattice induced_lattice(const FiniteLattice& L, const std::vector<int>& elems) {
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw precondition_error("cannot induce a lattice on the empty set");
    if (!is_closed_subset(L, sorted))
        throw precondition_error("element set is not closed under join and meet");
    const int m = static_cast<int>(sorted.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && L.leq(sorted[i], sorted[j])) pairs.emplace_back(i, j);
    std::vector<std::string> labels;
    labels.reserve(m);
    for (int x : sorted) labels.push_back(L.labels() ? (*L.labels())[x] : std::to_string(x));
    return FiniteLattice::from_covers(m, pairs, labels);
}

}  // namespace latcode::lattice
