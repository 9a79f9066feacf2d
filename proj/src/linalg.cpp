#include "okbody/linalg.hpp"

#include <algorithm>
#include <set>

#include "okbody/errors.hpp"

namespace okb {

Rational dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size())
        fail("DimensionMismatch", "dot of vectors of different length");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecQ mat_vec(const MatQ& m, const VecQ& v) {
    VecQ out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

VecQ scaled(const VecQ& v, const Rational& c) {
    VecQ out(v);
    for (auto& x : out) x *= c;
    return out;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) fail("DimensionMismatch", "vector addition");
    VecQ out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) fail("DimensionMismatch", "vector subtraction");
    VecQ out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

bool is_zero_vec(const VecQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {

// Row-echelon elimination; returns rank, accumulates det sign/pivots if asked.
int eliminate(MatQ& m, Rational* det_out) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    Rational d(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) {
            if (det_out) d = Rational(0);
            continue;
        }
        if (piv != r) {
            std::swap(m[piv], m[r]);
            d = -d;
        }
        d *= m[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    if (det_out) *det_out = (r == rows && rows == cols) ? d : Rational(0);
    return static_cast<int>(r);
}

} // namespace

Rational det(MatQ m) {
    if (m.empty()) return Rational(1);
    if (m.size() != m[0].size()) fail("DimensionMismatch", "det of non-square matrix");
    Rational d;
    eliminate(m, &d);
    return d;
}

int rank(MatQ m) {
    if (m.empty()) return 0;
    return eliminate(m, nullptr);
}

std::optional<VecQ> solve(MatQ a, VecQ b) {
    const size_t n = a.size();
    if (n == 0) return VecQ{};
    if (a[0].size() != n || b.size() != n)
        fail("DimensionMismatch", "solve expects square system");
    // Forward elimination with pivots restricted to the coefficient columns.
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt; // singular
        if (piv != c) {
            std::swap(a[piv], a[c]);
            std::swap(b[piv], b[c]);
        }
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    VecQ x(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

Inertia signature(MatQ q) {
    const size_t n = q.size();
    for (const auto& row : q)
        if (row.size() != n) fail("DimensionMismatch", "signature of non-square matrix");
    Inertia sig;
    // Symmetric congruence diagonalization.
    for (size_t k = 0; k < n; ++k) {
        if (q[k][k].is_zero()) {
            size_t swap_with = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!q[i][i].is_zero()) { swap_with = i; break; }
            if (swap_with < n) {
                std::swap(q[k], q[swap_with]);
                for (auto& row : q) std::swap(row[k], row[swap_with]);
            } else {
                size_t j = n;
                for (size_t i = k + 1; i < n; ++i)
                    if (!q[k][i].is_zero()) { j = i; break; }
                if (j == n) { ++sig.zero; continue; } // row is zero
                // add row/col j into k; diagonal becomes 2 q[k][j] != 0
                for (size_t c = 0; c < n; ++c) q[k][c] += q[j][c];
                for (size_t r = 0; r < n; ++r) q[r][k] += q[r][j];
            }
        }
        const Rational piv = q[k][k];
        if (piv.is_zero()) { ++sig.zero; continue; }
        for (size_t i = k + 1; i < n; ++i) {
            if (q[i][k].is_zero()) continue;
            const Rational f = q[i][k] / piv;
            for (size_t c = 0; c < n; ++c) q[i][c] -= f * q[k][c];
            for (size_t r = 0; r < n; ++r) q[r][i] -= f * q[r][k];
        }
        (piv.sign() > 0 ? sig.positive : sig.negative)++;
    }
    return sig;
}

bool negative_definite(const MatQ& g) {
    const size_t n = g.size();
    for (size_t k = 1; k <= n; ++k) {
        MatQ minor(k, VecQ(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = g[i][j];
        const Rational d = det(std::move(minor));
        const int want = (k % 2 == 0) ? 1 : -1;
        if (d.sign() != want) return false;
    }
    return true;
}

VecQ primitive(const VecQ& v) {
    mpz_class den_lcm(1);
    for (const auto& x : v) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
        den_lcm = l;
    }
    mpz_class num_gcd(0);
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        mpz_class n = x.num() * (den_lcm / x.den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        num_gcd = g;
        ints.push_back(n);
    }
    if (num_gcd == 0) fail("DimensionMismatch", "primitive of zero vector");
    VecQ out;
    out.reserve(v.size());
    for (const auto& n : ints) out.emplace_back(Rational(n / num_gcd));
    return out;
}

namespace {

// Primitive covector annihilating the span of `rows` (must have corank 1).
std::optional<VecQ> orthogonal_covector(const std::vector<VecQ>& rows, int dim) {
    MatQ m(rows.begin(), rows.end());
    if (eliminate(m, nullptr) != dim - 1) return std::nullopt;
    // Back-substitute a kernel vector of the row span.
    // Rebuild echelon pivots.
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < dim && r < m.size(); ++c) {
        if (!m[r][c].is_zero()) { pivot_col.push_back(c); ++r; }
    }
    std::set<int> pivots(pivot_col.begin(), pivot_col.end());
    int free_col = -1;
    for (int c = 0; c < dim; ++c)
        if (!pivots.count(c)) { free_col = c; break; }
    VecQ x(dim, Rational(0));
    x[free_col] = Rational(1);
    for (size_t i = pivot_col.size(); i-- > 0;) {
        const int pc = pivot_col[i];
        Rational s(0);
        for (int c = pc + 1; c < dim; ++c) s -= m[i][c] * x[c];
        x[pc] = s / m[i][pc];
    }
    return primitive(x);
}

std::optional<std::vector<VecQ>> dual_description(const std::vector<VecQ>& vecs,
                                                  int dim, bool facets) {
    {
        MatQ m(vecs.begin(), vecs.end());
        if (eliminate(m, nullptr) != dim) return std::nullopt;
    }
    std::vector<VecQ> out;
    const size_t n = vecs.size();
    if (dim == 1) {
        bool pos = false, neg = false;
        for (const auto& v : vecs) {
            if (v[0].sign() > 0) pos = true;
            if (v[0].sign() < 0) neg = true;
        }
        if (pos && neg) return out; // whole line: no facet / no extreme ray
        out.push_back({Rational(pos ? 1 : -1)});
        return out;
    }
    // Enumerate (dim-1)-subsets; fine at the ranks this library works in.
    std::vector<size_t> idx(dim - 1);
    auto emit = [&](const VecQ& w) {
        int pos = 0, neg = 0;
        for (const auto& v : vecs) {
            const int s = dot(w, v).sign();
            pos += s > 0;
            neg += s < 0;
        }
        if (pos && neg) return;
        VecQ f = (neg > 0) ? scaled(w, Rational(-1)) : w;
        if (pos == 0 && neg == 0) return; // annihilates everything; not facet-like
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    };
    // Recursive subset enumeration.
    auto rec = [&](auto&& self, size_t start, int chosen) -> void {
        if (chosen == dim - 1) {
            std::vector<VecQ> rows;
            rows.reserve(idx.size());
            for (int i = 0; i < dim - 1; ++i) rows.push_back(vecs[idx[i]]);
            if (auto w = orthogonal_covector(rows, dim)) emit(*w);
            return;
        }
        for (size_t i = start; i < n; ++i) {
            idx[chosen] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
    (void)facets;
    std::sort(out.begin(), out.end(), [](const VecQ& a, const VecQ& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return a[i] < b[i];
        return false;
    });
    return out;
}

} // namespace

std::optional<std::vector<VecQ>> cone_facets_from_generators(
    const std::vector<VecQ>& gens, int dim) {
    return dual_description(gens, dim, true);
}

std::optional<std::vector<VecQ>> cone_rays_from_facets(
    const std::vector<VecQ>& facets, int dim) {
    return dual_description(facets, dim, false);
}

} // namespace okb
