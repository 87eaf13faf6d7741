#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "detail/smallrat.hpp"

// Exact geometry kernels for comprehensive polyhedra conv(V) + R_-^K.
// Templated on the scalar so each entry point can run on word-sized fractions
// first and fall back to big rationals on ArithmeticOverflow.

namespace actsets::detail {

template <class S>
using Vec = std::vector<S>;

template <class S>
S vdot(const Vec<S>& a, const Vec<S>& b) {
    S acc{0};
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

/// Gaussian elimination; returns false when the system is singular.
template <class S>
bool solve_square(std::vector<Vec<S>> a, Vec<S> b, Vec<S>& out) {
    const size_t n = a.size();
    std::vector<size_t> col(n);
    for (size_t i = 0; i < n; ++i) col[i] = i;
    for (size_t r = 0; r < n; ++r) {
        size_t pr = r;
        while (pr < n && is_zero(a[pr][col[r]])) ++pr;
        size_t pc = r;
        if (pr == n) {
            // search the remaining block for any nonzero pivot
            bool found = false;
            for (size_t c = r; c < n && !found; ++c) {
                for (size_t i = r; i < n && !found; ++i) {
                    if (!is_zero(a[i][col[c]])) {
                        pr = i;
                        pc = c;
                        found = true;
                    }
                }
            }
            if (!found) return false;
        }
        std::swap(a[r], a[pr]);
        std::swap(b[r], b[pr]);
        std::swap(col[r], col[pc]);
        const S piv = a[r][col[r]];
        for (size_t i = 0; i < n; ++i) {
            if (i == r || is_zero(a[i][col[r]])) continue;
            S f = a[i][col[r]] / piv;
            for (size_t j = r; j < n; ++j) a[i][col[j]] -= f * a[r][col[j]];
            a[i][col[r]] = S{0};
            b[i] -= f * b[r];
        }
    }
    out.assign(n, S{0});
    for (size_t r = 0; r < n; ++r) out[col[r]] = b[r] / a[r][col[r]];
    return true;
}

template <class S>
int rank_of(std::vector<Vec<S>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (is_zero(rows[i][c])) continue;
            S f = rows[i][c] / rows[r][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Feasibility of  sum_j l_j P[j] + sum_d v_d D[d] = target,  sum_j l_j = 1,
/// l >= 0, v >= 0.  Phase-I simplex with Bland's rule (terminates, exact).
template <class S>
bool in_convex_plus_cone(const std::vector<Vec<S>>& points,
                         const std::vector<Vec<S>>& cone_rays,
                         const Vec<S>& target) {
    const size_t k = target.size();
    const size_t rows = k + 1;
    const size_t np = points.size();
    const size_t nd = cone_rays.size();
    const size_t nx = np + nd;           // structural columns
    const size_t cols = nx + rows + 1;   // + artificials + rhs

    std::vector<Vec<S>> t(rows, Vec<S>(cols, S{0}));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < np; ++j) t[i][j] = points[j][i];
        for (size_t j = 0; j < nd; ++j) t[i][np + j] = cone_rays[j][i];
        t[i][cols - 1] = target[i];
    }
    for (size_t j = 0; j < np; ++j) t[rows - 1][j] = S{1};
    t[rows - 1][cols - 1] = S{1};

    for (size_t i = 0; i < rows; ++i) {
        if (sign(t[i][cols - 1]) < 0)
            for (size_t j = 0; j < cols; ++j) t[i][j] = -t[i][j];
        t[i][nx + i] = S{1};
    }

    // Reduced-cost row for minimizing the artificial sum.
    Vec<S> z(cols, S{0});
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) z[j] -= t[i][j];
    for (size_t i = 0; i < rows; ++i) z[nx + i] = S{0};

    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = nx + i;

    for (;;) {
        size_t enter = cols - 1;
        for (size_t j = 0; j < cols - 1; ++j) {
            if (sign(z[j]) < 0) {
                enter = j;
                break;  // Bland: lowest index
            }
        }
        if (enter == cols - 1) break;  // optimal

        size_t leave = rows;
        for (size_t i = 0; i < rows; ++i) {
            if (sign(t[i][enter]) <= 0) continue;
            if (leave == rows) {
                leave = i;
                continue;
            }
            // ratio test; Bland tie-break on basis index
            S lhs = t[i][cols - 1] * t[leave][enter];
            S rhs = t[leave][cols - 1] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == rows) return false;  // cannot happen in phase I; treated as infeasible

        const S piv = t[leave][enter];
        for (size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || is_zero(t[i][enter])) continue;
            S f = t[i][enter];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        {
            S f = z[enter];
            if (!is_zero(f))
                for (size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return is_zero(z[cols - 1]);
}

/// Indices of the points that are vertices of conv(points) + R_-^K, assuming
/// the list is already deduplicated. Keeps the input order.
template <class S>
std::vector<int> canonical_vertex_indices(const std::vector<Vec<S>>& points) {
    const size_t n = points.size();
    const size_t k = n == 0 ? 0 : points[0].size();
    std::vector<char> alive(n, 1);

    // cheap pass: componentwise domination
    for (size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (size_t j = 0; j < n; ++j) {
            if (i == j || !alive[j]) continue;
            bool geq = true;
            for (size_t c = 0; c < k; ++c)
                if (points[j][c] < points[i][c]) {
                    geq = false;
                    break;
                }
            if (geq) {
                alive[i] = 0;
                break;
            }
        }
    }

    std::vector<Vec<S>> rays(k, Vec<S>(k, S{0}));
    for (size_t c = 0; c < k; ++c) rays[c][c] = S{-1};

    // exact pass: membership in the hull of the surviving others
    for (size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        std::vector<Vec<S>> others;
        others.reserve(n);
        for (size_t j = 0; j < n; ++j)
            if (alive[j] && j != i) others.push_back(points[j]);
        if (others.empty()) continue;
        if (in_convex_plus_cone(others, rays, points[i])) alive[i] = 0;
    }

    std::vector<int> out;
    for (size_t i = 0; i < n; ++i)
        if (alive[i]) out.push_back(static_cast<int>(i));
    return out;
}

template <class S>
struct FacetK {
    Vec<S> normal;  // entries >= 0, sum 1
    S offset;
};

template <class S>
bool lex_less_vec(const Vec<S>& a, const Vec<S>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

namespace impl {

inline void for_each_subset(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
    if (r > n || r < 0) return;
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace impl

/// All facets of conv(gens) + R_-^K, normals normalized to unit coordinate
/// sum, sorted lexicographically by normal. gens need not be canonical.
template <class S>
std::vector<FacetK<S>> enumerate_facets(const std::vector<Vec<S>>& gens, int k) {
    std::vector<FacetK<S>> out;
    const int n = static_cast<int>(gens.size());

    auto consider = [&](const std::vector<int>& pts, const std::vector<int>& dirs) {
        // system: <n, a_i - a_0> = 0, n_d = 0 for d in dirs, sum n = 1
        std::vector<Vec<S>> a;
        Vec<S> rhs;
        const Vec<S>& base = gens[static_cast<size_t>(pts[0])];
        for (size_t i = 1; i < pts.size(); ++i) {
            Vec<S> row(static_cast<size_t>(k));
            for (int c = 0; c < k; ++c)
                row[static_cast<size_t>(c)] =
                    gens[static_cast<size_t>(pts[i])][static_cast<size_t>(c)] - base[static_cast<size_t>(c)];
            a.push_back(std::move(row));
            rhs.push_back(S{0});
        }
        for (int d : dirs) {
            Vec<S> row(static_cast<size_t>(k), S{0});
            row[static_cast<size_t>(d)] = S{1};
            a.push_back(std::move(row));
            rhs.push_back(S{0});
        }
        a.push_back(Vec<S>(static_cast<size_t>(k), S{1}));
        rhs.push_back(S{1});

        Vec<S> normal;
        if (!solve_square(std::move(a), std::move(rhs), normal)) return;
        for (const S& c : normal)
            if (sign(c) < 0) return;

        S offset = vdot(normal, base);
        std::vector<int> attainers;
        for (int j = 0; j < n; ++j) {
            S v = vdot(normal, gens[static_cast<size_t>(j)]);
            if (v > offset) return;  // not supporting
            if (v == offset) attainers.push_back(j);
        }

        // the face must have dimension k-1
        std::vector<Vec<S>> span_rows;
        const Vec<S>& f0 = gens[static_cast<size_t>(attainers[0])];
        for (size_t i = 1; i < attainers.size(); ++i) {
            Vec<S> row(static_cast<size_t>(k));
            for (int c = 0; c < k; ++c)
                row[static_cast<size_t>(c)] =
                    gens[static_cast<size_t>(attainers[i])][static_cast<size_t>(c)] - f0[static_cast<size_t>(c)];
            span_rows.push_back(std::move(row));
        }
        for (int c = 0; c < k; ++c) {
            if (is_zero(normal[static_cast<size_t>(c)])) {
                Vec<S> row(static_cast<size_t>(k), S{0});
                row[static_cast<size_t>(c)] = S{1};
                span_rows.push_back(std::move(row));
            }
        }
        if (rank_of(std::move(span_rows)) != k - 1) return;

        for (const auto& f : out)
            if (f.normal == normal) return;
        out.push_back(FacetK<S>{std::move(normal), std::move(offset)});
    };

    for (int j = 1; j <= k && j <= n; ++j) {
        impl::for_each_subset(n, j, [&](const std::vector<int>& pts) {
            impl::for_each_subset(k, k - j, [&](const std::vector<int>& dirs) {
                consider(pts, dirs);
            });
        });
    }

    std::sort(out.begin(), out.end(), [](const FacetK<S>& x, const FacetK<S>& y) {
        return lex_less_vec(x.normal, y.normal);
    });
    return out;
}

/// True when every coordinate direction is a convex combination of the facet
/// normals; equivalently the polyhedron's support is finite on the simplex.
template <class S>
bool normals_positively_span(const std::vector<FacetK<S>>& facets, int k) {
    std::vector<Vec<S>> normals;
    normals.reserve(facets.size());
    for (const auto& f : facets) normals.push_back(f.normal);
    for (int c = 0; c < k; ++c) {
        Vec<S> e(static_cast<size_t>(k), S{0});
        e[static_cast<size_t>(c)] = S{1};
        if (!in_convex_plus_cone(normals, {}, e)) return false;
    }
    return true;
}

/// All vertices of the intersection of <normal,x> <= offset halfspaces.
/// Assumes the support is bounded on the simplex (pointed, nonempty).
template <class S>
std::vector<Vec<S>> enumerate_vertices(const std::vector<FacetK<S>>& facets, int k) {
    std::vector<Vec<S>> out;
    const int n = static_cast<int>(facets.size());
    impl::for_each_subset(n, k, [&](const std::vector<int>& idx) {
        std::vector<Vec<S>> a;
        Vec<S> b;
        for (int i : idx) {
            a.push_back(facets[static_cast<size_t>(i)].normal);
            b.push_back(facets[static_cast<size_t>(i)].offset);
        }
        Vec<S> x;
        if (!solve_square(std::move(a), std::move(b), x)) return;
        for (int j = 0; j < n; ++j) {
            if (vdot(facets[static_cast<size_t>(j)].normal, x) > facets[static_cast<size_t>(j)].offset)
                return;
        }
        for (const auto& v : out)
            if (v == x) return;
        out.push_back(std::move(x));
    });
    std::sort(out.begin(), out.end(), [](const Vec<S>& x, const Vec<S>& y) {
        return lex_less_vec(x, y);
    });
    return out;
}

/// Vertices of {p : sum p = 1, p >= 0, <c_i, p> >= r_i for all i}.
template <class S>
std::vector<Vec<S>> polytope_in_simplex_vertices(
    int k, const std::vector<std::pair<Vec<S>, S>>& ineqs) {
    // constraint list: the given inequalities then the coordinate bounds
    std::vector<std::pair<Vec<S>, S>> all = ineqs;
    for (int c = 0; c < k; ++c) {
        Vec<S> e(static_cast<size_t>(k), S{0});
        e[static_cast<size_t>(c)] = S{1};
        all.emplace_back(std::move(e), S{0});
    }
    const int n = static_cast<int>(all.size());
    std::vector<Vec<S>> out;
    auto feasible = [&](const Vec<S>& p) {
        for (const auto& [c, r] : all)
            if (vdot(c, p) < r) return false;
        return true;
    };
    impl::for_each_subset(n, k - 1, [&](const std::vector<int>& idx) {
        std::vector<Vec<S>> a;
        Vec<S> b;
        for (int i : idx) {
            a.push_back(all[static_cast<size_t>(i)].first);
            b.push_back(all[static_cast<size_t>(i)].second);
        }
        a.push_back(Vec<S>(static_cast<size_t>(k), S{1}));
        b.push_back(S{1});
        Vec<S> p;
        if (!solve_square(std::move(a), std::move(b), p)) return;
        if (!feasible(p)) return;
        for (const auto& v : out)
            if (v == p) return;
        out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end(), [](const Vec<S>& x, const Vec<S>& y) {
        return lex_less_vec(x, y);
    });
    return out;
}

}  // namespace actsets::detail
