#include "torsor/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace torsor {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Row-reduce in place; returns the rank. Columns [0, cols) are eliminated.
int row_reduce(Mat& m, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col];
        for (auto& x : m[rank]) x /= inv;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t cidx = 0; cidx < m[r].size(); ++cidx) m[r][cidx] -= f * m[rank][cidx];
        }
        ++rank;
    }
    return rank;
}

// Solve the d x d system rows * x = rhs; false if singular.
bool solve_square(Mat rows, Vec rhs, Vec& out) {
    int d = static_cast<int>(rows.size());
    for (int i = 0; i < d; ++i) rows[i].push_back(rhs[i]);
    if (row_reduce(rows, d) != d) return false;
    out.assign(d, Rational(0));
    // After full reduction each row has a single leading 1.
    for (int r = 0; r < d; ++r) {
        int lead = -1;
        for (int c = 0; c < d; ++c)
            if (rows[r][c] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) return false;
        out[lead] = rows[r][d];
    }
    return true;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct IneqSystem {
    int dim;
    Mat A;   // rows: a . x <= b
    Vec b;
};

IneqSystem to_le_form(const RationalPolytope& P) {
    IneqSystem sys;
    sys.dim = P.dim;
    for (const auto& h : P.constraints) {
        if (static_cast<int>(h.coeffs.size()) != P.dim)
            throw std::invalid_argument("polytope: constraint arity mismatch");
        if (h.rel == Rel::EQ) throw std::invalid_argument("polytope: unexpected equality");
        Vec row = h.coeffs;
        Rational rhs = h.rhs;
        if (h.rel == Rel::GE) {
            for (auto& x : row) x = -x;
            rhs = -rhs;
        }
        sys.A.push_back(std::move(row));
        sys.b.push_back(rhs);
    }
    return sys;
}

int matrix_rank(Mat m, int cols) { return row_reduce(m, cols); }

// Kernel direction of a rank-(d-1) set of rows; empty if rank < d-1.
Vec kernel_direction(Mat rows, int d) {
    if (row_reduce(rows, d) != d - 1) return {};
    rows.resize(d - 1);
    std::vector<int> lead(d - 1, -1);
    std::vector<bool> is_lead(d, false);
    for (int r = 0; r < d - 1; ++r) {
        for (int c = 0; c < d; ++c)
            if (rows[r][c] != 0) {
                lead[r] = c;
                is_lead[c] = true;
                break;
            }
    }
    int free_col = -1;
    for (int c = 0; c < d; ++c)
        if (!is_lead[c]) {
            free_col = c;
            break;
        }
    Vec w(d, Rational(0));
    w[free_col] = 1;
    for (int r = 0; r < d - 1; ++r) w[lead[r]] = -rows[r][free_col];
    return w;
}

void check_bounded(const IneqSystem& sys) {
    const int d = sys.dim;
    if (matrix_rank(sys.A, d) < d) throw UnboundedPolytope();
    // A pointed nonzero recession cone has an extreme ray cut out by d-1
    // linearly independent rows.
    const int m = static_cast<int>(sys.A.size());
    std::vector<int> comb;  // (d-1)-subsets of rows
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            Mat rows;
            for (int i : comb) rows.push_back(sys.A[i]);
            Vec w = kernel_direction(rows, d);
            if (w.empty()) return;
            bool le = true, ge = true;
            for (int r = 0; r < m; ++r) {
                Rational s = dot(sys.A[r], w);
                le &= (s <= 0);
                ge &= (s >= 0);
            }
            if (le || ge) throw UnboundedPolytope();
            return;
        }
        for (int i = start; i + need <= m; ++i) {
            comb.push_back(i);
            rec(i + 1, need - 1);
            comb.pop_back();
        }
    };
    if (d >= 2) rec(0, d - 1);
}

Mat vertices_of(const IneqSystem& sys) {
    const int d = sys.dim;
    const int m = static_cast<int>(sys.A.size());
    if (m < d) throw UnboundedPolytope();
    std::set<Vec> verts;
    std::vector<int> comb;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            Mat rows;
            Vec rhs;
            for (int i : comb) {
                rows.push_back(sys.A[i]);
                rhs.push_back(sys.b[i]);
            }
            Vec x;
            if (!solve_square(rows, rhs, x)) return;
            for (int r = 0; r < m; ++r)
                if (dot(sys.A[r], x) > sys.b[r]) return;
            verts.insert(x);
            return;
        }
        for (int i = start; i + need <= m; ++i) {
            comb.push_back(i);
            rec(i + 1, need - 1);
            comb.pop_back();
        }
    };
    rec(0, d);
    return Mat(verts.begin(), verts.end());
}

int affine_dim(const Mat& pts, const std::vector<int>& subset) {
    if (subset.empty()) return -1;
    Mat diffs;
    for (size_t i = 1; i < subset.size(); ++i) {
        Vec d = pts[subset[i]];
        for (size_t c = 0; c < d.size(); ++c) d[c] -= pts[subset[0]][c];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(diffs, static_cast<int>(pts[0].size()));
}

// Star triangulation over the face lattice read off the active-constraint
// structure: emits simplices as vertex index lists of size k+1.
void triangulate_face(const IneqSystem& sys, const Mat& verts, const std::vector<int>& face,
                      int k, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(face.size()) == k + 1) {
        out.push_back(face);
        return;
    }
    const int apex = face[0];
    std::set<std::vector<int>> seen;
    for (size_t c = 0; c < sys.A.size(); ++c) {
        if (dot(sys.A[c], verts[apex]) == sys.b[c]) continue;  // apex on this facet
        std::vector<int> sub;
        for (int v : face)
            if (dot(sys.A[c], verts[v]) == sys.b[c]) sub.push_back(v);
        if (sub.size() < static_cast<size_t>(k)) continue;
        if (affine_dim(verts, sub) != k - 1) continue;
        if (!seen.insert(sub).second) continue;
        std::vector<std::vector<int>> pieces;
        triangulate_face(sys, verts, sub, k - 1, pieces);
        for (auto& s : pieces) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

Rational det(Mat m) {
    const int d = static_cast<int>(m.size());
    Rational result = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        Rational inv = m[col][col];
        for (int r = col + 1; r < d; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / inv;
            for (int c2 = col; c2 < d; ++c2) m[r][c2] -= f * m[col][c2];
        }
    }
    return result;
}

}  // namespace

RationalPolytope eliminate_equalities(const RationalPolytope& P) {
    RationalPolytope cur = P;
    for (;;) {
        int eq_idx = -1;
        for (size_t i = 0; i < cur.constraints.size(); ++i)
            if (cur.constraints[i].rel == Rel::EQ) {
                eq_idx = static_cast<int>(i);
                break;
            }
        if (eq_idx < 0) return cur;
        const HalfSpace eq = cur.constraints[eq_idx];
        int pivot = -1;
        for (int c = cur.dim - 1; c >= 0; --c)
            if (eq.coeffs[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0) {
            if (eq.rhs != 0) throw EmptyPolytope();
            cur.constraints.erase(cur.constraints.begin() + eq_idx);
            continue;
        }
        RationalPolytope next;
        next.dim = cur.dim - 1;
        const Rational pc = eq.coeffs[pivot];
        for (size_t i = 0; i < cur.constraints.size(); ++i) {
            if (static_cast<int>(i) == eq_idx) continue;
            const HalfSpace& h = cur.constraints[i];
            Rational f = h.coeffs[pivot] / pc;
            HalfSpace out;
            out.rel = h.rel;
            out.rhs = h.rhs - f * eq.rhs;
            for (int c = 0; c < cur.dim; ++c) {
                if (c == pivot) continue;
                out.coeffs.push_back(h.coeffs[c] - f * eq.coeffs[c]);
            }
            bool all_zero = std::all_of(out.coeffs.begin(), out.coeffs.end(),
                                        [](const Rational& x) { return x == 0; });
            if (all_zero) {
                bool ok = (out.rel == Rel::LE && out.rhs >= 0) ||
                          (out.rel == Rel::GE && out.rhs <= 0) ||
                          (out.rel == Rel::EQ && out.rhs == 0);
                if (!ok) throw EmptyPolytope();
                continue;
            }
            next.constraints.push_back(std::move(out));
        }
        cur = std::move(next);
    }
}

std::vector<std::vector<Rational>> enumerate_vertices(const RationalPolytope& P) {
    return vertices_of(to_le_form(P));
}

Rational polytope_volume_exact(const RationalPolytope& P) {
    RationalPolytope Q = eliminate_equalities(P);
    if (Q.dim == 0) return 1;  // a (nonempty) point has 0-dimensional measure 1
    IneqSystem sys = to_le_form(Q);
    check_bounded(sys);
    Mat verts = vertices_of(sys);
    if (verts.empty()) throw EmptyPolytope();
    std::vector<int> all(verts.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (affine_dim(verts, all) < Q.dim) return 0;  // lower-dimensional: measure zero
    std::vector<std::vector<int>> simplices;
    triangulate_face(sys, verts, all, Q.dim, simplices);
    Rational vol = 0;
    Rational dfact = 1;
    for (int k = 2; k <= Q.dim; ++k) dfact *= k;
    for (const auto& s : simplices) {
        Mat edges;
        for (size_t i = 1; i < s.size(); ++i) {
            Vec e = verts[s[i]];
            for (size_t c = 0; c < e.size(); ++c) e[c] -= verts[s[0]][c];
            edges.push_back(std::move(e));
        }
        Rational dv = det(edges);
        vol += (dv < 0 ? Rational(-dv) : dv);
    }
    return vol / dfact;
}

namespace {

HalfSpace nonneg(int dim, int var) {
    HalfSpace h;
    h.coeffs.assign(dim, Rational(0));
    h.coeffs[var] = 1;
    h.rel = Rel::GE;
    h.rhs = 0;
    return h;
}

HalfSpace make(std::vector<i64> coeffs, Rel rel, i64 rhs) {
    HalfSpace h;
    for (i64 c : coeffs) h.coeffs.emplace_back(c);
    h.rel = rel;
    h.rhs = rhs;
    return h;
}

}  // namespace

RationalPolytope unit_cube(int d) {
    RationalPolytope P;
    P.dim = d;
    for (int i = 0; i < d; ++i) {
        P.constraints.push_back(nonneg(d, i));
        HalfSpace top = nonneg(d, i);
        top.rel = Rel::LE;
        top.rhs = 1;
        P.constraints.push_back(top);
    }
    return P;
}

RationalPolytope standard_simplex(int d) {
    RationalPolytope P;
    P.dim = d;
    for (int i = 0; i < d; ++i) P.constraints.push_back(nonneg(d, i));
    HalfSpace sum;
    sum.coeffs.assign(d, Rational(1));
    sum.rel = Rel::LE;
    sum.rhs = 1;
    P.constraints.push_back(sum);
    return P;
}

RationalPolytope qa1a3_P() {
    RationalPolytope P;
    P.dim = 6;
    for (int i = 0; i < 6; ++i) P.constraints.push_back(nonneg(6, i));
    P.constraints.push_back(make({1, 1, 1, 0, -2, -1}, Rel::GE, 0));
    P.constraints.push_back(make({2, 2, 3, 2, 0, 1}, Rel::EQ, 1));
    return P;
}

RationalPolytope qa1a3_P_prime() {
    RationalPolytope P;
    P.dim = 5;
    for (int i = 0; i < 5; ++i) P.constraints.push_back(nonneg(5, i));
    P.constraints.push_back(make({2, 2, 3, 2, 0}, Rel::LE, 1));
    P.constraints.push_back(make({3, 3, 4, 2, -2}, Rel::GE, 1));
    return P;
}

}  // namespace torsor
