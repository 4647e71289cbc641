#include "parity/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace parity {

namespace {

i64 floor_mod(i64 v, i64 m) {
    i64 r = v % m;
    return r < 0 ? r + m : r;
}

// --- small exact integer linear systems -----------------------------------
//
// Solves M x = t over the integers for a dense r x k matrix (r, k tiny).
// Column-style Hermite elimination with a tracked unimodular transform:
// M U = H where H is in column echelon form; then M x = t reduces to the
// triangular system H z = t and x = U z.  Kernel = the U-columns matching
// zero columns of H.  All arithmetic in 128 bits.

struct LinSystem {
    int rows, cols;
    std::vector<std::vector<i128>> M;  // rows x cols
    std::vector<std::vector<i128>> U;  // cols x cols, starts as identity

    LinSystem(int r, int k) : rows(r), cols(k), M(r, std::vector<i128>(k, 0)) {
        U.assign(k, std::vector<i128>(k, 0));
        for (int i = 0; i < k; ++i) U[i][i] = 1;
    }

    void col_swap(int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(M[r][i], M[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(U[r][i], U[r][j]);
    }
    // (ci, cj) <- (p*ci + q*cj, s*ci + t*cj); |p t - q s| must be 1.
    void col_combine(int i, int j, i128 p, i128 q, i128 s, i128 t) {
        for (int r = 0; r < rows; ++r) {
            i128 a = M[r][i], b = M[r][j];
            M[r][i] = p * a + q * b;
            M[r][j] = s * a + t * b;
        }
        for (int r = 0; r < cols; ++r) {
            i128 a = U[r][i], b = U[r][j];
            U[r][i] = p * a + q * b;
            U[r][j] = s * a + t * b;
        }
    }
    void col_negate(int i) {
        for (int r = 0; r < rows; ++r) M[r][i] = -M[r][i];
        for (int r = 0; r < cols; ++r) U[r][i] = -U[r][i];
    }

    struct Solution {
        bool solvable = false;
        std::vector<i128> particular;            // size cols
        std::vector<std::vector<i128>> kernel;   // basis vectors, size cols each
    };

    Solution solve(const std::vector<i128>& t) {
        // Echelon pass.
        std::vector<int> pivot_col_of_row(rows, -1);
        int next_col = 0;
        for (int row = 0; row < rows && next_col < cols; ++row) {
            int found = -1;
            for (int c = next_col; c < cols; ++c)
                if (M[row][c] != 0) {
                    found = c;
                    break;
                }
            if (found < 0) continue;  // row currently zero on free columns
            col_swap(next_col, found);
            for (int c = next_col + 1; c < cols; ++c) {
                while (M[row][c] != 0) {
                    // gcd step via the Euclidean quotient of the pivot pair
                    i128 a = M[row][next_col], b = M[row][c];
                    i128 q = a == 0 ? 0 : b / a;
                    // c_c <- c_c - q * c_pivot
                    col_combine(next_col, c, 1, 0, -q, 1);
                    if (M[row][c] != 0) col_swap(next_col, c);
                }
            }
            if (M[row][next_col] < 0) col_negate(next_col);
            pivot_col_of_row[row] = next_col;
            ++next_col;
        }
        int rank = next_col;

        // Forward-substitute H z = t; free z components are 0.
        Solution sol;
        std::vector<i128> z(cols, 0);
        for (int row = 0; row < rows; ++row) {
            i128 acc = 0;
            for (int c = 0; c < rank; ++c) acc += M[row][c] * z[c];
            i128 rem = t[row] - acc;
            int pc = pivot_col_of_row[row];
            if (pc < 0) {
                if (rem != 0) return sol;  // inconsistent
                continue;
            }
            if (rem % M[row][pc] != 0) return sol;  // non-integral
            z[pc] = rem / M[row][pc];
        }
        sol.solvable = true;
        sol.particular.assign(cols, 0);
        for (int r = 0; r < cols; ++r) {
            i128 acc = 0;
            for (int c = 0; c < cols; ++c) acc += U[r][c] * z[c];
            sol.particular[r] = acc;
        }
        for (int c = rank; c < cols; ++c) {
            std::vector<i128> v(cols);
            for (int r = 0; r < cols; ++r) v[r] = U[r][c];
            sol.kernel.push_back(std::move(v));
        }
        return sol;
    }
};

}  // namespace

void LatticeCoset::canonicalize_offset(i64 x, i64 y) {
    o1_ = floor_mod(x, d1_);
    i64 a = (x - o1_) / d1_;  // lattice steps consumed along (d1, s)
    o2_ = floor_mod(y - a * s_, d2_);
}

LatticeCoset LatticeCoset::from_generators(const std::vector<Vec2>& gens, Vec2 offset) {
    // Column HNF by extended-gcd accumulation: fold every generator with a
    // nonzero x-component into one pivot (d1, py); the complementary
    // combinations land on the x = 0 axis and their y-gcd is d2.
    i64 px = 0, py = 0;
    i64 d2 = 0;
    for (const Vec2& g : gens) {
        i64 gx = g.x, gy = g.y;
        if (gx == 0) {
            d2 = std::gcd(d2, std::abs(gy));
            continue;
        }
        if (px == 0) {
            px = gx;
            py = gy;
            continue;
        }
        ExtGcd e = ext_gcd(px, gx);
        i128 comp = -static_cast<i128>(gx / e.g) * py + static_cast<i128>(px / e.g) * gy;
        i128 npy = static_cast<i128>(e.u) * py + static_cast<i128>(e.v) * gy;
        d2 = std::gcd(d2, static_cast<i64>(comp < 0 ? -comp : comp));
        px = e.g;
        py = checked_i64(npy, "lattice generator reduction");
    }
    if (px == 0 || d2 == 0)
        throw std::domain_error("LatticeCoset: generators do not span a finite-index lattice");
    if (px < 0) {
        px = -px;
        py = -py;
    }
    LatticeCoset L;
    L.d1_ = px;
    L.s_ = floor_mod(py, d2);
    L.d2_ = d2;
    L.canonicalize_offset(offset.x, offset.y);
    return L;
}

LatticeCoset::LatticeCoset(Mat2 basis_columns, Vec2 offset) {
    if (basis_columns.det() == 0) throw std::domain_error("LatticeCoset: singular basis");
    *this = from_generators({{basis_columns.a, basis_columns.c}, {basis_columns.b, basis_columns.d}},
                            offset);
}

LatticeCoset LatticeCoset::x_congruence(i64 m, i64 r) {
    if (m <= 0) throw std::domain_error("x_congruence: modulus must be positive");
    return from_generators({{m, 0}, {0, 1}}, {r, 0});
}

LatticeCoset LatticeCoset::y_congruence(i64 m, i64 r) {
    if (m <= 0) throw std::domain_error("y_congruence: modulus must be positive");
    return from_generators({{1, 0}, {0, m}}, {0, r});
}

bool LatticeCoset::contains(Vec2 v) const {
    if (floor_mod(v.x - o1_, d1_) != 0) return false;
    i64 a = (v.x - o1_) / d1_;
    return floor_mod(v.y - o2_ - a * s_, d2_) == 0;
}

std::optional<LatticeCoset::RowProgression> LatticeCoset::row_progression(i64 y) const {
    // Points on the line: x = o1 + a*d1 where a satisfies a*s = y - o2 (mod d2).
    i64 g = std::gcd(s_, d2_);  // gcd(0, d2) = d2 covers the shear-free case
    i64 rhs = y - o2_;
    if (floor_mod(rhs, g) != 0) return std::nullopt;
    i64 step_a = d2_ / g;
    i64 a0 = 0;
    if (step_a > 1) {
        ExtGcd e = ext_gcd(s_ / g, step_a);  // inverse of s/g modulo d2/g
        a0 = floor_mod(static_cast<i64>((static_cast<i128>(e.u) * ((rhs / g) % step_a)) % step_a),
                       step_a);
    }
    RowProgression p;
    p.modulus = d1_ * step_a;
    p.residue = floor_mod(o1_ + a0 * d1_, p.modulus);
    return p;
}

std::string LatticeCoset::str() const {
    return "[(" + std::to_string(d1_) + "," + std::to_string(s_) + "),(0," + std::to_string(d2_) +
           ")]+(" + std::to_string(o1_) + "," + std::to_string(o2_) + ")";
}

std::optional<LatticeCoset> intersect(const LatticeCoset& L1, const LatticeCoset& L2) {
    // Solve o1 + B1 u = o2 + B2 w:  [B1 | -B2] (u; w) = o2 - o1.
    LinSystem sys(2, 4);
    sys.M[0][0] = L1.d1();
    sys.M[1][0] = L1.shear();
    sys.M[0][1] = 0;
    sys.M[1][1] = L1.d2();
    sys.M[0][2] = -L2.d1();
    sys.M[1][2] = -L2.shear();
    sys.M[0][3] = 0;
    sys.M[1][3] = -L2.d2();
    Vec2 q1 = L1.offset(), q2 = L2.offset();
    auto sol = sys.solve({q2.x - q1.x, q2.y - q1.y});
    if (!sol.solvable) return std::nullopt;

    auto b1_apply = [&](i128 u0, i128 u1) -> Vec2 {
        i128 x = static_cast<i128>(L1.d1()) * u0;
        i128 y = static_cast<i128>(L1.shear()) * u0 + static_cast<i128>(L1.d2()) * u1;
        return {checked_i64(x, "intersect"), checked_i64(y, "intersect")};
    };
    std::vector<Vec2> gens;
    for (const auto& k : sol.kernel) gens.push_back(b1_apply(k[0], k[1]));
    Vec2 p0 = b1_apply(sol.particular[0], sol.particular[1]);
    return LatticeCoset::from_generators(gens, {q1.x + p0.x, q1.y + p0.y});
}

LatticeCoset affine_image(const Mat2& M, const LatticeCoset& L, i64 den) {
    if (M.det() == 0) throw std::domain_error("affine_image: singular matrix");
    if (den <= 0) throw std::domain_error("affine_image: denominator must be positive");
    auto map = [&](Vec2 v) -> Vec2 {
        Vec2 w = M.apply(v);
        if (w.x % den != 0 || w.y % den != 0)
            throw std::domain_error("affine_image: non-integral image of " + std::to_string(v.x) +
                                    "," + std::to_string(v.y));
        return {w.x / den, w.y / den};
    };
    Vec2 v1 = map({L.d1(), L.shear()});
    Vec2 v2 = map({0, L.d2()});
    Vec2 o = map(L.offset());
    return LatticeCoset::from_generators({v1, v2}, o);
}

std::optional<LatticeCoset> pullback_pair(const LatticeCoset& L, i64 c1, i64 c2) {
    if (c1 == 0 || c2 == 0) throw std::domain_error("pullback_pair: c1, c2 must be nonzero");
    // Unknowns (a, b, u1, u2, w1, w2):
    //   (a, b c1) = o + B u  and  (a, b c2) = o + B w.
    LinSystem sys(4, 6);
    i64 d1 = L.d1(), s = L.shear(), d2 = L.d2();
    Vec2 o = L.offset();
    // row 0: a - d1 u1              = o1
    sys.M[0][0] = 1;
    sys.M[0][2] = -d1;
    // row 1: b c1 - s u1 - d2 u2    = o2
    sys.M[1][1] = c1;
    sys.M[1][2] = -s;
    sys.M[1][3] = -d2;
    // row 2: a - d1 w1              = o1
    sys.M[2][0] = 1;
    sys.M[2][4] = -d1;
    // row 3: b c2 - s w1 - d2 w2    = o2
    sys.M[3][1] = c2;
    sys.M[3][4] = -s;
    sys.M[3][5] = -d2;
    auto sol = sys.solve({o.x, o.y, o.x, o.y});
    if (!sol.solvable) return std::nullopt;
    std::vector<Vec2> gens;
    for (const auto& k : sol.kernel)
        gens.push_back({checked_i64(k[0], "pullback"), checked_i64(k[1], "pullback")});
    Vec2 p0 = {checked_i64(sol.particular[0], "pullback"),
               checked_i64(sol.particular[1], "pullback")};
    return LatticeCoset::from_generators(gens, p0);
}

}  // namespace parity
