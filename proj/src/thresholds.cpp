#include "hypermatch/thresholds.hpp"

#include <algorithm>
#include <cmath>

#include "hypermatch/constructions.hpp"
#include "hypermatch/error.hpp"

namespace hypermatch {

namespace {

void check_kdm(int k, int d, int m) {
    if (d < 1 || d > k - 1) raise(ErrorKind::BadParameter, "need 1 <= d <= k-1");
    if (m < 2) raise(ErrorKind::BadParameter, "need modulus m >= 2");
}

// One term family evaluator: the exact binomial coefficients of (x + (1-x))^{k-d}
// bucketed by residue class.
struct TermTable {
    int deg;                           // k - d
    int m;
    std::vector<double> coef;          // C(k-d, j'), j' = 0..deg

    TermTable(int k, int d, int m_) : deg(k - d), m(m_), coef(static_cast<size_t>(deg) + 1) {
        for (int j = 0; j <= deg; ++j)
            coef[static_cast<size_t>(j)] = binom_big(deg, j).convert_to<double>();
    }

    // Fills out[r] with the residue-class sums at x via incremental powers.
    void profile(double x, std::span<double> out) const {
        for (double& v : out) v = 0.0;
        double y = 1.0 - x;
        std::vector<double> px(static_cast<size_t>(deg) + 1, 1.0);
        std::vector<double> py(static_cast<size_t>(deg) + 1, 1.0);
        for (int j = 1; j <= deg; ++j) {
            px[static_cast<size_t>(j)] = px[static_cast<size_t>(j - 1)] * x;
            py[static_cast<size_t>(j)] = py[static_cast<size_t>(j - 1)] * y;
        }
        for (int j = 0; j <= deg; ++j)
            out[static_cast<size_t>(j % m)] += coef[static_cast<size_t>(j)] *
                                               px[static_cast<size_t>(j)] *
                                               py[static_cast<size_t>(deg - j)];
    }

    double h(int residue, double x) const {
        double sum = 0.0;
        for (int j = residue; j <= deg; j += m)
            sum += coef[static_cast<size_t>(j)] * std::pow(x, j) * std::pow(1.0 - x, deg - j);
        return sum;
    }

    // d/dx of the residue-class sum.
    double dh(int residue, double x) const {
        double sum = 0.0;
        for (int j = residue; j <= deg; j += m) {
            double a = 0.0;
            if (j > 0) a += j * std::pow(x, j - 1) * std::pow(1.0 - x, deg - j);
            if (deg - j > 0) a -= (deg - j) * std::pow(x, j) * std::pow(1.0 - x, deg - j - 1);
            sum += coef[static_cast<size_t>(j)] * a;
        }
        return sum;
    }
};

std::vector<int> residue_window(int j, int d, int m) {
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<int> out;
    for (int t = 0; t <= d; ++t) {
        int r = ((j - t) % m + m) % m;
        if (!seen[static_cast<size_t>(r)]) {
            seen[static_cast<size_t>(r)] = true;
            out.push_back(r);
        }
    }
    return out;
}

double window_min(const TermTable& tt, const std::vector<int>& window, double x) {
    double best = 2.0;
    for (int r : window) best = std::min(best, tt.h(r, x));
    return best;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

ResidueProfile residue_profile(int k, int d, int m, double x) {
    check_kdm(k, d, m);
    if (x < 0.0 || x > 1.0) raise(ErrorKind::BadParameter, "need 0 <= x <= 1");
    ResidueProfile out;
    out.k = k;
    out.d = d;
    out.m = m;
    out.x = x;
    out.values.assign(static_cast<size_t>(m), 0.0);
    TermTable tt(k, d, m);
    for (int r = 0; r < m; ++r) out.values[static_cast<size_t>(r)] = tt.h(r, x);
    return out;
}

double degree_objective(int k, int d, int m, int j, double x) {
    check_kdm(k, d, m);
    TermTable tt(k, d, m);
    return window_min(tt, residue_window(j, d, m), x);
}

ThresholdResult g_optimize(int k, int d, int ell) {
    if (d < 1 || d > k - 1) raise(ErrorKind::BadParameter, "need 1 <= d <= k-1");
    if (ell < 0 || ell > k - 1) raise(ErrorKind::BadParameter, "need 0 <= ell <= k-1");
    const int m = ell + 2;
    const TermTable tt(k, d, m);

    constexpr int kGrid = 100000;

    ThresholdResult best;
    best.k = k;
    best.d = d;
    best.ell = ell;
    best.g = -1.0;

    // Residue values on the grid, shared by every j.
    std::vector<std::vector<double>> hgrid(
        static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(kGrid) + 1));
    {
        std::vector<double> row(static_cast<size_t>(m));
        for (int i = 0; i <= kGrid; ++i) {
            tt.profile(static_cast<double>(i) / kGrid, row);
            for (int r = 0; r < m; ++r)
                hgrid[static_cast<size_t>(r)][static_cast<size_t>(i)] =
                    row[static_cast<size_t>(r)];
        }
    }

    for (int j = 0; j <= ell + 1; ++j) {
        const auto window = residue_window(j, d, m);
        double local_best = -1.0, local_x = 0.0;
        auto consider = [&](double x) {
            double v = window_min(tt, window, x);
            if (v > local_best) {
                local_best = v;
                local_x = x;
            }
        };

        std::vector<double> grid(kGrid + 1);
        for (int i = 0; i <= kGrid; ++i) {
            double v = 2.0;
            for (int r : window)
                v = std::min(v, hgrid[static_cast<size_t>(r)][static_cast<size_t>(i)]);
            grid[static_cast<size_t>(i)] = v;
        }
        for (int i = 0; i <= kGrid; ++i) {
            if (grid[static_cast<size_t>(i)] > local_best) {
                local_best = grid[static_cast<size_t>(i)];
                local_x = static_cast<double>(i) / kGrid;
            }
        }

        // Refine around grid-local maxima: the true optimum is either an
        // interior critical point of the active branch or a crossing of two
        // branches, both bracketed by the neighbors of a grid maximum.
        for (int i = 0; i <= kGrid; ++i) {
            bool lmax = (i == 0 || grid[static_cast<size_t>(i)] >= grid[static_cast<size_t>(i - 1)]) &&
                        (i == kGrid || grid[static_cast<size_t>(i)] >= grid[static_cast<size_t>(i + 1)]);
            if (!lmax) continue;
            double lo = static_cast<double>(std::max(0, i - 1)) / kGrid;
            double hi = static_cast<double>(std::min(kGrid, i + 1)) / kGrid;
            for (size_t a = 0; a < window.size(); ++a) {
                int ra = window[a];
                if ((tt.dh(ra, lo) <= 0) != (tt.dh(ra, hi) <= 0))
                    consider(bisect_root([&](double x) { return tt.dh(ra, x); }, lo, hi));
                for (size_t b = a + 1; b < window.size(); ++b) {
                    int rb = window[b];
                    auto diff = [&](double x) { return tt.h(ra, x) - tt.h(rb, x); };
                    if ((diff(lo) <= 0) != (diff(hi) <= 0))
                        consider(bisect_root(diff, lo, hi));
                }
            }
        }

        if (local_best > best.g) {
            best.g = local_best;
            best.x_star = local_x;
            best.j_star = j;
        }
    }

    best.profile = residue_profile(k, d, m, best.x_star);
    double minval = 2.0;
    for (int t = 0; t <= d; ++t) {
        int r = ((best.j_star - t) % m + m) % m;
        minval = std::min(minval, best.profile.values[static_cast<size_t>(r)]);
    }
    for (int t = 0; t <= d; ++t) {
        int r = ((best.j_star - t) % m + m) % m;
        if (best.profile.values[static_cast<size_t>(r)] <= minval + 1e-9)
            best.certificate.push_back(t);
    }
    return best;
}

std::array<BigInt, 3> half_point_exact(int k, int d) {
    if (d < 1 || d > k - 1) raise(ErrorKind::BadParameter, "need 1 <= d <= k-1");
    std::array<BigInt, 3> c{0, 0, 0};
    for (int j = 0; j <= k - d; ++j) c[static_cast<size_t>(j % 3)] += binom_big(k - d, j);
    return c;
}

bool g_zero_predicate(int k, int d, int ell) {
    if (d < 1 || d > k - 1) raise(ErrorKind::BadParameter, "need 1 <= d <= k-1");
    if (ell < 0 || ell > k - 1) raise(ErrorKind::BadParameter, "need 0 <= ell <= k-1");
    return d >= std::max(k - ell, k / 2 + 1);
}

std::vector<BoundCheck> g_bounds_check(int k, int d, int ell, double g) {
    constexpr double tol = 1e-6;
    std::vector<BoundCheck> out;
    if (d <= ell + 1) {
        BoundCheck c;
        c.name = "g <= 1/(d+1)";
        c.bound = 1.0 / (d + 1);
        c.pass = g <= c.bound + tol;
        c.slack = c.bound - g;
        out.push_back(c);
    }
    if (d >= ell + 1) {
        BoundCheck c;
        c.name = "g <= 1/(ell+2)";
        c.bound = 1.0 / (ell + 2);
        c.pass = g <= c.bound + tol;
        c.slack = c.bound - g;
        out.push_back(c);
    }
    if (ell == 1 && d > 1) {
        BoundCheck lo;
        lo.name = "floor(2^{k-d}/3)*2^{d-k} <= g";
        lo.bound = binom_ratio_as_double(BigInt((BigInt(1) << (k - d)) / 3),
                                         BigInt(BigInt(1) << (k - d)));
        lo.is_lower = true;
        lo.pass = g >= lo.bound - tol;
        lo.slack = g - lo.bound;
        out.push_back(lo);

        BoundCheck hi;
        hi.name = "g < 1/3";
        hi.bound = 1.0 / 3.0;
        hi.strict = true;
        hi.pass = g < hi.bound;
        hi.slack = hi.bound - g;
        out.push_back(hi);
    }
    return out;
}

ConjecturedThreshold conjectured_threshold(int k, int d, int ell) {
    ConjecturedThreshold out;
    out.g = g_optimize(k, d, ell).g;
    out.space_term = 1.0 - std::pow(1.0 - 1.0 / k, k - d);
    out.value = std::max(out.g, out.space_term);
    constexpr double tie_eps = 1e-12;
    if (out.g > out.space_term + tie_eps)
        out.governing = "divisibility";
    else if (out.space_term > out.g + tie_eps)
        out.governing = "space";
    else
        out.governing = "tie";
    return out;
}

FiniteMinDegree finite_min_degree(int n, int k, int d, int ell, int j, int n1) {
    check_divisibility_spec(n, k, ell, j);
    if (d < 1 || d > k - 1) raise(ErrorKind::BadParameter, "need 1 <= d <= k-1");
    if (n1 < 0 || n1 > n) raise(ErrorKind::InadmissibleSpec, "need 0 <= n1 <= n");
    // Reuse the constructor-side congruence validation.
    {
        auto sizes = admissible_first_part_sizes(n, k, ell, j);
        if (!std::binary_search(sizes.begin(), sizes.end(), n1))
            raise(ErrorKind::InadmissibleSpec,
                  "violated n1 ≡ floor(n/k)·j + ell + 1 (mod ell+2)");
    }
    const int m = ell + 2;
    const int n2 = n - n1;
    FiniteMinDegree out;
    out.per_t.assign(static_cast<size_t>(d) + 1, BigInt(0));
    out.realizable.assign(static_cast<size_t>(d) + 1, false);
    bool have = false;
    for (int t = 0; t <= d; ++t) {
        if (t > n1 || d - t > n2) continue;
        out.realizable[static_cast<size_t>(t)] = true;
        BigInt deg = 0;
        for (int jp = ((j - t) % m + m) % m; jp <= k - d; jp += m)
            deg += binom_big(n1 - t, jp) * binom_big(n2 - (d - t), k - d - jp);
        out.per_t[static_cast<size_t>(t)] = deg;
        if (!have || deg < out.value) {
            out.value = deg;
            out.t_min = t;
            have = true;
        }
    }
    if (!have) raise(ErrorKind::InadmissibleSpec, "no realizable t for given d and split");
    return out;
}

} // namespace hypermatch
