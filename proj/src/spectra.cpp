#include "genergy/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace genergy {

namespace {

// Householder reduction of the symmetric matrix a (row-major, destroyed) to
// tridiagonal form: d = diagonal, e[1..n-1] = subdiagonal.
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit-shift QL iteration on the tridiagonal (d, e); eigenvalues land in d.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n) {
    constexpr int kMaxSweeps = 50;
    constexpr double kEps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd ||
                    std::abs(e[m]) < std::numeric_limits<double>::min())
                    break;
            }
            if (m != l) {
                if (iter++ == kMaxSweeps)
                    throw std::runtime_error(
                        "eigensolver failed to converge within " + std::to_string(kMaxSweeps) +
                        " sweeps (eigenvalue " + std::to_string(l) + " of " + std::to_string(n) + ")");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i], b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

Spectrum eigenvalues(const Graph& g) {
    int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;

    std::vector<double> d(n), e(n);
    if (n == 1) {
        d[0] = 0.0;
    } else {
        householder_tridiag(a, n, d, e);
        ql_implicit_shift(d, e, n);
    }
    std::sort(d.begin(), d.end(), std::greater<>());

    Spectrum s;
    s.eigenvalues = std::move(d);
    for (double lam : s.eigenvalues) s.energy += std::abs(lam);
    s.mu1 = s.eigenvalues.front();
    // mu2 <= mu1 holds exactly in theory; clamp the rounding-level excess a
    // bipartite tie (lambda_1 = -lambda_n) can produce.
    s.mu2 = n >= 2 ? std::min(std::max(s.eigenvalues[1], -s.eigenvalues.back()), s.mu1) : 0.0;
    return s;
}

double energy(const Graph& g) { return eigenvalues(g).energy; }

ExactDet exact_determinant(const Graph& g) {
    int n = g.order();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? 1 : 0;

    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return {BigInt(0)};
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return {det};
}

bool is_nonsingular(const Graph& g) { return exact_determinant(g).value != 0; }

CharPoly char_poly(const Graph& g) {
    int n = g.order();
    if (n > 32) throw std::invalid_argument("char_poly supports n <= 32, got " + std::to_string(n));

    std::vector<BigInt> adj(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? 1 : 0;

    std::vector<BigInt> coeff(n + 1);
    coeff[n] = 1;

    // Faddeev-LeVerrier: every division below is exact over the integers.
    std::vector<BigInt> b = adj, next(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += b[static_cast<std::size_t>(i) * n + i];
        coeff[n - k] = -tr / k;
        if (k == n) break;
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] += coeff[n - k];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt sum = 0;
                for (int l = 0; l < n; ++l)
                    sum += adj[static_cast<std::size_t>(i) * n + l] * b[static_cast<std::size_t>(l) * n + j];
                next[static_cast<std::size_t>(i) * n + j] = sum;
            }
        std::swap(b, next);
    }
    return {std::move(coeff)};
}

}  // namespace genergy
