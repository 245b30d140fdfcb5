#include "da/matrix.hpp"

#include <algorithm>

namespace da {

namespace {

BigFloat dot(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b) {
    BigFloat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<BigFloat> mat_vec(const Matrix<BigFloat>& m, const std::vector<BigFloat>& v) {
    std::vector<BigFloat> r(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        BigFloat s;
        for (size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

}  // namespace

BigFloat operator_norm(const Matrix<BigFloat>& m, int max_iters, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return BigFloat();
    size_t n = m.cols();
    if (max_iters <= 0) max_iters = 10 * (int)std::max(m.rows(), m.cols()) + 50;
    Matrix<BigFloat> mt = m.transpose();

    // Deterministic starting vector with all modes populated.
    std::vector<BigFloat> v(n);
    unsigned long seed = 1234577;
    for (size_t i = 0; i < n; ++i) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        v[i] = BigFloat((long)(1 + (seed >> 40) % 1000), 128);
    }

    BigFloat lambda, prev;
    BigFloat tol(rel_tol, 64);
    for (int it = 0; it < max_iters; ++it) {
        std::vector<BigFloat> w = mat_vec(mt, mat_vec(m, v));
        BigFloat nw = sqrt(dot(w, w));
        if (nw.is_zero()) return BigFloat();
        for (auto& x : w) x /= nw;
        prev = lambda;
        lambda = nw;
        v = std::move(w);
        if (it > 0) {
            BigFloat rel = abs(lambda - prev) / lambda;
            if (rel < tol) break;
        }
    }
    return sqrt(lambda);
}

void jacobi_eigen_sym(const Matrix<BigFloat>& m, std::vector<BigFloat>& eigenvalues,
                      Matrix<BigFloat>& eigenvectors) {
    size_t n = m.rows();
    assert(n == m.cols());
    Matrix<BigFloat> a = m;
    mpfr_prec_t prec = n ? m.at(0, 0).prec() : BigFloat::kDefaultPrec;
    BigFloat one(1L, prec), two(2L, prec), four(4L, prec);
    eigenvectors = Matrix<BigFloat>::identity(n, one);

    // Stop once off-diagonal mass is negligible relative to working precision.
    BigFloat scale;
    for (size_t i = 0; i < n; ++i) scale += abs(m.at(i, i));
    if (scale.is_zero()) scale = one;
    BigFloat eps = scale * pow_si(two, -(long)prec + 8);

    for (int sweep = 0; sweep < 200; ++sweep) {
        BigFloat off;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += abs(a.at(i, j));
        if (off < eps) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (abs(a.at(p, q)) < eps * pow_si(two, -8)) continue;
                BigFloat theta = (a.at(q, q) - a.at(p, p)) / (two * a.at(p, q));
                BigFloat t = one / (abs(theta) + sqrt(theta * theta + one));
                if (theta.sign() < 0) t = -t;
                BigFloat c = one / sqrt(t * t + one);
                BigFloat s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    BigFloat akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    BigFloat apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    BigFloat vkp = eigenvectors.at(k, p), vkq = eigenvectors.at(k, q);
                    eigenvectors.at(k, p) = c * vkp - s * vkq;
                    eigenvectors.at(k, q) = s * vkp + c * vkq;
                }
            }
    }

    eigenvalues.resize(n);
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return a.at(x, x) < a.at(y, y); });
    Matrix<BigFloat> sorted(n, n);
    for (size_t j = 0; j < n; ++j) {
        eigenvalues[j] = a.at(order[j], order[j]);
        for (size_t i = 0; i < n; ++i) sorted.at(i, j) = eigenvectors.at(i, order[j]);
    }
    eigenvectors = sorted;
}

}  // namespace da
