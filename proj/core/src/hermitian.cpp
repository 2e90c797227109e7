#include "jband/hermitian.hpp"

#include "jband/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jband {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double sum = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r + 1; c < n; ++c) {
            sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(2.0 * sum);
}

// Symmetrized copy (H + H*)/2 with an exactly real diagonal.
ComplexMatrix symmetrized(const ComplexMatrix& h) {
    const std::size_t n = h.rows();
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = h(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }
    return a;
}

// Diagonalizes `a` in place by cyclic Jacobi sweeps. When `vectors` is non-null
// the accumulated unitary is multiplied into it from the right.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* vectors, double tol) {
    const std::size_t n = a.rows();
    // Below ~1e-15 the threshold is under round-off and would never be met.
    const double ratio = std::clamp(tol, 1e-15, kJacobiOffDiagonalRatio);
    const double target = ratio * a.frobenius_norm();

    for (int sweep = 0;; ++sweep) {
        const double off = off_diagonal_mass(a);
        if (off <= target) {
            return;
        }
        if (sweep == kJacobiMaxSweeps) {
            throw ConvergenceError("Jacobi eigensolver: off-diagonal mass " + std::to_string(off) +
                                   " after " + std::to_string(kJacobiMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                const double modulus = std::abs(g);
                if (modulus == 0.0) {
                    continue;
                }
                const Complex phase = g / modulus;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();

                // Real symmetric Jacobi rotation on [[app, |g|], [|g|, aqq]].
                const double theta = (aqq - app) / (2.0 * modulus);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex s_phase = s * phase;             // U(p, q)
                const Complex s_phase_conj = std::conj(s_phase);  // -U(q, p)

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    const Complex new_kp = c * akp - s_phase_conj * akq;
                    const Complex new_kq = s_phase * akp + c * akq;
                    a(k, p) = new_kp;
                    a(k, q) = new_kq;
                    a(p, k) = std::conj(new_kp);
                    a(q, k) = std::conj(new_kq);
                }
                a(p, p) = app - t * modulus;
                a(q, q) = aqq + t * modulus;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                if (vectors != nullptr) {
                    ComplexMatrix& v = *vectors;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = c * vkp - s_phase_conj * vkq;
                        v(k, q) = s_phase * vkp + c * vkq;
                    }
                }
            }
        }
    }
}

std::vector<std::size_t> ascending_order(const ComplexMatrix& diag) {
    std::vector<std::size_t> order(diag.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return diag(i, i).real() < diag(j, j).real();
    });
    return order;
}

} // namespace

void require_hermitian(const ComplexMatrix& h, const char* what) {
    if (!h.square()) {
        throw DimensionError(std::string(what) + ": matrix is " + std::to_string(h.rows()) + "x" +
                             std::to_string(h.cols()) + ", expected square");
    }
    if (!h.all_finite()) {
        throw NonFiniteError(std::string(what) + ": matrix has non-finite entries");
    }
    const double defect = h.hermitian_defect();
    if (defect > kHermitianTolerance * (1.0 + h.max_abs())) {
        throw SymmetryError(std::string(what) + ": max|H - H*| = " + std::to_string(defect) +
                            " exceeds Hermitian tolerance");
    }
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol) {
    require_hermitian(h, "hermitian_eigenvalues");
    ComplexMatrix a = symmetrized(h);
    jacobi_diagonalize(a, nullptr, tol);
    std::vector<double> values;
    values.reserve(a.rows());
    for (std::size_t i : ascending_order(a)) {
        values.push_back(a(i, i).real());
    }
    return values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
    require_hermitian(h, "hermitian_eigensystem");
    ComplexMatrix a = symmetrized(h);
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_diagonalize(a, &v, tol);

    EigenSystem out{{}, ComplexMatrix(n, n)};
    out.values.reserve(n);
    const auto order = ascending_order(a);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values.push_back(a(src, src).real());
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, col) = v(r, src);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    require_hermitian(m, "psd_sqrt");
    const EigenSystem es = hermitian_eigensystem(m);
    const double floor = -kPsdClampTolerance * (1.0 + m.max_abs());
    const std::size_t n = m.rows();

    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = es.values[i];
        if (lambda < floor) {
            throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                              " is below the PSD clamp tolerance");
        }
        roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }

    // S = V diag(roots) V*, assembled Hermitian.
    ComplexMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                if (roots[k] != 0.0) {
                    sum += es.vectors(r, k) * roots[k] * std::conj(es.vectors(c, k));
                }
            }
            if (r == c) {
                s(r, r) = sum.real();
            } else {
                s(r, c) = sum;
                s(c, r) = std::conj(sum);
            }
        }
    }
    return s;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (!a.all_finite()) {
        throw NonFiniteError("singular_values: matrix has non-finite entries");
    }
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    const std::size_t k = std::min(r, c);
    if (k == 0) {
        return {};
    }
    ComplexMatrix dilation(r + c, r + c);
    dilation.set_block(0, r, a);
    dilation.set_block(r, 0, a.adjoint());
    const auto values = hermitian_eigenvalues(dilation);

    // The top k eigenvalues are +sigma_1..+sigma_k; the rest are -sigma_i and |r - c| zeros.
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = std::max(0.0, values[values.size() - 1 - i]);
    }
    return out;
}

double nuclear_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    // Summing smallest first.
    return std::accumulate(sv.rbegin(), sv.rend(), 0.0);
}

double spectral_norm(const ComplexMatrix& a) {
    const auto sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.front();
}

} // namespace jband
