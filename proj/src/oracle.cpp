#include <nlosc/oracle.hpp>

#include <nlosc/errors.hpp>
#include <nlosc/operator_poly.hpp>
#include <nlosc/tilde_solver.hpp>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace nlosc {

double FockMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : values) sum += v * v;
    return std::sqrt(sum);
}

FockMatrix build_hamiltonian_matrix(const OscillatorSpec& spec, std::size_t dim) {
    spec.validate();
    if (dim < 2) throw DomainError("Fock truncation needs dimension >= 2");
    if (spec.potential != Potential::none && spec.potential != Potential::quartic)
        throw DomainError("the matrix oracle supports only the quartic oscillator");
    double kappa = spec.potential == Potential::quartic ? spec.kappa : 0.0;

    FockMatrix M;
    M.dim = dim;
    M.spec = spec;
    M.values.assign(dim * dim, 0.0);

    // The quartic term is a polynomial of degree four in a and a-dagger, so
    // only |m - n| in {0, 2, 4} can be nonzero; filling both triangle
    // entries from one evaluation keeps the matrix symmetric to the bit.
    OperatorPoly h = quartic_hamiltonian();
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t offset : {0u, 2u, 4u}) {
            std::size_t m = n + offset;
            if (m >= dim) break;
            double v = fock_matrix_element(h, static_cast<int>(m),
                                           static_cast<int>(n), kappa);
            M.at(m, n) = v;
            M.at(n, m) = v;
        }
    }
    return M;
}

namespace {

// Householder reduction of the symmetric matrix stored row-major in a to
// tridiagonal form: d receives the diagonal, e the subdiagonal (e[0]
// unused), and a is overwritten with the accumulated orthogonal transform.
void tridiagonalize(std::vector<double>& a, std::ptrdiff_t n,
                    std::vector<double>& d, std::vector<double>& e) {
    auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double& {
        return a[static_cast<std::size_t>(i * n + j)];
    };
    for (std::ptrdiff_t i = n - 1; i >= 1; --i) {
        std::ptrdiff_t l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (std::ptrdiff_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (std::ptrdiff_t k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (std::ptrdiff_t j = 0; j <= l; ++j) {
                    at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (std::ptrdiff_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (std::ptrdiff_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                double hh = f / (h + h);
                for (std::ptrdiff_t j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::ptrdiff_t k = 0; k <= j; ++k)
                        at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::ptrdiff_t l = i - 1;
        if (d[i] != 0.0) {
            for (std::ptrdiff_t j = 0; j <= l; ++j) {
                double g = 0.0;
                for (std::ptrdiff_t k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                for (std::ptrdiff_t k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
            }
        }
        d[i] = at(i, i);
        at(i, i) = 1.0;
        for (std::ptrdiff_t j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
    }
}

// Implicit-shift QL iteration on the tridiagonal (d, e). z comes in holding
// the tridiagonalizing transform and leaves holding full eigenvectors, one
// per column, matching the (unsorted) eigenvalues left in d.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& z, std::ptrdiff_t n) {
    auto zat = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> double& {
        return z[static_cast<std::size_t>(i * n + j)];
    };
    for (std::ptrdiff_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (std::ptrdiff_t l = 0; l < n; ++l) {
        int iter = 0;
        std::ptrdiff_t m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw NoConvergenceError(
                        "eigenvalue iteration exceeded 50 sweeps at index " +
                        std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                std::ptrdiff_t i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
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
                    for (std::ptrdiff_t k = 0; k < n; ++k) {
                        f = zat(k, i + 1);
                        zat(k, i + 1) = s * zat(k, i) + c * f;
                        zat(k, i) = c * zat(k, i) - s * f;
                    }
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

EigenPairs eigenvalues_symmetric(const FockMatrix& M, std::size_t n_wanted) {
    if (M.dim == 0) throw DomainError("matrix is empty");
    if (n_wanted > M.dim)
        throw DomainError("cannot request more eigenvalues than the dimension");
    std::ptrdiff_t n = static_cast<std::ptrdiff_t>(M.dim);

    std::vector<double> z = M.values;  // destroyed by the reduction
    std::vector<double> d(M.dim, 0.0);
    std::vector<double> e(M.dim, 0.0);
    if (M.dim == 1) {
        d[0] = M.values[0];
        z[0] = 1.0;
    } else {
        tridiagonalize(z, n, d, e);
        ql_implicit_shift(d, e, z, n);
    }

    std::vector<std::size_t> order(M.dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t p, std::size_t q) { return d[p] < d[q]; });

    double bound = 1e-10 * M.frobenius_norm();
    EigenPairs out;
    for (std::size_t k = 0; k < n_wanted; ++k) {
        std::size_t col = order[k];
        std::vector<double> v(M.dim);
        for (std::size_t i = 0; i < M.dim; ++i) v[i] = z[i * M.dim + col];
        // Check M v = e v against the original matrix, not the reduced one.
        double rr = 0.0;
        for (std::size_t i = 0; i < M.dim; ++i) {
            double mv = 0.0;
            std::size_t j_lo = i >= 4 ? i - 4 : 0;
            std::size_t j_hi = std::min(M.dim - 1, i + 4);
            for (std::size_t j = j_lo; j <= j_hi; ++j) mv += M.at(i, j) * v[j];
            double diff = mv - d[col] * v[i];
            rr += diff * diff;
        }
        double residual = std::sqrt(rr);
        if (!(residual <= bound))
            throw NoConvergenceError("eigenpair residual " + std::to_string(residual) +
                                     " exceeds its bound");
        out.values.push_back(d[col]);
        out.vectors.push_back(std::move(v));
        out.residuals.push_back(residual);
    }
    return out;
}

ConvergedLevels converged_levels(const OscillatorSpec& spec, std::size_t n_levels,
                                 double tol, bool allow_negative,
                                 std::size_t dim_cap) {
    spec.validate();
    if (n_levels == 0) throw DomainError("need at least one level");
    if (!(tol > 0.0)) throw DomainError("convergence tolerance must be positive");
    if (spec.potential == Potential::quartic && spec.kappa < 0.0 && !allow_negative)
        throw NegativeCouplingError(
            "negative coupling makes the exact spectrum unbounded below; the "
            "truncated-basis levels are not physical (pass the override to force it)");

    std::size_t dim = 64;
    while (dim < 2 * n_levels) dim *= 2;
    if (dim > dim_cap) throw DomainError("requested level count exceeds the basis cap");

    EigenPairs prev = eigenvalues_symmetric(build_hamiltonian_matrix(spec, dim), n_levels);
    while (2 * dim <= dim_cap) {
        dim *= 2;
        EigenPairs cur = eigenvalues_symmetric(build_hamiltonian_matrix(spec, dim), n_levels);
        double change = 0.0;
        for (std::size_t k = 0; k < n_levels; ++k)
            change = std::max(change, std::abs(cur.values[k] - prev.values[k]));
        if (change < tol) {
            ConvergedLevels out;
            out.levels = std::move(cur.values);
            out.dim = dim;
            out.residuals = std::move(cur.residuals);
            return out;
        }
        prev = std::move(cur);
    }
    throw NoConvergenceError("levels did not settle by the basis cap of " +
                             std::to_string(dim_cap));
}

}  // namespace nlosc
