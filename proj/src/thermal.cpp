#include <nlosc/thermal.hpp>

#include <nlosc/errors.hpp>
#include <nlosc/surfaces.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace nlosc {

namespace {

// Compensated accumulator; the thermal sums mix terms spanning many orders
// of magnitude and the identity residuals below are measured near 1e-12.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void check_beta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw DomainError("inverse temperature must be positive and finite");
}

// Weight of level n relative to the ground level, exp(-beta*(e_n - e_0)).
// Shifting by e_0 keeps the largest weight at exactly 1 so Z never
// underflows at large beta.
double shifted_weight(const Spectrum& s, double beta, std::size_t n) {
    return std::exp(-beta * (s.levels[n] - s.levels.front()));
}

}  // namespace

ThermalState partition_function(const Spectrum& s, double beta, double tol) {
    check_beta(beta);
    if (!(tol > 0.0)) throw DomainError("tail tolerance must be positive");
    if (s.levels.empty()) throw DomainError("spectrum has no levels");

    KahanSum z, energy, number;
    for (std::size_t n = 0; n < s.levels.size(); ++n) {
        double w = shifted_weight(s, beta, n);
        z.add(w);
        energy.add(s.levels[n] * w);
        number.add(static_cast<double>(n) * w);
    }

    double tail = 0.0;
    if (!s.complete_spectrum()) {
        // The levels past the truncation point are spaced by at least the
        // last computed spacing provided the spacings are still growing, so
        // their weights are dominated by a geometric series with ratio
        // exp(-beta*lambda_last). Verify the monotonicity premise on the
        // last few spacings before trusting the bound.
        if (s.lambda_at.empty())
            throw TailNotBoundedError("truncated spectrum has no spacing data to bound its tail");
        std::size_t m = s.lambda_at.size();
        std::size_t first = m > 5 ? m - 5 : 0;
        for (std::size_t i = first; i + 1 < m; ++i) {
            double slack = 1e-12 * std::max(1.0, std::abs(s.lambda_at[i]));
            if (s.lambda_at[i + 1] < s.lambda_at[i] - slack)
                throw TailNotBoundedError(
                    "level spacings shrink near the truncation point; raise n_max until "
                    "the ladder closes or the spacings grow");
        }
        double ratio = std::exp(-beta * s.lambda_at.back());
        double w_last = shifted_weight(s, beta, s.levels.size() - 1);
        tail = w_last * ratio / (1.0 - ratio);
        if (!(tail <= tol * z.sum))
            throw TailNotBoundedError(
                "certified tail " + std::to_string(tail / z.sum) +
                " exceeds the requested relative tolerance; raise n_max or beta");
    }

    ThermalState out;
    out.beta = beta;
    out.Z = z.sum * std::exp(-beta * s.levels.front());
    out.avg_energy = energy.sum / z.sum;
    out.avg_number = number.sum / z.sum;
    out.truncation_bound = tail / z.sum;
    return out;
}

double boltzmann_average(const Spectrum& s, double beta,
                         const std::function<double(double, std::size_t)>& g) {
    check_beta(beta);
    if (s.levels.empty()) throw DomainError("spectrum has no levels");
    KahanSum z, acc;
    for (std::size_t n = 0; n < s.levels.size(); ++n) {
        double w = shifted_weight(s, beta, n);
        z.add(w);
        acc.add(g(s.levels[n], n) * w);
    }
    return acc.sum / z.sum;
}

namespace {

// The identity checks need the spacing at every level they include, and the
// stored ladder only knows the spacing up to its second-to-last level. All
// three identities telescope, so restricting both sides to the same index
// range leaves only the boundary weight of the first omitted level in the
// residual; that weight is exactly what the tail certificate controls.
struct IdentitySums {
    std::size_t count = 0;   // levels entering the averages
    double z = 0.0;          // sum of shifted weights
    double e = 0.0;          // sum of e_n * w_n
    double lam = 0.0;        // sum of lambda_n * w_n
    double decay = 0.0;      // sum of exp(-beta*lambda_n) * w_n
    double decay_e = 0.0;    // sum of exp(-beta*lambda_n) * e_n * w_n
    double decay_lam = 0.0;  // sum of exp(-beta*lambda_n) * lambda_n * w_n
    double occupied = 0.0;   // sum of n * (1 - exp(-beta*lambda_n)) * w_n
    double spaced = 0.0;     // sum of (e_n - e_g + lambda_n) * (1 - exp(-beta*lambda_n)) * w_n
};

IdentitySums accumulate_identity_sums(const Spectrum& s, double beta) {
    check_beta(beta);
    if (s.lambda_at.empty())
        throw DomainError("identity checks need a spectrum with at least one spacing");
    std::size_t count = std::min(s.lambda_at.size(), s.levels.size());
    KahanSum z, e, lam, decay, decay_e, decay_lam, occupied, spaced;
    for (std::size_t n = 0; n < count; ++n) {
        double w = shifted_weight(s, beta, n);
        double l = s.lambda_at[n];
        double d = std::exp(-beta * l);
        z.add(w);
        e.add(s.levels[n] * w);
        lam.add(l * w);
        decay.add(d * w);
        decay_e.add(d * s.levels[n] * w);
        decay_lam.add(d * l * w);
        occupied.add(static_cast<double>(n) * (1.0 - d) * w);
        spaced.add((s.levels[n] - s.e_g + l) * (1.0 - d) * w);
    }
    IdentitySums out;
    out.count = count;
    out.z = z.sum;
    out.e = e.sum;
    out.lam = lam.sum;
    out.decay = decay.sum;
    out.decay_e = decay_e.sum;
    out.decay_lam = decay_lam.sum;
    out.occupied = occupied.sum;
    out.spaced = spaced.sum;
    return out;
}

double relative_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace

double verify_kms_identity(const Spectrum& s, double beta) {
    IdentitySums t = accumulate_identity_sums(s, beta);
    double lhs = t.lam / t.z;
    double rhs = t.spaced / t.z;
    return relative_gap(lhs, rhs);
}

double verify_avg_energy_identity(const Spectrum& s, double beta) {
    IdentitySums t = accumulate_identity_sums(s, beta);
    double avg_e = t.e / t.z;
    double avg_decay = t.decay / t.z;
    // d<exp(-beta*lambda)>/dbeta, expanded analytically: differentiating the
    // weights as well as the summand gives <dA/dbeta> - <A e> + <A><e>.
    double d_avg_decay = -t.decay_lam / t.z - t.decay_e / t.z + avg_decay * avg_e;
    double mean_energy_residual =
        relative_gap(avg_e, s.e_g - d_avg_decay / (1.0 - avg_decay));
    // In ground-shifted units the normalization identity reads
    // Z * (1 - <exp(-beta*lambda)>) = 1; the difference telescopes to the
    // weight of the first omitted level.
    double normalization_residual = std::abs((t.z - t.decay) - 1.0);
    return std::max(mean_energy_residual, normalization_residual);
}

double verify_number_identity(const Spectrum& s, double beta) {
    IdentitySums t = accumulate_identity_sums(s, beta);
    double lhs = t.decay / t.z;
    double rhs = t.occupied / t.z;
    return relative_gap(lhs, rhs);
}

double classical_partition(const OscillatorSpec& spec, double beta,
                           const QuadratureConfig& cfg) {
    check_beta(beta);
    spec.validate();
    if (spec.potential != Potential::none && spec.kappa < 0.0)
        throw DomainError(
            "classical partition function diverges when the potential is unbounded below");

    EnergySurface surface = surface_for(spec);
    double scale = beta * spec.epsilon0;
    // Every surface here satisfies e >= 1/2 + u for kappa >= 0, so the
    // integrand decays at least like exp(-scale*u); past u_max it underflows
    // to exactly zero.
    double u_max = 750.0 / scale;

    auto inner = [&](double theta) {
        auto f = [&](double u) {
            return std::exp(-scale * (surface.value(u, theta) - 0.5));
        };
        return integrate(f, 0.0, u_max, cfg.tol / scale, cfg.max_depth);
    };
    double total =
        integrate(inner, 0.0, surface.theta_period,
                  cfg.tol * surface.theta_period / scale, cfg.max_depth);
    return total / surface.theta_period;
}

}  // namespace nlosc
