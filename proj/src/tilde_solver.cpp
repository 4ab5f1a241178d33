#include "nlosc/tilde_solver.hpp"

#include <array>
#include <map>
#include <tuple>

namespace nlosc {

namespace {

OperatorPoly a_op() { return OperatorPoly::annihilator(); }
OperatorPoly ad_op() { return OperatorPoly::creator(); }

// Fixed part of the first-order correction: -3(a^2 - ad^2)a + (a + ad)^3.
// Built from operator products rather than typed-out normal form so the
// reduction machinery is exercised by the construction itself.
OperatorPoly first_order_fixed() {
    OperatorPoly x = a_op() + ad_op();
    OperatorPoly asq_minus_adsq =
        normal_order_product(a_op(), a_op()) - normal_order_product(ad_op(), ad_op());
    return normal_order_product(asq_minus_adsq, a_op()).scaled(Rational(-3)) +
           normal_order_power(x, 3);
}

// Fixed part of the second-order correction; these monomials are already
// normal ordered.
OperatorPoly second_order_fixed() {
    OperatorPoly g;
    g.add_term(0, 5, KappaPoly(Rational(3, 2)));
    g.add_term(1, 4, KappaPoly(Rational(39, 4)));
    g.add_term(2, 3, KappaPoly(Rational(-25, 8)));
    g.add_term(3, 2, KappaPoly(Rational(-12)));
    g.add_term(4, 1, KappaPoly(Rational(-3, 8)));
    g.add_term(5, 0, KappaPoly(Rational(1, 4)));
    return g;
}

// Stage unknowns are indexed positions in a flat rational vector. Stage 1
// solves {f1, f2, c10, c11, eg1}; stage 2 solves {g1..g6, c20, c21, c22, eg2}
// with the stage-1 values substituted as known rationals.
struct StageNames {
    std::vector<std::string> names;
};

StageNames stage_unknowns(int stage) {
    if (stage == 1) return {{"f1", "f2", "c10", "c11", "eg1"}};
    return {{"g1", "g2", "g3", "g4", "g5", "g6", "c20", "c21", "c22", "eg2"}};
}

struct Assignment {
    std::map<std::string, Rational> values;
    Rational get(const std::string& name) const {
        auto it = values.find(name);
        return it == values.end() ? Rational(0) : it->second;
    }
};

// Builds the two constraint residuals, truncated at the requested coupling
// order, for a full parameter assignment:
//   eig  = [ta, h] - lambda(h) ta
//   norm = ta^dag ta + e_g - h
// Both must vanish identically for the exact solution.
struct Residuals {
    OperatorPoly eig;
    OperatorPoly norm;
};

OperatorPoly build_tilde_a(const Assignment& v, int order) {
    OperatorPoly ta = a_op();
    if (order >= 1) {
        OperatorPoly f = first_order_fixed();
        f.add_term(0, 1, KappaPoly(v.get("f1")));
        f.add_term(1, 0, KappaPoly(v.get("f2")));
        ta += f.scaled(KappaPoly::power(1, Rational(1, 4)));
    }
    if (order >= 2) {
        OperatorPoly g = second_order_fixed();
        g.add_term(0, 3, KappaPoly(v.get("g1")));
        g.add_term(1, 2, KappaPoly(v.get("g2")));
        g.add_term(2, 1, KappaPoly(v.get("g3")));
        g.add_term(3, 0, KappaPoly(v.get("g4")));
        g.add_term(0, 1, KappaPoly(v.get("g5")));
        g.add_term(1, 0, KappaPoly(v.get("g6")));
        ta += g.scaled(KappaPoly::power(2, Rational(1, 2)));
    }
    return ta.truncated(order);
}

std::vector<KappaPoly> build_lambda_y(const Assignment& v, int order) {
    // y-constant, y-linear and y-quadratic coefficients of lambda; the
    // zeroth order is the equal-spacing value 1.
    std::vector<KappaPoly> ly(3);
    ly[0] = KappaPoly(Rational(1));
    if (order >= 1) {
        ly[0] += KappaPoly::power(1, v.get("c10"));
        ly[1] += KappaPoly::power(1, v.get("c11"));
    }
    if (order >= 2) {
        ly[0] += KappaPoly::power(2, v.get("c20"));
        ly[1] += KappaPoly::power(2, v.get("c21"));
        ly[2] += KappaPoly::power(2, v.get("c22"));
    }
    while (!ly.empty() && ly.back().is_zero()) ly.pop_back();
    return ly;
}

KappaPoly build_ground_level(const Assignment& v, int order) {
    KappaPoly eg(Rational(1, 2));
    if (order >= 1) eg += KappaPoly::power(1, v.get("eg1"));
    if (order >= 2) eg += KappaPoly::power(2, v.get("eg2"));
    return eg;
}

Residuals build_residuals(const Assignment& v, int order) {
    OperatorPoly h = quartic_hamiltonian().truncated(order);
    OperatorPoly ta = build_tilde_a(v, order);
    OperatorPoly lam = lambda_as_operator(build_lambda_y(v, order), order);
    Residuals r;
    r.eig = commutator(ta, h, order) - normal_order_product(lam, ta, order);
    r.norm = normal_order_product(dagger(ta), ta, order) +
             OperatorPoly::unit().scaled(build_ground_level(v, order)) - h;
    return r;
}

// Equation slots are (residual index, r, s, coupling power).
using Slot = std::tuple<int, int, int, int>;

void collect_slots(const Residuals& r, int order, std::map<Slot, size_t>& slots) {
    const OperatorPoly* polys[2] = {&r.eig, &r.norm};
    for (int which = 0; which < 2; ++which) {
        for (const auto& [key, c] : polys[which]->terms()) {
            for (int j = 0; j <= order; ++j) {
                if (c.coeff(j).is_zero()) continue;
                Slot slot{which, key.first, key.second, j};
                if (!slots.count(slot)) {
                    size_t idx = slots.size();
                    slots.emplace(slot, idx);
                }
            }
        }
    }
}

std::string slot_str(const Slot& slot) {
    auto [which, r, s, j] = slot;
    std::string out = which == 0 ? "eigenoperator residual" : "normalization residual";
    out += ", coefficient of k^" + std::to_string(j);
    if (r > 0) out += " ad^" + std::to_string(r);
    if (s > 0) out += " a^" + std::to_string(s);
    return out;
}

std::vector<Rational> residual_vector(const Residuals& r, int order,
                                      const std::map<Slot, size_t>& slots) {
    std::vector<Rational> v(slots.size(), Rational(0));
    const OperatorPoly* polys[2] = {&r.eig, &r.norm};
    for (int which = 0; which < 2; ++which) {
        for (const auto& [key, c] : polys[which]->terms()) {
            for (int j = 0; j <= order; ++j) {
                Rational cj = c.coeff(j);
                if (cj.is_zero()) continue;
                auto it = slots.find(Slot{which, key.first, key.second, j});
                if (it == slots.end())
                    throw AlgebraInconsistencyError(
                        "constraint residual is not affine in the stage unknowns",
                        slot_str(Slot{which, key.first, key.second, j}));
                v[it->second] = cj;
            }
        }
    }
    return v;
}

// Solves the dense rational system M x = rhs by Gaussian elimination with
// first-nonzero pivoting. The system is overdetermined; consistency of the
// non-pivot rows is checked by the caller via residual re-verification.
std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> m,
                                            std::vector<Rational> rhs,
                                            const std::vector<Slot>& row_slots,
                                            size_t n_unknowns) {
    size_t rows = m.size();
    std::vector<size_t> pivot_row_of_col(n_unknowns, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < n_unknowns && rank < rows; ++col) {
        size_t pivot = SIZE_MAX;
        for (size_t r = rank; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == SIZE_MAX) continue;
        std::swap(m[rank], m[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational factor = m[r][col] / m[rank][col];
            for (size_t c = col; c < n_unknowns; ++c) m[r][c] -= factor * m[rank][c];
            rhs[r] -= factor * rhs[rank];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    // Any remaining row must now be 0 = 0, otherwise the constraints
    // contradict each other.
    for (size_t r = rank; r < rows; ++r) {
        bool all_zero = true;
        for (size_t c = 0; c < n_unknowns; ++c) all_zero = all_zero && m[r][c].is_zero();
        if (all_zero && !rhs[r].is_zero())
            throw AlgebraInconsistencyError("ordering-constant system is inconsistent",
                                            slot_str(row_slots[r]) + " = " + rhs[r].str());
    }
    std::vector<Rational> x(n_unknowns, Rational(0));
    for (size_t col = 0; col < n_unknowns; ++col) {
        if (pivot_row_of_col[col] == SIZE_MAX)
            throw AlgebraInconsistencyError(
                "ordering-constant system is underdetermined",
                "no pivot for unknown index " + std::to_string(col));
        size_t r = pivot_row_of_col[col];
        x[col] = rhs[r] / m[r][col];
    }
    return x;
}

// Solves one stage: with all earlier-stage constants substituted in `known`,
// the residuals are affine in this stage's unknowns, so columns are obtained
// by evaluating at unit assignments.
void solve_stage(int stage, Assignment& known) {
    StageNames unknowns = stage_unknowns(stage);
    size_t n = unknowns.names.size();

    Residuals base = build_residuals(known, stage);
    std::map<Slot, size_t> slots;
    collect_slots(base, stage, slots);
    std::vector<Residuals> unit(n);
    for (size_t i = 0; i < n; ++i) {
        Assignment v = known;
        v.values[unknowns.names[i]] = Rational(1);
        unit[i] = build_residuals(v, stage);
        collect_slots(unit[i], stage, slots);
    }
    std::vector<Rational> r0 = residual_vector(base, stage, slots);
    std::vector<std::vector<Rational>> columns(n);
    for (size_t i = 0; i < n; ++i) {
        columns[i] = residual_vector(unit[i], stage, slots);
        for (size_t e = 0; e < r0.size(); ++e) columns[i][e] -= r0[e];
    }

    std::vector<Slot> row_slots(slots.size());
    for (const auto& [slot, idx] : slots) row_slots[idx] = slot;
    std::vector<std::vector<Rational>> m(slots.size(), std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(slots.size(), Rational(0));
    for (size_t e = 0; e < slots.size(); ++e) {
        for (size_t i = 0; i < n; ++i) m[e][i] = columns[i][e];
        rhs[e] = -r0[e];
    }
    std::vector<Rational> x = solve_rational_system(std::move(m), std::move(rhs), row_slots, n);
    for (size_t i = 0; i < n; ++i) known.values[unknowns.names[i]] = x[i];

    // Re-verify by direct substitution; this is the authoritative check and
    // doubles as the residual-zero guarantee.
    Residuals check = build_residuals(known, stage);
    if (!check.eig.is_zero())
        throw AlgebraInconsistencyError("eigenoperator residual nonzero after stage " +
                                            std::to_string(stage),
                                        check.eig.str());
    if (!check.norm.is_zero())
        throw AlgebraInconsistencyError("normalization residual nonzero after stage " +
                                            std::to_string(stage),
                                        check.norm.str());
}

}  // namespace

OperatorPoly quartic_hamiltonian() {
    OperatorPoly x = a_op() + ad_op();
    OperatorPoly h = OperatorPoly::monomial(1, 1);
    h.add_term(0, 0, KappaPoly(Rational(1, 2)));
    h += normal_order_power(x, 4).scaled(KappaPoly::power(1, Rational(1, 4)));
    return h;
}

OperatorPoly lambda_as_operator(const std::vector<KappaPoly>& lambda_y, int max_order) {
    OperatorPoly y = quartic_hamiltonian();
    y.add_term(0, 0, KappaPoly(Rational(1, 2)));
    y = y.truncated(max_order);
    OperatorPoly result;
    OperatorPoly y_power = OperatorPoly::unit();
    for (size_t j = 0; j < lambda_y.size(); ++j) {
        if (j > 0) y_power = normal_order_product(y_power, y, max_order);
        result += y_power.scaled(lambda_y[j]);
    }
    return result.truncated(max_order);
}

double lambda_eval(const std::vector<KappaPoly>& lambda_y, double e, double kappa) {
    double y = e + 0.5;
    double v = 0.0;
    for (size_t j = lambda_y.size(); j-- > 0;) v = v * y + lambda_y[j].eval(kappa);
    return v;
}

TildeSolution solve_tilde_a(int order, const OscillatorSpec& spec) {
    if (spec.potential != OscillatorSpec::Potential::quartic)
        throw DomainError("the lowering-operator construction is implemented for the quartic oscillator");
    if (order < 0 || order > 2)
        throw DomainError("coupling order must be 0, 1 or 2");

    Assignment known;
    for (int stage = 1; stage <= order; ++stage) solve_stage(stage, known);

    TildeSolution sol;
    sol.order = order;
    sol.tilde_a = build_tilde_a(known, order);
    sol.lambda_y = build_lambda_y(known, order);
    sol.ground_level = build_ground_level(known, order);
    if (order >= 1) {
        sol.ordering_constants.emplace_back("f1", known.get("f1"));
        sol.ordering_constants.emplace_back("f2", known.get("f2"));
    }
    if (order >= 2) {
        for (int i = 1; i <= 6; ++i) {
            std::string name = "g" + std::to_string(i);
            sol.ordering_constants.emplace_back(name, known.get(name));
        }
    }
    return sol;
}

}  // namespace nlosc
