#pragma once

#include <nlosc/config.hpp>

#include <string>

namespace nlosc {

// CSV emitters backing the CLI subcommands. Each returns the complete
// output, starting with a '#'-prefixed header block that records the
// version, a fingerprint of the effective settings, and any regime notes;
// the caller decides whether the bytes go to a file or stdout. Errors
// surface as exceptions: ConfigError for inconsistent settings, other
// nlosc errors for failed computations.

// Level table `n,e_pert,e_sc,e_oracle,delta_pert_oracle,delta_sc_oracle`,
// with columns restricted to what the method selection and coupling sign
// make available.
std::string cmd_spectrum(const RunConfig& cfg);

// Raw ladder table `n,e_n,lambda_at_prev,A_log` for the semiclassical
// spacing selected by the config; written next to the spectrum table when
// ladder_out is set.
std::string ladder_csv(const RunConfig& cfg);

// Spacing comparison `e,lambda_closed,lambda_quadrature,lambda_pert` over
// the configured energy grid; cells outside a branch's validity are left
// empty.
std::string cmd_lambda(const RunConfig& cfg);

// Thermal table `beta,Z,avg_energy,avg_number,tail_bound,res_t3,res_t6,
// res_t10`, one row per configured beta. The res_* columns are the relative
// residuals of the spacing, mean-energy and occupation identities.
std::string cmd_thermal(const RunConfig& cfg);

// Reference levels `n,e_oracle,dim,residual` from the converged
// diagonalization.
std::string cmd_oracle(const RunConfig& cfg);

// Identity-residual demonstration table `case,x,result` for the shift
// calculus.
std::string cmd_fdlie(const RunConfig& cfg);

}  // namespace nlosc
