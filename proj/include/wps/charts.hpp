#pragma once
#include "wps/model.hpp"
#include "wps/subst.hpp"

namespace wps {

// Transition substitution expressing chart-mu coordinates of P^{m|n}(1|b) in
// chart-nu coordinates: z^sigma_mu = z^sigma_nu / z^mu_nu and
// xi_j^mu = (z^mu_nu)^{-b_j} xi_j^nu, with the convention z^nu_nu = 1. Both
// chart rings are represented uniformly with m+1 even Laurent variables.
// Only unit even weights carry this transition data.
Subst chart_transition(const ModelSpec& spec, int mu, int nu);

// Cocycle identity: transition(mu,nu) followed by transition(nu,sigma) equals
// transition(mu,sigma) as Laurent substitutions.
bool cocycle_check(const ModelSpec& spec, int mu, int nu, int sigma);

} // namespace wps
