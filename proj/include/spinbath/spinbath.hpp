#pragma once

// Three qubits dephasing through a transverse-field spin-chain bath: exact
// decoherence factors, reduced dynamics and one-vs-two negativities.

#include "spinbath/bath.hpp"
#include "spinbath/closed_forms.hpp"
#include "spinbath/eigen.hpp"
#include "spinbath/error.hpp"
#include "spinbath/evolve.hpp"
#include "spinbath/matrix.hpp"
#include "spinbath/negativity.hpp"
#include "spinbath/oracle.hpp"
#include "spinbath/presets.hpp"
#include "spinbath/qstate.hpp"
#include "spinbath/sweep.hpp"
#include "spinbath/validate.hpp"
