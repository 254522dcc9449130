#pragma once

// Umbrella header: exact construction of symmetric cycles in the hypercube
// graph H(t,2), their edge-subtope sequences, and the unique decompositions
// of topes and subtopes over those subtopes.

#include "symcycle/closed_form.hpp"
#include "symcycle/cycle.hpp"
#include "symcycle/decomposition.hpp"
#include "symcycle/errors.hpp"
#include "symcycle/exact_linalg.hpp"
#include "symcycle/io.hpp"
#include "symcycle/matrix.hpp"
#include "symcycle/oracle.hpp"
#include "symcycle/sign_vector.hpp"
