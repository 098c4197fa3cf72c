#pragma once

// Umbrella header for the Kantorovich Jakimovski-Leviatan operator lab.

#include "jaklev/appell.hpp"
#include "jaklev/certificates.hpp"
#include "jaklev/config.hpp"
#include "jaklev/convergence.hpp"
#include "jaklev/csv.hpp"
#include "jaklev/errors.hpp"
#include "jaklev/modulus.hpp"
#include "jaklev/moments.hpp"
#include "jaklev/operators.hpp"
#include "jaklev/parallel.hpp"
#include "jaklev/poisson.hpp"
#include "jaklev/quadrature.hpp"
#include "jaklev/regression.hpp"
#include "jaklev/runner.hpp"
#include "jaklev/scale.hpp"
#include "jaklev/test_function.hpp"
#include "jaklev/weighted.hpp"
#include "jaklev/weights.hpp"
