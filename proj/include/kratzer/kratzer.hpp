#pragma once

#include "kratzer/constants.hpp"
#include "kratzer/eqr.hpp"
#include "kratzer/errors.hpp"
#include "kratzer/molecules.hpp"
#include "kratzer/numerov.hpp"
#include "kratzer/potential.hpp"
#include "kratzer/quadrature.hpp"
#include "kratzer/special_functions.hpp"
#include "kratzer/spectrum.hpp"
#include "kratzer/tables.hpp"
#include "kratzer/verify.hpp"
#include "kratzer/wavefunction.hpp"
