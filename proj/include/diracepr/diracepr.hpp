#pragma once

#include "error.hpp"
#include "matrix.hpp"
#include "vectors.hpp"
#include "random.hpp"
#include "clifford.hpp"
#include "lorentz.hpp"
#include "amplitudes.hpp"
#include "spin.hpp"
#include "states.hpp"
#include "correlations.hpp"
#include "chsh.hpp"
#include "csv.hpp"
#include "figures.hpp"
#include "scan.hpp"
#include "verify.hpp"
