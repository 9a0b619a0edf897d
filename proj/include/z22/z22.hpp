#pragma once

#include "z22/algebra.hpp"
#include "z22/catalog.hpp"
#include "z22/grading.hpp"
#include "z22/io.hpp"
#include "z22/jacobi.hpp"
#include "z22/matrix.hpp"
#include "z22/oscillator.hpp"
#include "z22/rational.hpp"
#include "z22/solver.hpp"
#include "z22/structure.hpp"
