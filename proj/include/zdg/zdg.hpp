#pragma once

#include "zdg/analysis.hpp"
#include "zdg/dense_matrix.hpp"
#include "zdg/divisor_graph.hpp"
#include "zdg/eigen/jacobi.hpp"
#include "zdg/eigen/polynomial.hpp"
#include "zdg/eigen/spectrum.hpp"
#include "zdg/errors.hpp"
#include "zdg/join_spectrum.hpp"
#include "zdg/numtheory.hpp"
#include "zdg/zero_divisor_graph.hpp"
#include "zdg/record.hpp"
