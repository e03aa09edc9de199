#pragma once

#include "heckelab/exact.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/poly_matrix.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/hecke_oracle.hpp"
#include "heckelab/intersect.hpp"
#include "heckelab/matrix_m.hpp"
#include "heckelab/resultant.hpp"
#include "heckelab/io.hpp"
#include "heckelab/suites.hpp"
