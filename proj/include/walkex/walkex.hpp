#pragma once

#include "walkex/bit_matrix.hpp"
#include "walkex/canonical.hpp"
#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/matrix_io.hpp"
#include "walkex/oracle.hpp"
#include "walkex/recognize.hpp"
#include "walkex/search.hpp"
#include "walkex/verify.hpp"
#include "walkex/walks.hpp"
