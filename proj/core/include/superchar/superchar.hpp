#pragma once

#include "superchar/base_forest.hpp"
#include "superchar/dominance.hpp"
#include "superchar/fourier_motzkin.hpp"
#include "superchar/linalg.hpp"
#include "superchar/rational.hpp"
#include "superchar/root_datum.hpp"
#include "superchar/short_basis.hpp"
#include "superchar/weight.hpp"
#include "superchar/xi_ring.hpp"
