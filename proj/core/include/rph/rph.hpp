#pragma once

#include "rph/braess.hpp"
#include "rph/chain_complex.hpp"
#include "rph/dag.hpp"
#include "rph/dimension_laws.hpp"
#include "rph/error.hpp"
#include "rph/exact_rank.hpp"
#include "rph/robust_paths.hpp"
#include "rph/route.hpp"
#include "rph/route_simplex.hpp"
#include "rph/sp_recognition.hpp"
