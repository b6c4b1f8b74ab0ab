#pragma once

// Umbrella header: exact maximal-lottery solving, voting mechanisms, axiom
// checkers, and counterexample search over exact rational arithmetic.

#include <maxlot/alternatives.hpp>
#include <maxlot/enumeration.hpp>
#include <maxlot/errors.hpp>
#include <maxlot/example_profiles.hpp>
#include <maxlot/lottery.hpp>
#include <maxlot/mechanisms.hpp>
#include <maxlot/profile.hpp>
#include <maxlot/profile_io.hpp>
#include <maxlot/properties.hpp>
#include <maxlot/random.hpp>
#include <maxlot/rational.hpp>
#include <maxlot/report.hpp>
#include <maxlot/search.hpp>
#include <maxlot/solver.hpp>
#include <maxlot/ssb_matrix.hpp>
#include <maxlot/version.hpp>
#include <maxlot/weak_order.hpp>
