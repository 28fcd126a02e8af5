#pragma once

#include "bandhs/bandit.hpp"
#include "bandhs/decimation.hpp"
#include "bandhs/formula.hpp"
#include "bandhs/harness.hpp"
#include "bandhs/oracle.hpp"
#include "bandhs/search_state.hpp"
#include "bandhs/solver.hpp"
#include "bandhs/wcnf.hpp"
