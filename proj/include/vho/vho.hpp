#pragma once

#include "vho/ahp.hpp"
#include "vho/config.hpp"
#include "vho/criticality.hpp"
#include "vho/decision_matrix.hpp"
#include "vho/error.hpp"
#include "vho/normalize.hpp"
#include "vho/ranking.hpp"
#include "vho/report.hpp"
#include "vho/rng.hpp"
#include "vho/simulator.hpp"
#include "vho/traffic.hpp"
#include "vho/version.hpp"
