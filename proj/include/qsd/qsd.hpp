#pragma once

#include <qsd/linalg.hpp>
#include <qsd/rng.hpp>
#include <qsd/ensembles.hpp>
#include <qsd/quadrature.hpp>
#include <qsd/limit_laws.hpp>
#include <qsd/constants.hpp>
#include <qsd/stats.hpp>
#include <qsd/distances.hpp>
#include <qsd/coherence.hpp>
#include <qsd/entanglement.hpp>
#include <qsd/kicked_top.hpp>
#include <qsd/experiments.hpp>
#include <qsd/output.hpp>
