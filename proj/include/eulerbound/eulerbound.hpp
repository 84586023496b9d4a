#pragma once

#include "eulerbound/bigrat.hpp"
#include "eulerbound/poly.hpp"
#include "eulerbound/ratfunc.hpp"
#include "eulerbound/param_poly.hpp"
#include "eulerbound/series.hpp"
#include "eulerbound/bound_spec.hpp"
#include "eulerbound/expansion.hpp"
#include "eulerbound/interval.hpp"
#include "eulerbound/enclosure.hpp"
#include "eulerbound/positivity.hpp"
#include "eulerbound/prover.hpp"
#include "eulerbound/keller.hpp"
#include "eulerbound/carleman.hpp"
#include "eulerbound/render.hpp"
