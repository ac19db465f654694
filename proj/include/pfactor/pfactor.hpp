#pragma once

#include "pfactor/audit.hpp"
#include "pfactor/enumerate.hpp"
#include "pfactor/error.hpp"
#include "pfactor/extremal.hpp"
#include "pfactor/factors.hpp"
#include "pfactor/graph.hpp"
#include "pfactor/graph6.hpp"
#include "pfactor/polynomial.hpp"
#include "pfactor/random.hpp"
#include "pfactor/rational.hpp"
#include "pfactor/serialize.hpp"
#include "pfactor/spectral.hpp"
