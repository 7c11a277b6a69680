#pragma once

#include "cofinite/constructions.hpp"
#include "cofinite/error.hpp"
#include "cofinite/geometry.hpp"
#include "cofinite/harness.hpp"
#include "cofinite/json_io.hpp"
#include "cofinite/rational.hpp"
#include "cofinite/regions.hpp"
#include "cofinite/svg.hpp"
#include "cofinite/verifier.hpp"
