#pragma once

#include "verona/calculus.hpp"
#include "verona/error.hpp"
#include "verona/exact_linalg.hpp"
#include "verona/grass_curve.hpp"
#include "verona/integrability.hpp"
#include "verona/interpolation.hpp"
#include "verona/matrix.hpp"
#include "verona/minors.hpp"
#include "verona/multipoly.hpp"
#include "verona/projective.hpp"
#include "verona/scalar.hpp"
#include "verona/unipoly.hpp"
#include "verona/webs.hpp"
