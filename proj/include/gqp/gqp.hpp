#pragma once

// Umbrella header: the whole library.

#include "gqp/bitmatrix.hpp"
#include "gqp/bridge.hpp"
#include "gqp/core.hpp"
#include "gqp/epsilon.hpp"
#include "gqp/errors.hpp"
#include "gqp/models.hpp"
#include "gqp/preference.hpp"
#include "gqp/rational.hpp"
#include "gqp/relation.hpp"
#include "gqp/report.hpp"
#include "gqp/result.hpp"
#include "gqp/search.hpp"
#include "gqp/textio.hpp"
