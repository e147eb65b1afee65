#pragma once

#include "pencil/analysis.hpp"
#include "pencil/coupled.hpp"
#include "pencil/decomposition.hpp"
#include "pencil/dissipativity.hpp"
#include "pencil/errors.hpp"
#include "pencil/integrator.hpp"
#include "pencil/io.hpp"
#include "pencil/models.hpp"
#include "pencil/numeric.hpp"
#include "pencil/radiality.hpp"
#include "pencil/resolvent.hpp"
#include "pencil/types.hpp"
