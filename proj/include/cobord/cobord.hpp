#pragma once
// Umbrella header.

#include "cobord/cells.hpp"
#include "cobord/error.hpp"
#include "cobord/expr.hpp"
#include "cobord/homology.hpp"
#include "cobord/json_io.hpp"
#include "cobord/kink.hpp"
#include "cobord/lorentz.hpp"
#include "cobord/manifold.hpp"
#include "cobord/selection.hpp"
#include "cobord/witness.hpp"
