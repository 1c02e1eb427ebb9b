// Umbrella header for the whole toolkit.

#ifndef LFLAT_LFLAT_HPP
#define LFLAT_LFLAT_HPP

#include "lflat/cli.hpp"
#include "lflat/core.hpp"
#include "lflat/diagnostics.hpp"
#include "lflat/dsl.hpp"
#include "lflat/engine.hpp"
#include "lflat/mechanisms.hpp"
#include "lflat/recognize.hpp"
#include "lflat/show.hpp"
#include "lflat/transform.hpp"

#endif  // LFLAT_LFLAT_HPP
