#pragma once

/// Umbrella header for the whole library.

#include "sela/scalar.hpp"
#include "sela/exactla.hpp"
#include "sela/algebra.hpp"
#include "sela/symid.hpp"
#include "sela/symtensor.hpp"
#include "sela/liealg.hpp"
#include "sela/envelope.hpp"
#include "sela/seligman.hpp"
#include "sela/weylmod.hpp"
#include "sela/report.hpp"
#include "sela/verify.hpp"
