#pragma once

// Umbrella header for the weak-field gravito-electromagnetism toolkit.

#include "gemq/constants.hpp"
#include "gemq/dimension.hpp"
#include "gemq/errors.hpp"
#include "gemq/fock_oracle.hpp"
#include "gemq/gem_fields.hpp"
#include "gemq/quantity.hpp"
#include "gemq/sagnac.hpp"
#include "gemq/uncertainty.hpp"
#include "gemq/units.hpp"
#include "gemq/witness.hpp"
