// Copyright 2026 The susy-ncs Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header.
#pragma once

#include <susy_ncs/errors.hpp>
#include <susy_ncs/hypergeom.hpp>
#include <susy_ncs/state.hpp>
#include <susy_ncs/uncertainty.hpp>
#include <susy_ncs/fock.hpp>
#include <susy_ncs/coherent.hpp>
#include <susy_ncs/susy.hpp>
#include <susy_ncs/nlscs.hpp>
#include <susy_ncs/geomphase.hpp>
