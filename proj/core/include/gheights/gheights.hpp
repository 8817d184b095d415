// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header: the full public surface of the library.
#ifndef GHEIGHTS_GHEIGHTS_HPP
#define GHEIGHTS_GHEIGHTS_HPP

#include "gheights/checks.hpp"
#include "gheights/cli.hpp"
#include "gheights/coeff.hpp"
#include "gheights/dimension.hpp"
#include "gheights/errors.hpp"
#include "gheights/free_module.hpp"
#include "gheights/groebner.hpp"
#include "gheights/ideal.hpp"
#include "gheights/ideal_ops.hpp"
#include "gheights/limits.hpp"
#include "gheights/matrix.hpp"
#include "gheights/module_tools.hpp"
#include "gheights/monomial.hpp"
#include "gheights/order.hpp"
#include "gheights/parser.hpp"
#include "gheights/polynomial.hpp"
#include "gheights/render.hpp"
#include "gheights/report.hpp"
#include "gheights/ring.hpp"
#include "gheights/session.hpp"
#include "gheights/sweep.hpp"

#endif
