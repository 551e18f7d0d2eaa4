// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header.

#pragma once

#include "groupcb/elo.hpp"
#include "groupcb/error.hpp"
#include "groupcb/fetch.hpp"
#include "groupcb/indices.hpp"
#include "groupcb/load.hpp"
#include "groupcb/normalize.hpp"
#include "groupcb/ranking.hpp"
#include "groupcb/reference_series.hpp"
#include "groupcb/season.hpp"
#include "groupcb/snapshot.hpp"
#include "groupcb/special_functions.hpp"
#include "groupcb/stats.hpp"
#include "groupcb/types.hpp"
