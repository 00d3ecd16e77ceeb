#pragma once

// Umbrella header for the whole library.

#include "degraph/arith.hpp"
#include "degraph/cli.hpp"
#include "degraph/degrees.hpp"
#include "degraph/family.hpp"
#include "degraph/graph.hpp"
#include "degraph/io.hpp"
#include "degraph/verify.hpp"
