#pragma once

#include "appendix.hpp"
#include "cli.hpp"
#include "constructions.hpp"
#include "density.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "shifting.hpp"
