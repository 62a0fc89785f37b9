#pragma once

// Everything except the command-line front end (cli.hpp), which needs CLI11.

#include "cohom1/catalog.hpp"
#include "cohom1/classifier.hpp"
#include "cohom1/geometry.hpp"
#include "cohom1/lie.hpp"
#include "cohom1/random.hpp"
#include "cohom1/subalgebra.hpp"
#include "cohom1/verify.hpp"
