// Umbrella header.
#pragma once

#include "strassen/rational.hpp"
#include "strassen/matrix.hpp"
#include "strassen/simplex.hpp"
#include "strassen/model.hpp"
#include "strassen/dominance.hpp"
#include "strassen/witness.hpp"
#include "strassen/oracle.hpp"
#include "strassen/generate.hpp"
#include "strassen/io.hpp"
