#pragma once

#include "e6cs/characters.hpp"
#include "e6cs/errors.hpp"
#include "e6cs/lattice.hpp"
#include "e6cs/operator.hpp"
#include "e6cs/polynomial.hpp"
#include "e6cs/rational.hpp"
#include "e6cs/serialization.hpp"
#include "e6cs/tensor.hpp"
