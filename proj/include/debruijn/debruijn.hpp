// Umbrella header.
#pragma once

#include "linalg.hpp"
#include "markov.hpp"
#include "matrix.hpp"
#include "rates.hpp"
#include "rational.hpp"
#include "simulate.hpp"
#include "specials.hpp"
#include "spectrum.hpp"
#include "stationary.hpp"
#include "verify.hpp"
#include "word.hpp"
