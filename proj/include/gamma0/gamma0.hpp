#pragma once

#include "gamma0/cohyperation.hpp"
#include "gamma0/exact_seq.hpp"
#include "gamma0/hyperation.hpp"
#include "gamma0/laws.hpp"
#include "gamma0/notation.hpp"
#include "gamma0/ordinal.hpp"
#include "gamma0/sampling.hpp"
#include "gamma0/veblen.hpp"
