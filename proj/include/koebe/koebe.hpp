#pragma once

// Umbrella header: pulls in the whole library.

#include "koebe/boundary.hpp"
#include "koebe/certify.hpp"
#include "koebe/chebyshev.hpp"
#include "koebe/families.hpp"
#include "koebe/interval.hpp"
#include "koebe/polynomial.hpp"
#include "koebe/radii.hpp"
#include "koebe/sturm.hpp"
