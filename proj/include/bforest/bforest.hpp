#pragma once

#include "bforest/errors.hpp"
#include "bforest/numeric.hpp"
#include "bforest/polynomial.hpp"
#include "bforest/laurent.hpp"
#include "bforest/model.hpp"
#include "bforest/linalg.hpp"
#include "bforest/roots.hpp"
#include "bforest/closed_form.hpp"
#include "bforest/arithmetic.hpp"
#include "bforest/mahler.hpp"
#include "bforest/genfun.hpp"
