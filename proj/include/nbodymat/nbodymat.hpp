#pragma once

#include "nbodymat/analysis.hpp"
#include "nbodymat/builders.hpp"
#include "nbodymat/determinant.hpp"
#include "nbodymat/domain.hpp"
#include "nbodymat/errors.hpp"
#include "nbodymat/forms.hpp"
#include "nbodymat/linalg.hpp"
#include "nbodymat/matrix.hpp"
#include "nbodymat/pair_space.hpp"
#include "nbodymat/poly.hpp"
#include "nbodymat/rational.hpp"
#include "nbodymat/scalar.hpp"
#include "nbodymat/symbolic.hpp"
#include "nbodymat/io.hpp"
#include "nbodymat/random.hpp"
#include "nbodymat/verify.hpp"
