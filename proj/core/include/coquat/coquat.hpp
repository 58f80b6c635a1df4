#pragma once

#include "coquat/algebra.hpp"
#include "coquat/coq_poly.hpp"
#include "coquat/errors.hpp"
#include "coquat/real_poly.hpp"
#include "coquat/root_finder.hpp"
#include "coquat/tolerances.hpp"
#include "coquat/verify.hpp"
