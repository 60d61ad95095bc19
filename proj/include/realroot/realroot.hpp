#ifndef REALROOT_REALROOT_HPP
#define REALROOT_REALROOT_HPP

#include "realroot/errors.hpp"
#include "realroot/forms.hpp"
#include "realroot/harness.hpp"
#include "realroot/polynomial.hpp"
#include "realroot/power_sums.hpp"
#include "realroot/psd.hpp"
#include "realroot/rational.hpp"
#include "realroot/root_finder.hpp"
#include "realroot/sturm.hpp"
#include "realroot/witness.hpp"

#endif
