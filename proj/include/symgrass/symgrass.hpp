#ifndef SYMGRASS_SYMGRASS_HPP
#define SYMGRASS_SYMGRASS_HPP

#include "symgrass/decomp.hpp"
#include "symgrass/falg.hpp"
#include "symgrass/invariants.hpp"
#include "symgrass/oracle.hpp"
#include "symgrass/poly.hpp"
#include "symgrass/symmetry.hpp"

#endif  // SYMGRASS_SYMGRASS_HPP
