#ifndef CYCLO_CYCLO_HPP
#define CYCLO_CYCLO_HPP

#include "binary_cyclotomic.hpp"
#include "bounds.hpp"
#include "chi_map.hpp"
#include "coefficient_vector.hpp"
#include "dense_oracle.hpp"
#include "errors.hpp"
#include "ntheory.hpp"
#include "search.hpp"
#include "ternary_height.hpp"

#endif
