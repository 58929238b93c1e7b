#ifndef BORDA_RANGE_BORDA_RANGE_HPP
#define BORDA_RANGE_BORDA_RANGE_HPP

#include "borda_range/classifier.hpp"
#include "borda_range/constructions.hpp"
#include "borda_range/core.hpp"
#include "borda_range/decomposer.hpp"
#include "borda_range/io.hpp"
#include "borda_range/oracle.hpp"

#endif  // BORDA_RANGE_BORDA_RANGE_HPP
