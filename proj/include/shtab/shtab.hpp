#pragma once

#include "bender_knuth.hpp"
#include "evacuation.hpp"
#include "growth.hpp"
#include "io.hpp"
#include "jdt.hpp"
#include "letter.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "switching.hpp"
#include "tableau.hpp"
#include "universe.hpp"
#include "word.hpp"
