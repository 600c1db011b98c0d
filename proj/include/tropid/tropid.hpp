#pragma once

#include "tropid/dominance.hpp"
#include "tropid/error.hpp"
#include "tropid/factor3.hpp"
#include "tropid/gen.hpp"
#include "tropid/io.hpp"
#include "tropid/matrix.hpp"
#include "tropid/permanent.hpp"
#include "tropid/permutation.hpp"
#include "tropid/rational.hpp"
#include "tropid/suites.hpp"
#include "tropid/words.hpp"
