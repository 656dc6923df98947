#pragma once

#include "sturmian/errors.hpp"
#include "sturmian/quad_number.hpp"
#include "sturmian/alpha.hpp"
#include "sturmian/words.hpp"
#include "sturmian/partition.hpp"
#include "sturmian/embedding.hpp"
#include "sturmian/interval.hpp"
#include "sturmian/intervals.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/measure.hpp"
#include "sturmian/symmetry.hpp"
#include "sturmian/localmove.hpp"
#include "sturmian/parse.hpp"
