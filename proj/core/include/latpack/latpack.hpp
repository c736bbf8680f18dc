#pragma once

#include "latpack/caps.hpp"
#include "latpack/constructions.hpp"
#include "latpack/corpus.hpp"
#include "latpack/error.hpp"
#include "latpack/group.hpp"
#include "latpack/matrix.hpp"
#include "latpack/permutation.hpp"
#include "latpack/ring.hpp"
#include "latpack/verify.hpp"
