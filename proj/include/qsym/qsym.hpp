#pragma once

// Umbrella header.

#include "qsym/errors.hpp"
#include "qsym/permutation.hpp"
#include "qsym/cayley_table.hpp"
#include "qsym/sigma.hpp"
#include "qsym/parastrophe.hpp"
#include "qsym/isotopy.hpp"
#include "qsym/group.hpp"
#include "qsym/decomposition.hpp"
#include "qsym/classifier.hpp"
#include "qsym/linear.hpp"
#include "qsym/groups.hpp"
#include "qsym/random.hpp"
#include "qsym/table_io.hpp"
