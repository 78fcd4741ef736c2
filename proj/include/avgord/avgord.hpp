#pragma once

#include "avgord/bounds.hpp"
#include "avgord/catalog.hpp"
#include "avgord/census.hpp"
#include "avgord/classifier.hpp"
#include "avgord/errors.hpp"
#include "avgord/families.hpp"
#include "avgord/isomorphism.hpp"
#include "avgord/lattice.hpp"
#include "avgord/number.hpp"
#include "avgord/order_stats.hpp"
#include "avgord/perm_group.hpp"
#include "avgord/permutation.hpp"
#include "avgord/rational.hpp"
#include "avgord/report.hpp"
#include "avgord/structure.hpp"
#include "avgord/subgroups.hpp"
