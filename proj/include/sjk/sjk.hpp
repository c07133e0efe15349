#pragma once

#include "sjk/catalog/families.hpp"
#include "sjk/catalog/topology.hpp"
#include "sjk/cli/run.hpp"
#include "sjk/csc/csc.hpp"
#include "sjk/errors.hpp"
#include "sjk/exact/linear.hpp"
#include "sjk/exact/polynomial.hpp"
#include "sjk/exact/rational.hpp"
#include "sjk/exact/roots.hpp"
#include "sjk/io/catalog_file.hpp"
#include "sjk/io/json.hpp"
#include "sjk/io/render.hpp"
#include "sjk/io/seed_file.hpp"
#include "sjk/join/join.hpp"
#include "sjk/join/types.hpp"
#include "sjk/parallel.hpp"
#include "sjk/se/se.hpp"
