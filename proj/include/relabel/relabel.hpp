#pragma once

#include "relabel/errors.hpp"
#include "relabel/exact_path.hpp"
#include "relabel/exact_star.hpp"
#include "relabel/graph.hpp"
#include "relabel/labeling.hpp"
#include "relabel/oracle.hpp"
#include "relabel/perm.hpp"
#include "relabel/privileged.hpp"
#include "relabel/reductions.hpp"
#include "relabel/transform.hpp"
