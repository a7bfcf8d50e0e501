#pragma once

#include "sparsenerve/covering.hpp"
#include "sparsenerve/filtration.hpp"
#include "sparsenerve/metric.hpp"
#include "sparsenerve/oracle.hpp"
#include "sparsenerve/presentation.hpp"
#include "sparsenerve/presentation_io.hpp"
#include "sparsenerve/sampling.hpp"
#include "sparsenerve/simplex.hpp"
