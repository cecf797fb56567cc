#pragma once

#include "bitplane_lab/bitplane.hpp"
#include "bitplane_lab/classify.hpp"
#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/denoise.hpp"
#include "bitplane_lab/error.hpp"
#include "bitplane_lab/feature_table.hpp"
#include "bitplane_lab/features.hpp"
#include "bitplane_lab/harness.hpp"
#include "bitplane_lab/image.hpp"
#include "bitplane_lab/metrics.hpp"
#include "bitplane_lab/parallel.hpp"
#include "bitplane_lab/report.hpp"
