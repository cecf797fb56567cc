#pragma once

#include "bitplane_lab/dataset.hpp"
#include "bitplane_lab/evaluate.hpp"
#include "bitplane_lab/forest.hpp"
#include "bitplane_lab/model_io.hpp"
#include "bitplane_lab/tree.hpp"
