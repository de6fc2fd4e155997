#pragma once

#include "subord_lab/bounds.hpp"
#include "subord_lab/error.hpp"
#include "subord_lab/figures.hpp"
#include "subord_lab/fnspec.hpp"
#include "subord_lab/proofcheck.hpp"
#include "subord_lab/regions.hpp"
#include "subord_lab/report.hpp"
#include "subord_lab/solutions.hpp"
#include "subord_lab/special.hpp"
#include "subord_lab/subord.hpp"
