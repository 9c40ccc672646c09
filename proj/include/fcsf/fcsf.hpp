#pragma once

#include "fcsf/campaign.hpp"
#include "fcsf/certify.hpp"
#include "fcsf/color_set.hpp"
#include "fcsf/construct.hpp"
#include "fcsf/errors.hpp"
#include "fcsf/graph.hpp"
#include "fcsf/io.hpp"
#include "fcsf/oracle.hpp"
#include "fcsf/theorems.hpp"
