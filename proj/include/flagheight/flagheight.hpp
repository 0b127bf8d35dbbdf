#pragma once

#include "flagheight/cones.hpp"
#include "flagheight/errors.hpp"
#include "flagheight/gz.hpp"
#include "flagheight/height.hpp"
#include "flagheight/hn_input.hpp"
#include "flagheight/polytope.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"
#include "flagheight/weyl.hpp"
