#pragma once

#include "auxzeta/arg_track.hpp"
#include "auxzeta/calibrate.hpp"
#include "auxzeta/catalog_io.hpp"
#include "auxzeta/config.hpp"
#include "auxzeta/critical_line.hpp"
#include "auxzeta/errors.hpp"
#include "auxzeta/gamma.hpp"
#include "auxzeta/parallel.hpp"
#include "auxzeta/periodic.hpp"
#include "auxzeta/quadrature.hpp"
#include "auxzeta/rzeta.hpp"
#include "auxzeta/verify.hpp"
#include "auxzeta/version.hpp"
#include "auxzeta/xray.hpp"
#include "auxzeta/zeros.hpp"
#include "auxzeta/zeta.hpp"
#include "auxzeta/zeta_em.hpp"
