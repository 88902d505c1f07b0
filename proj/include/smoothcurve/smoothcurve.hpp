#pragma once

#include "smoothcurve/error.hpp"
#include "smoothcurve/kernel.hpp"
#include "smoothcurve/linreg.hpp"
#include "smoothcurve/loess.hpp"
#include "smoothcurve/outliers.hpp"
#include "smoothcurve/savgol.hpp"
#include "smoothcurve/series.hpp"
#include "smoothcurve/smoother.hpp"
#include "smoothcurve/splines.hpp"
#include "smoothcurve/torsion.hpp"
