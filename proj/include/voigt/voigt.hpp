#pragma once

#include "voigt/cerf.hpp"
#include "voigt/contour.hpp"
#include "voigt/core.hpp"
#include "voigt/evaluate.hpp"
#include "voigt/foxh_meijer.hpp"
#include "voigt/gamma.hpp"
#include "voigt/mellin_barnes.hpp"
#include "voigt/method_report.hpp"
#include "voigt/oracle.hpp"
#include "voigt/profiles.hpp"
