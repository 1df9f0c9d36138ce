#pragma once

#include <qav/common.hpp>
#include <qav/rational.hpp>
#include <qav/scalar.hpp>
#include <qav/freealg.hpp>
#include <qav/dist.hpp>
#include <qav/matrix.hpp>
#include <qav/gauss.hpp>
#include <qav/realizations.hpp>
#include <qav/evalrep.hpp>
#include <qav/report.hpp>
#include <qav/suites.hpp>
