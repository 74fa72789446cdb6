#pragma once

#include "bounds.hpp"
#include "circlenorm.hpp"
#include "errors.hpp"
#include "genverify.hpp"
#include "polycore.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
