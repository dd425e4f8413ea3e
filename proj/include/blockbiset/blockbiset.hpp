#pragma once

#include "biset.hpp"
#include "brauer.hpp"
#include "catalog.hpp"
#include "charbiset.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "fusion.hpp"
#include "group_algebra.hpp"
#include "linalg.hpp"
#include "permgroup.hpp"
#include "report.hpp"
