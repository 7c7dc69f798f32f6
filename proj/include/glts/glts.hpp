#pragma once

#include "glts/algebra.hpp"
#include "glts/catalog.hpp"
#include "glts/checker.hpp"
#include "glts/dsl.hpp"
#include "glts/errors.hpp"
#include "glts/linalg.hpp"
#include "glts/report.hpp"
#include "glts/scalar.hpp"
#include "glts/substitution.hpp"
